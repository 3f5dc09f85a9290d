//! Coideal subalgebras, quotient module coalgebras and the correspondence
//! between them.

mod coideal;
mod flatness;
mod mw;
mod quotient;

pub use coideal::{coideal_annihilator, coideal_subalgebra_report, CoidealSubalgebra, HitConvention};
pub use flatness::{
    faithfully_flat_over, flatness_oracle, flatness_oracle_over, is_faithfully_coflat,
    is_faithfully_flat, module_flatness, sequence_family, FlatnessEvidence, OracleVerdict,
    ShortSequence,
};
pub use mw::{counit_map, mw_equivalence_check, phi, psi, unit_map, MwObjectCheck, MwReport};
pub use quotient::{coinvariants, quotient_isomorphism, quotient_module_coalgebra, QuotientModuleCoalgebra};

use serde::Serialize;

use crate::error::Result;
use crate::hopf::{AlgebraData, Pairing};
use crate::linalg::{LinMap, Subspace};
use crate::rep::{is_cosemisimple, is_semisimple_module, Module, Side};

/// Outcome of one round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub name: String,
    pub exact: bool,
    pub detail: String,
    /// For quotients: the computed isomorphism `B' → B`.
    pub witness: Option<LinMap>,
}

/// `A ↦ H_A ↦ coinvariants` must return `A` exactly.
pub fn roundtrip_subalgebra(name: &str, a: &CoidealSubalgebra) -> Result<RoundTrip> {
    let q = quotient_module_coalgebra(a)?;
    let back = coinvariants(&q)?;
    let exact = back.space() == a.space();
    Ok(RoundTrip {
        name: name.into(),
        exact,
        detail: format!("dim A = {}, dim H_A = {}, dim recovered = {}", a.dim(), q.dim(), back.dim()),
        witness: None,
    })
}

/// `Q ↦ coinvariants ↦ H/H(coinvariants)⁺` must be isomorphic to `Q` over `H`.
pub fn roundtrip_quotient(name: &str, q: &QuotientModuleCoalgebra) -> Result<RoundTrip> {
    let a = coinvariants(q)?;
    let back = quotient_module_coalgebra(&a)?;
    let witness = quotient_isomorphism(&back, q);
    Ok(RoundTrip {
        name: name.into(),
        exact: witness.is_some(),
        detail: format!("dim B = {}, dim coinvariants = {}, dim rebuilt = {}", q.dim(), a.dim(), back.dim()),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantumLabel {
    QuantumHomogeneousSpace,
    QuantumSubgroup,
    Neither,
}

impl std::fmt::Display for QuantumLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            QuantumLabel::QuantumHomogeneousSpace => "quantum-homogeneous-space",
            QuantumLabel::QuantumSubgroup => "quantum-subgroup",
            QuantumLabel::Neither => "neither",
        })
    }
}

/// A coideal subalgebra is a quantum homogeneous space when `H` is
/// faithfully flat over it on both sides.
pub fn classify_subalgebra(a: &CoidealSubalgebra) -> Result<(QuantumLabel, Vec<FlatnessEvidence>)> {
    let ev = vec![is_faithfully_flat(a, Side::Left)?, is_faithfully_flat(a, Side::Right)?];
    let label = if ev.iter().all(|e| e.faithfully_flat) {
        QuantumLabel::QuantumHomogeneousSpace
    } else {
        QuantumLabel::Neither
    };
    Ok((label, ev))
}

/// A quotient module coalgebra is a quantum subgroup when `H` is faithfully
/// coflat over it on both sides.
pub fn classify_quotient(q: &QuotientModuleCoalgebra) -> Result<(QuantumLabel, Vec<FlatnessEvidence>)> {
    let ev = vec![is_faithfully_coflat(q, Side::Left)?, is_faithfully_coflat(q, Side::Right)?];
    let label = if ev.iter().all(|e| e.faithfully_flat) {
        QuantumLabel::QuantumSubgroup
    } else {
        QuantumLabel::Neither
    };
    Ok((label, ev))
}

/// Classifies a candidate subspace, answering `neither` with the failed
/// certificate when it is not a coideal subalgebra.
pub fn classify_candidate(h: &crate::hopf::HopfAlgebra, s: &Subspace) -> Result<(QuantumLabel, String)> {
    match CoidealSubalgebra::new(h, s) {
        Ok(a) => {
            let (label, _) = classify_subalgebra(&a)?;
            Ok((label, "certificates pass".into()))
        }
        Err(e) => Ok((QuantumLabel::Neither, e.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityImplication {
    pub hypothesis: bool,
    pub per_module: Vec<bool>,
    pub cosemisimple: bool,
    pub flat_left: bool,
    pub flat_right: bool,
    pub convention: HitConvention,
    pub subalgebra_dim: usize,
    pub quotient_dim: usize,
}

impl SemisimplicityImplication {
    pub fn conclusions(&self) -> bool {
        self.cosemisimple && self.flat_left && self.flat_right
    }

    /// A false hypothesis makes the implication hold vacuously.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.conclusions()
    }
}

/// Evaluates "K semisimple on every module of 𝒞 ⟹ C cosemisimple and H
/// faithfully flat over A", where `A` annihilates `K⁺` under the hit action.
pub fn c_semisimple_implication(p: &Pairing, k: &Subspace, modules: &[Module]) -> Result<SemisimplicityImplication> {
    let u = p.u();
    let labels = (0..k.dim()).map(|i| format!("k{i}")).collect();
    let k_alg: AlgebraData = u.algebra().restrict_to(k, labels)?;
    let mut per_module = Vec::with_capacity(modules.len());
    for m in modules {
        let r = m.restrict(&k_alg, &k.inclusion())?;
        per_module.push(is_semisimple_module(&r)?);
    }
    let hypothesis = per_module.iter().all(|&b| b);
    let (a, convention) = coideal_annihilator(p, k)?;
    let q = quotient_module_coalgebra(&a)?;
    let cosemisimple = is_cosemisimple(q.b())?;
    let flat_left = is_faithfully_flat(&a, Side::Left)?.faithfully_flat;
    let flat_right = is_faithfully_flat(&a, Side::Right)?.faithfully_flat;
    Ok(SemisimplicityImplication {
        hypothesis,
        per_module,
        cosemisimple,
        flat_left,
        flat_right,
        convention,
        subalgebra_dim: a.dim(),
        quotient_dim: q.dim(),
    })
}
