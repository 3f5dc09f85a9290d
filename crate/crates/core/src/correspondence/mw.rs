use crate::error::{Error, Result};
use crate::hopf::section_of_quotient;
use crate::linalg::{restrict, LinMap, Subspace};
use crate::rep::{cotensor, Comodule, Module, RelHopfModule, Side};

use super::{CoidealSubalgebra, QuotientModuleCoalgebra};

/// `Φ(M) = M/MA⁺` with its `H_A`-coaction, and the quotient map `M → Φ(M)`.
pub fn phi(a: &CoidealSubalgebra, q: &QuotientModuleCoalgebra, m: &RelHopfModule) -> Result<(Comodule, LinMap)> {
    let f = a.hopf().field();
    let mut vs = Vec::new();
    for v in a.augmentation_ideal().basis() {
        let coords = a
            .space()
            .coordinates(v)
            .expect("A⁺ lies in A");
        let act = m.module().act_by_element(&coords);
        vs.extend(act.columns().iter().cloned());
    }
    let mam = Subspace::span(f, m.dim(), vs);
    let qm = mam.quotient_map();
    let sec = section_of_quotient(&mam);
    let lift = qm.kron(q.pi()).compose(m.comodule().coaction());
    if !lift.compose(&mam.inclusion()).is_zero() {
        return Err(Error::violation("induced coaction on M/MA⁺ is not well defined"));
    }
    let coaction = lift.compose(&sec);
    let comodule = Comodule::unlabelled(Side::Right, q.b().clone(), coaction)?;
    Ok((comodule, qm))
}

/// `Ψ(N) = N □_{H_A} H` with `A` acting on the `H` leg; also returns the
/// carrier as a subspace of `N⊗H`.
pub fn psi(a: &CoidealSubalgebra, q: &QuotientModuleCoalgebra, n: &Comodule) -> Result<(RelHopfModule, Subspace)> {
    let h = a.hopf();
    let f = h.field();
    let carrier = cotensor(n, &q.hopf_as_left_comodule())?;
    let idn = LinMap::identity(f, n.dim());
    let big_comodule = Comodule::unlabelled(Side::Right, h.coalgebra().clone(), idn.kron(h.comult()))?;
    let act_h = h
        .mult()
        .compose(&LinMap::identity(f, h.dim()).kron(&a.inclusion()));
    let big_module = Module::unlabelled(Side::Right, a.algebra().clone(), idn.kron(&act_h))?;
    let big = RelHopfModule::new(a, big_comodule, big_module)?;
    Ok((big.restrict_to(&carrier)?, carrier))
}

/// `u_M : M → Ψ(Φ(M))`, `m ↦ (m₀ mod MA⁺)⊗m₁`.
pub fn unit_map(a: &CoidealSubalgebra, q: &QuotientModuleCoalgebra, m: &RelHopfModule) -> Result<LinMap> {
    let (phi_m, qm) = phi(a, q, m)?;
    let (_, carrier) = psi(a, q, &phi_m)?;
    let f = a.hopf().field();
    let raw = qm
        .kron(&LinMap::identity(f, a.hopf().dim()))
        .compose(m.comodule().coaction());
    restrict(&raw, &Subspace::full(f, m.dim()), &carrier)
}

/// `c_N : Φ(Ψ(N)) → N`, `(n⊗h mod) ↦ n ε(h)`.
pub fn counit_map(a: &CoidealSubalgebra, q: &QuotientModuleCoalgebra, n: &Comodule) -> Result<LinMap> {
    let (psi_n, carrier) = psi(a, q, n)?;
    let (_, qm) = phi(a, q, &psi_n)?;
    let f = a.hopf().field();
    let eval = LinMap::identity(f, n.dim())
        .kron(a.hopf().counit())
        .compose(&carrier.inclusion());
    // eval must vanish on Ψ(N)A⁺, the kernel of qm
    let ker = crate::linalg::kernel_of(&qm);
    if !eval.compose(&ker.inclusion()).is_zero() {
        return Err(Error::violation("counit map does not vanish on Ψ(N)A⁺"));
    }
    Ok(eval.compose(&section_of_quotient(&ker)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwObjectCheck {
    pub name: String,
    pub dim: usize,
    /// `dim Φ(M)` for relative Hopf modules, `dim Ψ(N)` for comodules.
    pub image_dim: usize,
    pub round_trip_dim: usize,
    pub rank: usize,
    pub bijective: bool,
    pub morphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwReport {
    pub units: Vec<MwObjectCheck>,
    pub counits: Vec<MwObjectCheck>,
}

impl MwReport {
    pub fn all_bijective(&self) -> bool {
        self.units
            .iter()
            .chain(&self.counits)
            .all(|c| c.bijective && c.morphism)
    }
}

/// Checks that `u_M` and `c_N` are bijective morphisms on every test object.
pub fn mw_equivalence_check(
    a: &CoidealSubalgebra,
    q: &QuotientModuleCoalgebra,
    modules: &[(String, RelHopfModule)],
    comodules: &[(String, Comodule)],
) -> Result<MwReport> {
    let mut units = Vec::new();
    for (name, m) in modules {
        let (phi_m, _) = phi(a, q, m)?;
        let (psi_phi, _) = psi(a, q, &phi_m)?;
        let u = unit_map(a, q, m)?;
        let rank = u.rank();
        units.push(MwObjectCheck {
            name: name.clone(),
            dim: m.dim(),
            image_dim: phi_m.dim(),
            round_trip_dim: psi_phi.dim(),
            rank,
            bijective: rank == m.dim() && rank == psi_phi.dim(),
            morphism: m.is_morphism(&psi_phi, &u),
        });
    }
    let mut counits = Vec::new();
    for (name, n) in comodules {
        let (psi_n, _) = psi(a, q, n)?;
        let (phi_psi, _) = phi(a, q, &psi_n)?;
        let c = counit_map(a, q, n)?;
        let rank = c.rank();
        counits.push(MwObjectCheck {
            name: name.clone(),
            dim: n.dim(),
            image_dim: psi_n.dim(),
            round_trip_dim: phi_psi.dim(),
            rank,
            bijective: rank == n.dim() && rank == phi_psi.dim(),
            morphism: phi_psi.is_colinear(n, &c),
        });
    }
    Ok(MwReport { units, counits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
    use crate::correspondence::quotient_module_coalgebra;
    use crate::linalg::Field;
    use crate::rep::simple_comodules;

    #[test]
    fn sweedler_objects_round_trip() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        let h_reg = RelHopfModule::hopf_regular(&a);
        let (phi_h, _) = phi(&a, &q, &h_reg).unwrap();
        // Φ(H) = H/HA⁺ = H_A
        assert_eq!(phi_h.dim(), q.dim());
        let (psi_k, _) = psi(&a, &q, &Comodule::trivial(Side::Right, q.b(), &q.base_point(), 1)).unwrap();
        // Ψ(k) = coinvariants = A
        assert_eq!(psi_k.dim(), a.dim());

        let modules = vec![("H".to_string(), h_reg), ("A".to_string(), RelHopfModule::subalgebra_regular(&a))];
        let mut comodules = vec![("H_A".to_string(), Comodule::regular(Side::Right, q.b()))];
        for (i, s) in simple_comodules(q.b()).unwrap().into_iter().enumerate() {
            comodules.push((format!("S{i}"), s));
        }
        let r = mw_equivalence_check(&a, &q, &modules, &comodules).unwrap();
        assert!(r.all_bijective(), "{r:?}");
        assert_eq!(r.counits.len(), 2);
    }

    #[test]
    fn subgroup_quotient_units_are_isomorphisms() {
        let s3 = FiniteGroupTable::symmetric3();
        let (a, q) = subgroup_data(Field::Rational, &s3, &[0, 1]).unwrap();
        let m = RelHopfModule::hopf_regular(&a);
        let u = unit_map(&a, &q, &m).unwrap();
        assert!(u.is_invertible());
        let n = Comodule::regular(Side::Right, q.b());
        assert!(counit_map(&a, &q, &n).unwrap().is_invertible());
    }
}
