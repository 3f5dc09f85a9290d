use crate::cert::{format_vector, tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::hopf::{section_of_quotient, CoalgebraData, HopfAlgebra};
use crate::linalg::{kernel_of, LinMap, Subspace};
use crate::rep::{Comodule, Side};

use super::CoidealSubalgebra;

/// A quotient left `H`-module coalgebra `π : H ↠ B` with `σ : H⊗B → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientModuleCoalgebra {
    hopf: HopfAlgebra,
    b: CoalgebraData,
    pi: LinMap,
    sigma: LinMap,
}

impl QuotientModuleCoalgebra {
    /// Verifies every invariant and rejects with the first failure.
    pub fn new(hopf: &HopfAlgebra, b: CoalgebraData, pi: LinMap, sigma: LinMap) -> Result<QuotientModuleCoalgebra> {
        ensure_dim("projection rows", b.dim(), pi.rows())?;
        ensure_dim("projection columns", hopf.dim(), pi.cols())?;
        ensure_dim("module map rows", b.dim(), sigma.rows())?;
        ensure_dim("module map columns", hopf.dim() * b.dim(), sigma.cols())?;
        let q = QuotientModuleCoalgebra {
            hopf: hopf.clone(),
            b,
            pi,
            sigma,
        };
        let r = q.check();
        if let Some(c) = r.first_failure() {
            return Err(Error::violation(format!(
                "{} fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(q)
    }

    /// `H/I` for a subspace `I` that is a coideal and a left ideal.
    pub fn from_ideal(hopf: &HopfAlgebra, ideal: &Subspace) -> Result<QuotientModuleCoalgebra> {
        let labels = hopf.coalgebra().quotient_labels(ideal);
        let (b, pi) = hopf.coalgebra().quotient(ideal, labels)?;
        let sec = section_of_quotient(ideal);
        let sigma = pi.compose(hopf.mult()).compose(
            &LinMap::identity(hopf.field(), hopf.dim()).kron(&sec),
        );
        QuotientModuleCoalgebra::new(hopf, b, pi, sigma)
    }

    /// `π = id`, `B = H`.
    pub fn identity(hopf: &HopfAlgebra) -> QuotientModuleCoalgebra {
        QuotientModuleCoalgebra::from_ideal(hopf, &Subspace::zero(hopf.field(), hopf.dim()))
            .expect("zero is a coideal and a left ideal")
    }

    /// `π = ε`, `B = k`.
    pub fn counit(hopf: &HopfAlgebra) -> QuotientModuleCoalgebra {
        QuotientModuleCoalgebra::from_ideal(hopf, &kernel_of(hopf.counit()))
            .expect("ker ε is a coideal and a left ideal")
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn b(&self) -> &CoalgebraData {
        &self.b
    }

    pub fn pi(&self) -> &LinMap {
        &self.pi
    }

    pub fn sigma(&self) -> &LinMap {
        &self.sigma
    }

    pub fn dim(&self) -> usize {
        self.b.dim()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_of(&self.pi)
    }

    pub fn check(&self) -> CheckReport {
        let h = &self.hopf;
        let f = h.field();
        let (d, k) = (h.dim(), self.b.dim());
        let lh = h.labels();
        let lb = self.b.labels();
        let mut r = CheckReport::new();

        let rank = self.pi.rank();
        r.push(
            "projection surjective",
            rank == k,
            Some(format!("rank {rank} < {k}")),
        );
        r.absorb("", self.b.check());
        let ker = self.kernel();
        let w = h.coalgebra().coideal_witness(&ker);
        r.push("kernel is a coideal", w.is_none(), w);
        let mut bad = None;
        'outer: for i in 0..d {
            for v in ker.basis() {
                if !ker.contains(&h.product(&h.basis(i), v)) {
                    bad = Some(format!("{}·({})", lh[i], format_vector(v, lh)));
                    break 'outer;
                }
            }
        }
        r.push("kernel is a left ideal", bad.is_none(), bad);
        match h.coalgebra().check_morphism(&self.b, &self.pi) {
            Ok(m) => r.absorb("projection ", m),
            Err(e) => r.fail("projection comultiplicative", e.to_string()),
        }

        let idb = LinMap::identity(f, k);
        let idh = LinMap::identity(f, d);
        let assoc_l = self.sigma.compose(&idh.kron(&self.sigma));
        let assoc_r = self.sigma.compose(&h.mult().kron(&idb));
        r.compare("action associative", &assoc_l, &assoc_r, &|j| {
            tensor_label(j, &[lh, lh, lb])
        });
        let unit = self.sigma.compose(&h.unit().kron(&idb));
        r.compare("action unital", &unit, &idb, &|j| lb[j].clone());
        let lin_l = self.pi.compose(h.mult());
        let lin_r = self.sigma.compose(&idh.kron(&self.pi));
        r.compare("projection H-linear", &lin_l, &lin_r, &|j| {
            tensor_label(j, &[lh, lh])
        });
        r
    }

    /// `H` as a left `B`-comodule via `(π⊗id)Δ`.
    pub fn hopf_as_left_comodule(&self) -> Comodule {
        Comodule::regular(Side::Left, self.hopf.coalgebra()).corestrict_unchecked(&self.b, &self.pi)
    }

    /// `H` as a right `B`-comodule via `(id⊗π)Δ`.
    pub fn hopf_as_right_comodule(&self) -> Comodule {
        Comodule::regular(Side::Right, self.hopf.coalgebra()).corestrict_unchecked(&self.b, &self.pi)
    }

    /// `π(1)`.
    pub fn base_point(&self) -> crate::linalg::SVec {
        self.pi.apply(&self.hopf.one())
    }
}

/// `H_A = H/HA⁺` with its induced structure.
pub fn quotient_module_coalgebra(a: &CoidealSubalgebra) -> Result<QuotientModuleCoalgebra> {
    let ideal = a.left_ideal();
    QuotientModuleCoalgebra::from_ideal(a.hopf(), &ideal)
}

/// The coinvariants `{h : π(h₁)⊗h₂ = π(1)⊗h}`, verified as a right coideal subalgebra.
pub fn coinvariants(q: &QuotientModuleCoalgebra) -> Result<CoidealSubalgebra> {
    let h = q.hopf();
    let f = h.field();
    let lhs = q.pi().kron(&LinMap::identity(f, h.dim())).compose(h.comult());
    let base = LinMap::from_columns(f, q.dim(), vec![q.base_point()]);
    let rhs = base.kron(&LinMap::identity(f, h.dim()));
    let space = kernel_of(&lhs.sub(&rhs));
    CoidealSubalgebra::new(h, &space)
}

/// An explicit coalgebra isomorphism `φ : B' → B` with `φ∘π' = π`, if any.
pub fn quotient_isomorphism(from: &QuotientModuleCoalgebra, to: &QuotientModuleCoalgebra) -> Option<LinMap> {
    if from.dim() != to.dim() || from.hopf() != to.hopf() {
        return None;
    }
    let sec = section_of_quotient(&from.kernel());
    // π' is the non-pivot projection of its kernel, so π'∘sec = id
    if !from.pi().compose(&sec).is_identity() {
        return None;
    }
    let phi = to.pi().compose(&sec);
    let commutes = phi.compose(from.pi()) == *to.pi();
    let coalg = from
        .b()
        .check_morphism(to.b(), &phi)
        .map(|r| r.all_hold())
        .unwrap_or(false);
    (commutes && coalg && phi.is_invertible()).then_some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, subgroup_data, sweedler4, FiniteGroupTable};
    use crate::linalg::Field;

    #[test]
    fn sweedler_quotient_and_back() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.check().all_hold());
        assert_eq!(coinvariants(&q).unwrap().space(), a.space());
        assert!(quotient_isomorphism(&q, &q).unwrap().is_identity());
    }

    #[test]
    fn extreme_quotients() {
        let h = sweedler4();
        let id = QuotientModuleCoalgebra::identity(&h);
        assert_eq!(id.dim(), 4);
        assert_eq!(coinvariants(&id).unwrap().space(), &Subspace::span(h.field(), 4, vec![h.one()]));
        let eps = QuotientModuleCoalgebra::counit(&h);
        assert_eq!(eps.dim(), 1);
        assert!(coinvariants(&eps).unwrap().space().is_full());
    }

    #[test]
    fn restriction_to_a_subgroup_matches_the_generic_quotient() {
        let s3 = FiniteGroupTable::symmetric3();
        let (a, q) = subgroup_data(Field::Rational, &s3, &[0, 1]).unwrap();
        assert_eq!((a.dim(), q.dim()), (3, 2));
        let generic = quotient_module_coalgebra(&a).unwrap();
        assert!(quotient_isomorphism(&generic, &q).is_some());
        assert_eq!(coinvariants(&q).unwrap().space(), a.space());
    }

    #[test]
    fn bad_module_map_is_rejected() {
        let h = function_algebra(Field::Rational, &FiniteGroupTable::cyclic(2));
        let q = QuotientModuleCoalgebra::counit(&h);
        let f = h.field();
        let zero_sigma = LinMap::zero(f, 1, 2);
        assert!(QuotientModuleCoalgebra::new(&h, q.b().clone(), q.pi().clone(), zero_sigma).is_err());
        let not_ideal = Subspace::span(f, 2, vec![h.basis(0)]);
        assert!(QuotientModuleCoalgebra::from_ideal(&h, &not_ideal).is_err());
    }
}
