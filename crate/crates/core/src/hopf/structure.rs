use crate::cert::{tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{Field, LinMap, SVec};

use super::{AlgebraData, CoalgebraData};

/// Axiom names reported by [`HopfAlgebra::check_axioms`], in report order.
pub const HOPF_AXIOMS: [&str; 8] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication multiplicative",
    "counit multiplicative",
    "antipode left",
    "antipode right",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    antipode: LinMap,
}

impl HopfAlgebra {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: LinMap) -> Result<HopfAlgebra> {
        ensure_dim("coalgebra dimension", algebra.dim(), coalgebra.dim())?;
        ensure_dim("antipode rows", algebra.dim(), antipode.rows())?;
        ensure_dim("antipode columns", algebra.dim(), antipode.cols())?;
        if algebra.labels() != coalgebra.labels() {
            return Err(Error::violation("algebra and coalgebra bases carry different labels"));
        }
        Ok(HopfAlgebra {
            algebra,
            coalgebra,
            antipode,
        })
    }

    /// Builds from raw maps with shared labels.
    pub fn from_maps(
        labels: Vec<String>,
        mult: LinMap,
        unit: LinMap,
        comult: LinMap,
        counit: LinMap,
        antipode: LinMap,
    ) -> Result<HopfAlgebra> {
        let a = AlgebraData::new(labels.clone(), mult, unit)?;
        let c = CoalgebraData::new(labels, comult, counit)?;
        HopfAlgebra::new(a, c, antipode)
    }

    /// The ground field as a Hopf algebra.
    pub fn trivial(field: Field) -> HopfAlgebra {
        HopfAlgebra {
            algebra: AlgebraData::trivial(field),
            coalgebra: CoalgebraData::trivial(field),
            antipode: LinMap::identity(field, 1),
        }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinMap {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn one(&self) -> SVec {
        self.algebra.one()
    }

    pub fn basis(&self, i: usize) -> SVec {
        SVec::unit(self.field(), i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    /// Basis vector by label; panics on unknown labels.
    pub fn element(&self, label: &str) -> SVec {
        let i = self
            .index_of(label)
            .unwrap_or_else(|| panic!("unknown basis label {label}"));
        self.basis(i)
    }

    pub fn product(&self, a: &SVec, b: &SVec) -> SVec {
        self.algebra.product(a, b)
    }

    pub fn coproduct(&self, a: &SVec) -> SVec {
        self.coalgebra.coproduct(a)
    }

    pub fn with_antipode(&self, antipode: LinMap) -> Result<HopfAlgebra> {
        HopfAlgebra::new(self.algebra.clone(), self.coalgebra.clone(), antipode)
    }

    /// One verdict per axiom, each with the first violating basis element or tuple.
    pub fn check_axioms(&self) -> CheckReport {
        let f = self.field();
        let d = self.dim();
        let l = self.labels();
        let id = LinMap::identity(f, d);
        let one = LinMap::identity(f, 1);
        let mut r = self.algebra.check();
        r.checks.extend(self.coalgebra.check().checks);

        // Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1
        let mid = LinMap::permute_legs(f, &[d, d, d, d], &[0, 2, 1, 3]);
        let lhs = self.comult().compose(self.mult());
        let rhs = self
            .mult()
            .kron(self.mult())
            .compose(&mid)
            .compose(&self.comult().kron(self.comult()));
        let unit_ok = self.comult().compose(self.unit()) == self.unit().kron(self.unit());
        match lhs.first_difference(&rhs) {
            Some(j) => r.fail(HOPF_AXIOMS[4], tensor_label(j, &[l, l])),
            None if !unit_ok => r.fail(HOPF_AXIOMS[4], "Δ(1) ≠ 1⊗1"),
            None => r.pass(HOPF_AXIOMS[4]),
        }

        let lhs = self.counit().compose(self.mult());
        let rhs = self.counit().kron(self.counit());
        let unit_ok = self.counit().compose(self.unit()) == one;
        match lhs.first_difference(&rhs) {
            Some(j) => r.fail(HOPF_AXIOMS[5], tensor_label(j, &[l, l])),
            None if !unit_ok => r.fail(HOPF_AXIOMS[5], "ε(1) ≠ 1"),
            None => r.pass(HOPF_AXIOMS[5]),
        }

        let ue = self.unit().compose(self.counit());
        let left = self
            .mult()
            .compose(&self.antipode.kron(&id))
            .compose(self.comult());
        let right = self
            .mult()
            .compose(&id.kron(&self.antipode))
            .compose(self.comult());
        r.compare(HOPF_AXIOMS[6], &left, &ue, &|j| l[j].clone());
        r.compare(HOPF_AXIOMS[7], &right, &ue, &|j| l[j].clone());
        r
    }

    /// Whether `S` is invertible, with its rank.
    pub fn antipode_bijective(&self) -> (bool, usize) {
        let rank = self.antipode.rank();
        (rank == self.dim(), rank)
    }

    pub fn antipode_inverse(&self) -> Option<LinMap> {
        self.antipode.inverse()
    }

    /// The linear dual: product `Δᵀ`, coproduct `mᵀ`, antipode `Sᵀ`.
    /// Basis element `e<label>` is the functional dual to `<label>`.
    pub fn dual(&self) -> HopfAlgebra {
        let labels: Vec<String> = self.labels().iter().map(|l| format!("e{l}")).collect();
        self.dual_with_labels(labels)
    }

    pub fn dual_with_labels(&self, labels: Vec<String>) -> HopfAlgebra {
        HopfAlgebra::from_maps(
            labels,
            self.comult().transpose(),
            self.counit().transpose(),
            self.mult().transpose(),
            self.unit().transpose(),
            self.antipode.transpose(),
        )
        .expect("transposed structure maps have matching shapes")
    }

    /// Same structure maps, new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<HopfAlgebra> {
        HopfAlgebra::from_maps(
            labels,
            self.mult().clone(),
            self.unit().clone(),
            self.comult().clone(),
            self.counit().clone(),
            self.antipode.clone(),
        )
    }

    /// Whether the structure maps agree with `other`'s, ignoring labels.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.mult() == other.mult()
            && self.unit() == other.unit()
            && self.comult() == other.comult()
            && self.counit() == other.counit()
            && self.antipode == other.antipode
    }

    /// Transports the structure along an invertible `φ : self → target basis`.
    pub fn transport(&self, phi: &LinMap, labels: Vec<String>) -> Result<HopfAlgebra> {
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::violation("transport map is not invertible"))?;
        HopfAlgebra::from_maps(
            labels,
            phi.compose(self.mult()).compose(&inv.kron(&inv)),
            phi.compose(self.unit()),
            phi.kron(phi).compose(self.comult()).compose(&inv),
            self.counit().compose(&inv),
            phi.compose(&self.antipode).compose(&inv),
        )
    }

    /// Whether `φ : self → other` preserves all Hopf structure maps.
    pub fn is_hopf_morphism(&self, other: &HopfAlgebra, phi: &LinMap) -> bool {
        phi.compose(self.mult()) == other.mult().compose(&phi.kron(phi))
            && phi.compose(self.unit()) == *other.unit()
            && other.comult().compose(phi) == phi.kron(phi).compose(self.comult())
            && other.counit().compose(phi) == *self.counit()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, function_algebra, group_algebra, sweedler4, taft, FiniteGroupTable};

    #[test]
    fn catalog_objects_satisfy_every_axiom() {
        for name in crate::catalog::NAMES {
            let params: &[u64] = if name == "taft" { &[3, 7, 2] } else { &[] };
            let h = by_name(name, params).unwrap();
            let r = h.check_axioms();
            assert!(r.all_hold(), "{name}: {:?}", r.first_failure());
            assert_eq!(r.len(), HOPF_AXIOMS.len());
        }
    }

    #[test]
    fn identity_antipode_fails_at_x() {
        let h = sweedler4();
        let bad = h.with_antipode(LinMap::identity(h.field(), 4)).unwrap();
        let r = bad.check_axioms();
        let c = r.first_failure().unwrap();
        assert!(c.name.contains("antipode"), "{}", c.name);
        assert_eq!(c.witness.as_deref(), Some("x"));
    }

    #[test]
    fn zero_antipode_is_not_bijective() {
        let h = group_algebra(Field::Rational, &FiniteGroupTable::cyclic(3));
        assert_eq!(h.antipode_bijective(), (true, 3));
        let z = h.with_antipode(LinMap::zero(h.field(), 3, 3)).unwrap();
        assert_eq!(z.antipode_bijective(), (false, 0));
        assert!(!z.check_axioms().all_hold());
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let c2 = FiniteGroupTable::cyclic(2);
        let dual = group_algebra(Field::Rational, &c2).dual();
        assert!(dual.same_structure(&function_algebra(Field::Rational, &c2)));
        let h = sweedler4();
        assert!(h.dual().dual().same_structure(&h));
    }

    #[test]
    fn function_algebra_coproduct_is_the_group_law() {
        let g = FiniteGroupTable::symmetric3();
        let h = function_algebra(Field::Rational, &g);
        let f = h.field();
        for c in 0..6 {
            let mut expect = SVec::new();
            for a in 0..6 {
                for b in 0..6 {
                    if g.mul(a, b) == c {
                        expect.add_term(a * 6 + b, &f.one());
                    }
                }
            }
            assert_eq!(h.coproduct(&h.basis(c)), expect);
        }
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h = sweedler4();
        let s = h.antipode();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
        let x = h.element("x");
        let gx = h.element("gx");
        // S(x) = −g⁻¹x = −gx
        assert_eq!(s.apply(&x), gx.neg());
    }

    #[test]
    fn taft_reduces_to_known_cases() {
        let f5 = Field::prime(5).unwrap();
        let t = taft(f5, 2, &f5.from_i64(4)).unwrap();
        let sw = sweedler4();
        assert_eq!(t.labels(), sw.labels());
        let reduce = |m: &LinMap| {
            LinMap::from_entries(
                f5,
                m.rows(),
                m.cols(),
                m.entries().map(|(i, j, c)| (i, j, f5.from_rational(c.as_rational().unwrap()).unwrap())),
            )
            .unwrap()
        };
        assert_eq!(*t.mult(), reduce(sw.mult()));
        assert_eq!(*t.comult(), reduce(sw.comult()));
        assert_eq!(*t.antipode(), reduce(sw.antipode()));
        assert!(t.check_axioms().all_hold());
        let one = taft(Field::Rational, 1, &Field::Rational.one()).unwrap();
        assert!(one.same_structure(&HopfAlgebra::trivial(Field::Rational)));
    }

    #[test]
    fn transport_along_a_permutation_is_a_morphism() {
        let h = group_algebra(Field::Rational, &FiniteGroupTable::cyclic(3));
        let f = h.field();
        let phi = LinMap::from_columns(f, 3, vec![SVec::unit(f, 0), SVec::unit(f, 2), SVec::unit(f, 1)]);
        let t = h.transport(&phi, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(t.check_axioms().all_hold());
        assert!(h.is_hopf_morphism(&t, &phi));
        assert!(!h.is_hopf_morphism(&t, &LinMap::zero(f, 3, 3)));
    }
}
