use crate::cert::{tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{Field, LinMap, SVec, Subspace};

/// A finite-dimensional coalgebra: `comult` is `dim² × dim`, `counit` is `1 × dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    labels: Vec<String>,
    comult: LinMap,
    counit: LinMap,
}

impl CoalgebraData {
    pub fn new(labels: Vec<String>, comult: LinMap, counit: LinMap) -> Result<CoalgebraData> {
        let d = labels.len();
        ensure_dim("comultiplication rows", d * d, comult.rows())?;
        ensure_dim("comultiplication columns", d, comult.cols())?;
        ensure_dim("counit rows", 1, counit.rows())?;
        ensure_dim("counit columns", d, counit.cols())?;
        Ok(CoalgebraData {
            labels,
            comult,
            counit,
        })
    }

    pub fn trivial(field: Field) -> CoalgebraData {
        CoalgebraData {
            labels: vec!["1".into()],
            comult: LinMap::identity(field, 1),
            counit: LinMap::identity(field, 1),
        }
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn coproduct(&self, c: &SVec) -> SVec {
        self.comult.apply(c)
    }

    pub fn epsilon(&self, c: &SVec) -> crate::linalg::Scalar {
        self.counit.apply(c).coeff(self.field(), 0)
    }

    pub fn check(&self) -> CheckReport {
        let f = self.field();
        let d = self.dim();
        let id = LinMap::identity(f, d);
        let l = &self.labels[..];
        let mut r = CheckReport::new();
        let lhs = self.comult.kron(&id).compose(&self.comult);
        let rhs = id.kron(&self.comult).compose(&self.comult);
        r.compare("coassociativity", &lhs, &rhs, &|j| l[j].clone());
        let left = self.counit.kron(&id).compose(&self.comult);
        let right = id.kron(&self.counit).compose(&self.comult);
        match (left.first_difference(&id), right.first_difference(&id)) {
            (None, None) => r.pass("counit"),
            (Some(j), _) | (None, Some(j)) => r.fail("counit", l[j].clone()),
        }
        r
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        self.comult == LinMap::swap(self.field(), d, d).compose(&self.comult)
    }

    pub fn coopposite(&self) -> CoalgebraData {
        let d = self.dim();
        CoalgebraData {
            labels: self.labels.clone(),
            comult: LinMap::swap(self.field(), d, d).compose(&self.comult),
            counit: self.counit.clone(),
        }
    }

    /// Whether `ψ : self → other` is a coalgebra map.
    pub fn check_morphism(&self, other: &CoalgebraData, psi: &LinMap) -> Result<CheckReport> {
        ensure_dim("coalgebra map rows", other.dim(), psi.rows())?;
        ensure_dim("coalgebra map columns", self.dim(), psi.cols())?;
        let mut r = CheckReport::new();
        let l = &self.labels[..];
        r.compare(
            "comultiplicative",
            &other.comult.compose(psi),
            &psi.kron(psi).compose(&self.comult),
            &|j| l[j].clone(),
        );
        r.compare(
            "counital",
            &other.counit.compose(psi),
            &self.counit,
            &|j| l[j].clone(),
        );
        Ok(r)
    }

    /// Whether `s` is a coideal (`Δ(s) ⊆ s⊗C + C⊗s`, `ε(s) = 0`).
    pub fn coideal_witness(&self, s: &Subspace) -> Option<String> {
        let d = self.dim();
        let full = Subspace::full(self.field(), d);
        let target = s.tensor(&full).sum(&full.tensor(s));
        for (i, v) in s.basis().iter().enumerate() {
            if !self.epsilon(v).is_zero() {
                return Some(format!("ε is nonzero on basis vector {i}"));
            }
            if !target.contains(&self.coproduct(v)) {
                return Some(format!("Δ of basis vector {i} leaves I⊗C + C⊗I"));
            }
        }
        None
    }

    /// The quotient coalgebra `C/I` for a coideal `I`, with the projection.
    pub fn quotient(&self, ideal: &Subspace, labels: Vec<String>) -> Result<(CoalgebraData, LinMap)> {
        if let Some(w) = self.coideal_witness(ideal) {
            return Err(Error::violation(format!("not a coideal: {w}")));
        }
        let q = ideal.quotient_map();
        let k = q.rows();
        ensure_dim("quotient labels", k, labels.len())?;
        let section = section_of_quotient(ideal);
        let comult = q.kron(&q).compose(&self.comult).compose(&section);
        let counit = self.counit.compose(&section);
        Ok((CoalgebraData::new(labels, comult, counit)?, q))
    }

    /// Labels of the quotient basis: the non-pivot basis elements of `C`.
    pub fn quotient_labels(&self, ideal: &Subspace) -> Vec<String> {
        ideal
            .non_pivots()
            .iter()
            .map(|&j| format!("[{}]", self.labels[j]))
            .collect()
    }

    pub fn tensor_label(&self, idx: usize) -> String {
        tensor_label(idx, &[&self.labels, &self.labels])
    }
}

/// The section `C/I → C` sending the `k`-th quotient coordinate to the
/// corresponding non-pivot unit vector.
pub fn section_of_quotient(s: &Subspace) -> LinMap {
    let f = s.field();
    let cols = s.non_pivots().iter().map(|&j| SVec::unit(f, j)).collect();
    LinMap::from_columns(f, s.ambient_dim(), cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, FiniteGroupTable};

    #[test]
    fn broken_coassociativity_names_x() {
        let h = sweedler4();
        let f = h.field();
        let c = h.coalgebra();
        let x = h.index_of("x").unwrap();
        let g = h.index_of("g").unwrap();
        // Δx gains 2·g⊗x
        let extra = LinMap::from_entries(f, 16, 4, [(g * 4 + x, x, f.from_i64(2))]).unwrap();
        let bad = CoalgebraData::new(c.labels().to_vec(), c.comult().add(&extra), c.counit().clone()).unwrap();
        let r = bad.check();
        assert!(!r.holds("coassociativity"));
        assert_eq!(r.get("coassociativity").unwrap().witness.as_deref(), Some("x"));
    }

    #[test]
    fn cocommutativity() {
        let s3 = FiniteGroupTable::symmetric3();
        assert!(group_algebra(Field::Rational, &s3).coalgebra().is_cocommutative());
        assert!(!function_algebra(Field::Rational, &s3).coalgebra().is_cocommutative());
        assert!(!sweedler4().coalgebra().is_cocommutative());
    }

    #[test]
    fn quotient_by_augmentation_coideal() {
        let h = group_algebra(Field::Rational, &FiniteGroupTable::cyclic(2));
        let f = h.field();
        let c = h.coalgebra();
        let i = Subspace::span(f, 2, vec![h.basis(1).sub(&h.basis(0))]);
        assert!(c.coideal_witness(&i).is_none());
        let (q, pi) = c.quotient(&i, c.quotient_labels(&i)).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.check().all_hold());
        assert!(c.check_morphism(&q, &pi).unwrap().all_hold());

        let j = Subspace::span(f, 2, vec![h.basis(1)]);
        assert!(c.coideal_witness(&j).unwrap().contains("ε"));
    }

    #[test]
    fn coopposite_of_sweedler_is_a_coalgebra() {
        let c = sweedler4().coalgebra().coopposite();
        assert!(c.check().all_hold());
        assert_ne!(c, *sweedler4().coalgebra());
        assert_eq!(c.coopposite(), *sweedler4().coalgebra());
    }
}
