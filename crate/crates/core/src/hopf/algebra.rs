use crate::cert::{tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{Field, LinMap, SVec, Subspace};

/// A finite-dimensional associative unital algebra given by structure constants.
///
/// `mult` is `dim × dim²` with column `i·dim + j` holding `e_i e_j`; `unit` is `dim × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    labels: Vec<String>,
    mult: LinMap,
    unit: LinMap,
}

impl AlgebraData {
    pub fn new(labels: Vec<String>, mult: LinMap, unit: LinMap) -> Result<AlgebraData> {
        let d = labels.len();
        ensure_dim("multiplication rows", d, mult.rows())?;
        ensure_dim("multiplication columns", d * d, mult.cols())?;
        ensure_dim("unit rows", d, unit.rows())?;
        ensure_dim("unit columns", 1, unit.cols())?;
        Ok(AlgebraData { labels, mult, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn trivial(field: Field) -> AlgebraData {
        AlgebraData {
            labels: vec!["1".into()],
            mult: LinMap::identity(field, 1),
            unit: LinMap::identity(field, 1),
        }
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn one(&self) -> SVec {
        self.unit.column(0).clone()
    }

    pub fn product(&self, a: &SVec, b: &SVec) -> SVec {
        self.mult.apply(&a.tensor(b, self.dim()))
    }

    /// Left multiplication `x ↦ a·x`.
    pub fn left_mult(&self, a: &SVec) -> LinMap {
        let f = self.field();
        let cols = (0..self.dim()).map(|j| self.product(a, &SVec::unit(f, j))).collect();
        LinMap::from_columns(f, self.dim(), cols)
    }

    /// Right multiplication `x ↦ x·a`.
    pub fn right_mult(&self, a: &SVec) -> LinMap {
        let f = self.field();
        let cols = (0..self.dim()).map(|j| self.product(&SVec::unit(f, j), a)).collect();
        LinMap::from_columns(f, self.dim(), cols)
    }

    pub fn check(&self) -> CheckReport {
        let f = self.field();
        let d = self.dim();
        let id = LinMap::identity(f, d);
        let l = &self.labels[..];
        let mut r = CheckReport::new();
        let lhs = self.mult.compose(&self.mult.kron(&id));
        let rhs = self.mult.compose(&id.kron(&self.mult));
        r.compare("associativity", &lhs, &rhs, &|j| tensor_label(j, &[l, l, l]));
        let left = self.mult.compose(&self.unit.kron(&id));
        let right = self.mult.compose(&id.kron(&self.unit));
        match (left.first_difference(&id), right.first_difference(&id)) {
            (None, None) => r.pass("unit"),
            (Some(j), _) | (None, Some(j)) => r.fail("unit", l[j].clone()),
        }
        r
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        self.mult == self.mult.compose(&LinMap::swap(self.field(), d, d))
    }

    pub fn opposite(&self) -> AlgebraData {
        let d = self.dim();
        AlgebraData {
            labels: self.labels.clone(),
            mult: self.mult.compose(&LinMap::swap(self.field(), d, d)),
            unit: self.unit.clone(),
        }
    }

    /// Whether `s` contains `1` and is closed under multiplication; the
    /// witness is the first offending basis pair.
    pub fn subalgebra_witness(&self, s: &Subspace) -> Option<String> {
        if !s.contains(&self.one()) {
            return Some("1 ∉ subspace".into());
        }
        for (i, a) in s.basis().iter().enumerate() {
            for (j, b) in s.basis().iter().enumerate() {
                if !s.contains(&self.product(a, b)) {
                    return Some(format!("product of basis vectors {i} and {j}"));
                }
            }
        }
        None
    }

    /// The algebra structure on a subalgebra, in the canonical basis of `s`.
    pub fn restrict_to(&self, s: &Subspace, labels: Vec<String>) -> Result<AlgebraData> {
        let f = self.field();
        let k = s.dim();
        let mut cols = Vec::with_capacity(k * k);
        for (i, a) in s.basis().iter().enumerate() {
            for (j, b) in s.basis().iter().enumerate() {
                let p = self.product(a, b);
                cols.push(s.coordinates(&p).ok_or_else(|| {
                    Error::NotContained(format!("product of basis vectors {i} and {j}"))
                })?);
            }
        }
        let unit = s
            .coordinates(&self.one())
            .ok_or_else(|| Error::NotContained("1 is not in the subalgebra".into()))?;
        AlgebraData::new(
            labels,
            LinMap::from_columns(f, k, cols),
            LinMap::from_columns(f, k, vec![unit]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, FiniteGroupTable};

    #[test]
    fn commutativity() {
        let s3 = FiniteGroupTable::symmetric3();
        let ks3 = group_algebra(Field::Rational, &s3);
        assert!(!ks3.algebra().is_commutative());
        assert!(function_algebra(Field::Rational, &s3).algebra().is_commutative());
        assert!(ks3.algebra().opposite().check().all_hold());
        assert_ne!(ks3.algebra().opposite(), *ks3.algebra());
    }

    #[test]
    fn subalgebras_of_sweedler() {
        let h = sweedler4();
        let a = h.algebra();
        let f = h.field();
        let span = |ls: &[&str]| Subspace::span(f, 4, ls.iter().map(|l| h.element(l)).collect());
        assert!(a.subalgebra_witness(&span(&["1", "g"])).is_none());
        assert!(a.subalgebra_witness(&span(&["1", "x"])).is_none());
        assert!(a.subalgebra_witness(&span(&["g", "x"])).unwrap().contains('1'));
        assert!(a.subalgebra_witness(&span(&["1", "gx"])).is_none());
        assert!(a.subalgebra_witness(&span(&["1", "g", "x"])).is_some());

        let r = a.restrict_to(&span(&["1", "g"]), vec!["1".into(), "g".into()]).unwrap();
        assert!(r.check().all_hold());
        let g = SVec::unit(f, 1);
        assert_eq!(r.product(&g, &g), r.one());
    }
}
