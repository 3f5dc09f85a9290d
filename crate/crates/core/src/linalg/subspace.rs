use super::echelon::rref;
use super::field::{Field, Scalar};
use super::linmap::LinMap;
use super::vector::SVec;
use crate::error::{Error, Result};

/// A subspace of `k^n` held in canonical reduced echelon form, so that two
/// subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<SVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| SVec::unit(field, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical basis of the span of dense coordinate vectors.
    pub fn from_dense(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != ambient_dim {
                return Err(Error::VectorLength {
                    index,
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        Ok(Subspace::span(
            field,
            ambient_dim,
            vectors.iter().map(|v| SVec::from_dense(v)).collect(),
        ))
    }

    /// Canonical basis of the span of sparse vectors.
    pub fn span(field: Field, ambient_dim: usize, vectors: Vec<SVec>) -> Subspace {
        debug_assert!(vectors
            .iter()
            .all(|v| v.max_index().is_none_or(|m| m < ambient_dim)));
        let e = rref(field, vectors, ambient_dim);
        Subspace {
            field,
            ambient_dim,
            basis: e.rows,
            pivots: e.pivots,
        }
    }

    /// Checked variant of [`Subspace::span`]; reports the first out-of-range vector.
    pub fn try_span(field: Field, ambient_dim: usize, vectors: Vec<SVec>) -> Result<Subspace> {
        for (index, v) in vectors.iter().enumerate() {
            if let Some(m) = v.max_index() {
                if m >= ambient_dim {
                    return Err(Error::VectorLength {
                        index,
                        expected: ambient_dim,
                        found: m + 1,
                    });
                }
            }
        }
        Ok(Subspace::span(field, ambient_dim, vectors))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ambient_dim)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Remainder of `v` after reduction against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut r = v.clone();
        for (row, p) in self.basis.iter().zip(&self.pivots) {
            if let Some(x) = r.get(*p).cloned() {
                r.add_scaled(&-&x, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v ∉ self`.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        let coords = SVec::from_pairs(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(k, p)| v.get(*p).map(|x| (k, x.clone()))),
        );
        let rebuilt = self.from_coordinates(&coords);
        (rebuilt == *v).then_some(coords)
    }

    pub fn from_coordinates(&self, coords: &SVec) -> SVec {
        let mut out = SVec::new();
        for (k, x) in coords.iter() {
            out.add_scaled(x, &self.basis[*k]);
        }
        out
    }

    /// Inclusion map `self → k^n` (columns are the basis vectors).
    pub fn inclusion(&self) -> LinMap {
        LinMap::from_columns(self.field, self.ambient_dim, self.basis.clone())
    }

    /// Projection onto the complement spanned by non-pivot unit vectors,
    /// in the coordinates of those non-pivot columns. Its kernel is `self`.
    pub fn quotient_map(&self) -> LinMap {
        let non_pivots = self.non_pivots();
        let mut position = vec![usize::MAX; self.ambient_dim];
        for (k, c) in non_pivots.iter().enumerate() {
            position[*c] = k;
        }
        let columns = (0..self.ambient_dim)
            .map(|j| {
                let r = self.reduce(&SVec::unit(self.field, j));
                r.map_indices(|i| position[i])
            })
            .collect();
        LinMap::from_columns(self.field, non_pivots.len(), columns)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // kernel of [B_self | -B_other] gives pairs with equal images
        let a = self.inclusion();
        let b = other.inclusion().neg();
        let mut cols = a.columns().to_vec();
        cols.extend(b.columns().iter().cloned());
        let joint = LinMap::from_columns(self.field, self.ambient_dim, cols);
        let ker = super::solve::kernel_of(&joint);
        let vectors = ker
            .basis()
            .iter()
            .map(|k| {
                let head = SVec::from_pairs(
                    k.iter().filter(|(i, _)| **i < self.dim()).map(|(i, x)| (*i, x.clone())),
                );
                self.from_coordinates(&head)
            })
            .collect();
        Subspace::span(self.field, self.ambient_dim, vectors)
    }

    /// `self ⊗ other` inside `k^{n·m}`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.basis {
            for b in &other.basis {
                vs.push(a.tensor(b, other.ambient_dim));
            }
        }
        Subspace::span(self.field, self.ambient_dim * other.ambient_dim, vs)
    }

    /// Image of this subspace under `f`.
    pub fn image_under(&self, f: &LinMap) -> Subspace {
        Subspace::span(
            self.field,
            f.rows(),
            self.basis.iter().map(|v| f.apply(v)).collect(),
        )
    }
}

/// Matrix of `f` restricted to `from` and corestricted to `to`, in the
/// canonical bases of the two subspaces.
pub fn restrict(f: &LinMap, from: &Subspace, to: &Subspace) -> Result<LinMap> {
    if f.cols() != from.ambient_dim() || f.rows() != to.ambient_dim() {
        return Err(Error::dims("restricted map", from.ambient_dim(), f.cols()));
    }
    let mut columns = Vec::with_capacity(from.dim());
    for (k, v) in from.basis().iter().enumerate() {
        let img = f.apply(v);
        let coords = to.coordinates(&img).ok_or_else(|| {
            Error::NotContained(format!("image of basis vector {k} leaves the target subspace"))
        })?;
        columns.push(coords);
    }
    Ok(LinMap::from_columns(f.field(), to.dim(), columns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Field::Rational.from_i64(x)).collect()
    }

    #[test]
    fn dependent_rows_collapse() {
        let s = Subspace::from_dense(Field::Rational, 2, &[v(&[1, 1]), v(&[2, 2])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], SVec::from_dense(&v(&[1, 1])));
    }

    #[test]
    fn empty_family_is_zero_subspace() {
        let s = Subspace::from_dense(Field::Rational, 3, &[]).unwrap();
        assert_eq!(s, Subspace::zero(Field::Rational, 3));
    }

    #[test]
    fn wrong_length_reports_index() {
        let err = Subspace::from_dense(Field::Rational, 2, &[v(&[1, 0]), v(&[1, 0, 0])]).unwrap_err();
        assert_eq!(
            err,
            Error::VectorLength {
                index: 1,
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let s = Subspace::from_dense(Field::Rational, 3, &[v(&[1, 1, 0])]).unwrap();
        let q = s.quotient_map();
        assert_eq!(q.rows(), 2);
        assert!(q.compose(&s.inclusion()).is_zero());
        assert_eq!(q.rank(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_dense(Field::Rational, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::from_dense(Field::Rational, 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::from_dense(Field::Rational, 3, &[v(&[0, 1, 0])]).unwrap());
    }
}
