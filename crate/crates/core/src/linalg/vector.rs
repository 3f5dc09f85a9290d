use std::collections::btree_map::{self, BTreeMap};

use super::field::{Field, Scalar};

/// Sparse coordinate vector. Never stores zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec(BTreeMap<usize, Scalar>);

impl SVec {
    pub fn new() -> SVec {
        SVec(BTreeMap::new())
    }

    pub fn unit(field: Field, index: usize) -> SVec {
        let mut v = SVec::new();
        v.0.insert(index, field.one());
        v
    }

    pub fn from_dense(values: &[Scalar]) -> SVec {
        let mut v = SVec::new();
        for (i, c) in values.iter().enumerate() {
            if !c.is_zero() {
                v.0.insert(i, c.clone());
            }
        }
        v
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> SVec {
        let mut v = SVec::new();
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    pub fn to_dense(&self, field: Field, dim: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.0.get(&index)
    }

    pub fn coeff(&self, field: Field, index: usize) -> Scalar {
        self.0.get(&index).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, usize, Scalar> {
        self.0.iter()
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.0.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(index) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn set(&mut self, index: usize, c: Scalar) {
        if c.is_zero() {
            self.0.remove(&index);
        } else {
            self.0.insert(index, c);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &SVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(*i, &(c * x));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::new();
        }
        SVec(self.0.iter().map(|(i, x)| (*i, c * x)).collect())
    }

    pub fn neg(&self) -> SVec {
        SVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    pub fn add(&self, other: &SVec) -> SVec {
        let mut out = self.clone();
        for (i, x) in other.iter() {
            out.add_term(*i, x);
        }
        out
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        let mut out = self.clone();
        for (i, x) in other.iter() {
            out.add_term(*i, &-x);
        }
        out
    }

    pub fn dot(&self, other: &SVec, field: Field) -> Scalar {
        let mut acc = field.zero();
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, x) in small.iter() {
            if let Some(y) = large.get(*i) {
                acc = &acc + &(x * y);
            }
        }
        acc
    }

    /// Tensor product of coordinate vectors with flattening `(i, j) ↦ i·dim_b + j`.
    pub fn tensor(&self, other: &SVec, dim_b: usize) -> SVec {
        let mut out = SVec::new();
        for (i, x) in self.iter() {
            for (j, y) in other.iter() {
                out.0.insert(i * dim_b + j, x * y);
            }
        }
        out
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SVec {
        let mut out = SVec::new();
        for (i, x) in self.iter() {
            out.add_term(f(*i), x);
        }
        out
    }
}

impl<'a> IntoIterator for &'a SVec {
    type Item = (&'a usize, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, usize, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
