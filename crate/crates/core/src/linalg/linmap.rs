use std::fmt;

use super::echelon::{rref, Echelon};
use super::field::{Field, Scalar};
use super::vector::SVec;
use crate::error::{ensure_dim, Error, Result};

/// A linear map `k^cols → k^rows`, stored column by column.
///
/// Column `j` is the image of the `j`-th basis vector. Tensor factors are
/// flattened as `(i, j) ↦ i·dim₂ + j` everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<SVec>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl LinMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> LinMap {
        LinMap {
            field,
            rows,
            cols,
            columns: vec![SVec::new(); cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        LinMap {
            field,
            rows: n,
            cols: n,
            columns: (0..n).map(|i| SVec::unit(field, i)).collect(),
        }
    }

    pub fn from_columns(field: Field, rows: usize, columns: Vec<SVec>) -> LinMap {
        debug_assert!(columns
            .iter()
            .all(|c| c.max_index().is_none_or(|m| m < rows)));
        LinMap {
            field,
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Builds a map from `(row, col, value)` triples; repeated keys are summed.
    pub fn from_entries(
        field: Field,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<LinMap> {
        let mut columns = vec![SVec::new(); cols];
        for (i, j, c) in entries {
            if i >= rows || j >= cols {
                return Err(Error::dims("matrix entry", rows.max(cols), i.max(j)));
            }
            columns[j].add_term(i, &c);
        }
        Ok(LinMap {
            field,
            rows,
            cols,
            columns,
        })
    }

    /// Row-major dense integer matrix; convenient for tests and catalogs.
    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> LinMap {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut columns = vec![SVec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix literal");
            for (j, x) in row.iter().enumerate() {
                columns[j].add_term(i, &field.from_i64(*x));
            }
        }
        LinMap {
            field,
            rows: r,
            cols: c,
            columns,
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[SVec]) -> LinMap {
        let mut columns = vec![SVec::new(); cols];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter() {
                columns[*j].add_term(i, x);
            }
        }
        LinMap {
            field,
            rows: rows.len(),
            cols,
            columns,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].coeff(self.field, i)
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SVec::nnz).sum()
    }

    pub fn row_vectors(&self) -> Vec<SVec> {
        let mut rows = vec![SVec::new(); self.rows];
        for (i, j, x) in self.entries() {
            rows[i].set(j, x.clone());
        }
        rows
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LinMap::identity(self.field, self.rows)
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (j, x) in v.iter() {
            out.add_scaled(x, &self.columns[*j]);
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(
            self.cols, other.rows,
            "composition of {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn try_compose(&self, other: &LinMap) -> Result<LinMap> {
        ensure_dim("composition", self.cols, other.rows)?;
        Ok(self.compose(other))
    }

    /// Kronecker product: row `i·rows_g + i'`, column `j·cols_g + j'`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        let mut columns = Vec::with_capacity(self.cols * g.cols);
        for cf in &self.columns {
            for cg in &g.columns {
                columns.push(cf.tensor(cg, g.rows));
            }
        }
        LinMap {
            field: self.field,
            rows: self.rows * g.rows,
            cols: self.cols * g.cols,
            columns,
        }
    }

    pub fn transpose(&self) -> LinMap {
        let mut columns = vec![SVec::new(); self.rows];
        for (i, j, x) in self.entries() {
            columns[i].set(j, x.clone());
        }
        LinMap {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn neg(&self) -> LinMap {
        self.scale(&-&self.field.one())
    }

    pub fn echelon(&self) -> Echelon {
        rref(self.field, self.row_vectors(), self.cols)
    }

    pub fn rank(&self) -> usize {
        // rank of the transpose is cheaper when there are fewer columns
        if self.cols <= self.rows {
            rref(self.field, self.columns.clone(), self.rows).rank()
        } else {
            self.echelon().rank()
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // row-reduce [A | I]
        let rows: Vec<SVec> = self
            .row_vectors()
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = r;
                r.set(n + i, self.field.one());
                r
            })
            .collect();
        let e = rref(self.field, rows, 2 * n);
        if e.rank() < n || e.pivots.iter().take(n).enumerate().any(|(i, p)| *p != i) {
            return None;
        }
        let inv_rows: Vec<SVec> = e.rows[..n]
            .iter()
            .map(|r| r.iter().filter(|(j, _)| **j >= n).map(|(j, x)| (j - n, x.clone())).collect::<Vec<_>>())
            .map(SVec::from_pairs)
            .collect();
        Some(LinMap::from_rows(self.field, n, &inv_rows))
    }

    pub fn pow(&self, e: u32) -> LinMap {
        let mut acc = LinMap::identity(self.field, self.rows);
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    /// First column (by index) where two equally-shaped maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols).find(|&j| self.columns[j] != other.columns[j])
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: cols.len(),
            columns: cols.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Permutation of tensor legs `V₀⊗…⊗V_{n-1} → V_{perm[0]}⊗…⊗V_{perm[n-1]}`.
    pub fn permute_legs(field: Field, dims: &[usize], perm: &[usize]) -> LinMap {
        assert_eq!(dims.len(), perm.len());
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = perm.iter().map(|&k| dims[k]).collect();
        let columns = (0..total)
            .map(|idx| {
                let tuple = unflatten(idx, dims);
                let out: Vec<usize> = perm.iter().map(|&k| tuple[k]).collect();
                SVec::unit(field, flatten(&out, &out_dims))
            })
            .collect();
        LinMap {
            field,
            rows: total,
            cols: total,
            columns,
        }
    }

    /// The flip `V⊗W → W⊗V`.
    pub fn swap(field: Field, dim_v: usize, dim_w: usize) -> LinMap {
        LinMap::permute_legs(field, &[dim_v, dim_w], &[1, 0])
    }

    /// Density of stored entries, in `[0, 1]`.
    pub fn density(&self) -> f64 {
        let cells = (self.rows * self.cols).max(1);
        self.nnz() as f64 / cells as f64
    }
}

/// Multi-index of a flattened tensor basis index.
pub fn unflatten(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn flatten(tuple: &[usize], dims: &[usize]) -> usize {
    tuple.iter().zip(dims).fold(0, |acc, (t, d)| acc * d + t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities_is_identity() {
        let f = Field::Rational;
        let k = LinMap::identity(f, 2).kron(&LinMap::identity(f, 3));
        assert!(k.is_identity());
        assert_eq!(k.rows(), 6);
    }

    #[test]
    fn kron_with_zero_is_zero() {
        let f = Field::Rational;
        let a = LinMap::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        assert!(a.kron(&LinMap::zero(f, 2, 2)).is_zero());
    }

    #[test]
    fn kron_matches_definition() {
        // oracle: (f⊗g)[i*2+i'][j*2+j'] = f[i][j]*g[i'][j']
        let f = Field::Rational;
        let a = LinMap::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let b = LinMap::from_i64_rows(f, &[&[0, 5], &[6, 7]]);
        let expected = LinMap::from_i64_rows(
            f,
            &[
                &[0, 5, 0, 10],
                &[6, 7, 12, 14],
                &[0, 15, 0, 20],
                &[18, 21, 24, 28],
            ],
        );
        assert_eq!(a.kron(&b), expected);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::Rational;
        let a = LinMap::from_i64_rows(f, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).is_identity());
        let singular = LinMap::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn permute_legs_cycles() {
        let f = Field::Rational;
        let p = LinMap::permute_legs(f, &[2, 3, 4], &[2, 0, 1]);
        let q = LinMap::permute_legs(f, &[4, 2, 3], &[1, 2, 0]);
        assert!(q.compose(&p).is_identity());
        let s = LinMap::swap(f, 2, 3);
        assert!(LinMap::swap(f, 3, 2).compose(&s).is_identity());
    }
}
