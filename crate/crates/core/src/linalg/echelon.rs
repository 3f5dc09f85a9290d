//! Reduced row echelon forms, sparse and dense.
//!
//! Both routines return the unique reduced echelon basis of the row span, so
//! their outputs are interchangeable; [`rref`] picks between them by density.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::vector::SVec;

/// Rows of a reduced echelon matrix, sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<SVec>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Density above which the dense elimination path is used.
pub const DENSE_THRESHOLD: f64 = 0.5;

pub fn rref(field: Field, rows: Vec<SVec>, ncols: usize) -> Echelon {
    let nnz: usize = rows.iter().map(SVec::nnz).sum();
    let cells = rows.len().max(1) * ncols.max(1);
    if (nnz as f64) / (cells as f64) > DENSE_THRESHOLD {
        rref_dense(field, rows, ncols)
    } else {
        rref_sparse(field, rows)
    }
}

/// Incremental Gauss-Jordan on sparse rows.
pub fn rref_sparse(field: Field, rows: Vec<SVec>) -> Echelon {
    // pivot column -> fully reduced row with 1 at the pivot
    let mut basis: BTreeMap<usize, SVec> = BTreeMap::new();
    for row in rows {
        let mut v = row;
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(c, _)| basis.contains_key(c))
            .map(|(c, x)| (*c, x.clone()))
            .collect();
        for (c, x) in hits {
            v.add_scaled(&-&x, &basis[&c]);
        }
        let Some((pivot, lead)) = v.leading().map(|(p, x)| (p, x.clone())) else {
            continue;
        };
        let v = v.scaled(&lead.inv().expect("nonzero leading entry"));
        for r in basis.values_mut() {
            if let Some(x) = r.get(pivot).cloned() {
                r.add_scaled(&-&x, &v);
            }
        }
        basis.insert(pivot, v);
    }
    let _ = field;
    let pivots: Vec<usize> = basis.keys().copied().collect();
    let rows = basis.into_values().collect();
    Echelon { rows, pivots }
}

pub fn rref_dense(field: Field, rows: Vec<SVec>, ncols: usize) -> Echelon {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.to_dense(field, ncols)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon {
        rows: m.iter().map(|row| SVec::from_dense(row)).collect(),
        pivots,
    }
}
