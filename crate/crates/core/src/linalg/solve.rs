use super::echelon::rref;
use super::field::{Field, Scalar};
use super::linmap::LinMap;
use super::subspace::Subspace;
use super::vector::SVec;
use crate::error::{Error, Result};

/// Exact null space of `f`.
pub fn kernel_of(f: &LinMap) -> Subspace {
    let field = f.field();
    let e = f.echelon();
    let mut is_pivot = vec![false; f.cols()];
    for p in &e.pivots {
        is_pivot[*p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..f.cols()).filter(|c| !is_pivot[*c]) {
        let mut v = SVec::unit(field, free);
        for (row, p) in e.rows.iter().zip(&e.pivots) {
            if let Some(x) = row.get(free) {
                v.set(*p, -x);
            }
        }
        vectors.push(v);
    }
    Subspace::span(field, f.cols(), vectors)
}

pub fn image_of(f: &LinMap) -> Subspace {
    Subspace::span(f.field(), f.rows(), f.columns().to_vec())
}

/// A solution of `a·x = b` with every free variable set to zero, or `None`.
pub fn solve_affine(a: &LinMap, b: &SVec) -> Option<SVec> {
    let field = a.field();
    let n = a.cols();
    let rows: Vec<SVec> = a
        .row_vectors()
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            if let Some(x) = b.get(i) {
                r.set(n, x.clone());
            }
            r
        })
        .collect();
    let e = rref(field, rows, n + 1);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = SVec::new();
    for (row, p) in e.rows.iter().zip(&e.pivots) {
        if let Some(c) = row.get(n) {
            x.set(*p, c.clone());
        }
    }
    Some(x)
}

/// Row-major vectorisation of a `rows × cols` matrix: entry `(i, j)` sits at `i·cols + j`.
pub fn vectorize(m: &LinMap) -> SVec {
    let cols = m.cols();
    SVec::from_pairs(m.entries().map(|(i, j, x)| (i * cols + j, x.clone())))
}

pub fn unvectorize(field: Field, v: &SVec, rows: usize, cols: usize) -> LinMap {
    LinMap::from_entries(
        field,
        rows,
        cols,
        v.iter().map(|(k, x)| (k / cols, k % cols, x.clone())),
    )
    .expect("vector index within matrix shape")
}

/// Matrix of a linear operator on `rows × cols` matrices, obtained by
/// evaluating it on elementary matrices. Columns are indexed by the
/// vectorisation of the argument; rows by the vectorisation of the value.
pub fn operator_matrix(
    field: Field,
    rows: usize,
    cols: usize,
    op: impl Fn(&LinMap) -> LinMap,
) -> LinMap {
    let mut columns = Vec::with_capacity(rows * cols);
    let mut out_len = 0;
    for i in 0..rows {
        for j in 0..cols {
            let e = LinMap::from_entries(field, rows, cols, [(i, j, field.one())]).unwrap();
            let val = op(&e);
            out_len = val.rows() * val.cols();
            columns.push(vectorize(&val));
        }
    }
    LinMap::from_columns(field, out_len, columns)
}

/// The space of `rows × cols` matrices annihilated by every operator, as a
/// subspace of the vectorised matrix space.
pub fn map_space(
    field: Field,
    rows: usize,
    cols: usize,
    conditions: &[&dyn Fn(&LinMap) -> LinMap],
) -> Subspace {
    if conditions.is_empty() {
        return Subspace::full(field, rows * cols);
    }
    let mut stacked: Vec<SVec> = Vec::new();
    for cond in conditions {
        let m = operator_matrix(field, rows, cols, cond);
        stacked.extend(m.row_vectors());
    }
    kernel_of(&LinMap::from_rows(field, rows * cols, &stacked))
}

/// The linear condition `s ↦ s∘x − y∘s` on maps `s : V → W`, where `x` is an
/// endomorphism of `V` and `y` of `W`.
pub fn commutation_constraint(x: &LinMap, y: &LinMap) -> LinMap {
    let field = x.field();
    let (w, v) = (y.rows(), x.rows());
    operator_matrix(field, w, v, |s| s.compose(x).sub(&y.compose(s)))
}

/// Finds `s` with `p∘s = id` and `c·vec(s) = 0` for every constraint `c`.
///
/// `p` must be surjective. The returned section is the first solution of the
/// echelonised system (free variables zero), so it is deterministic.
pub fn find_section(p: &LinMap, constraints: &[LinMap]) -> Result<Option<LinMap>> {
    let field = p.field();
    let rank = p.rank();
    if rank != p.rows() {
        return Err(Error::NotSurjective {
            rank,
            codomain: p.rows(),
        });
    }
    let (m, n) = (p.rows(), p.cols());
    let unknowns = n * m;
    for c in constraints {
        if c.cols() != unknowns {
            return Err(Error::dims("section constraint", unknowns, c.cols()));
        }
    }
    let comp = operator_matrix(field, n, m, |s| p.compose(s));
    let mut rows = comp.row_vectors();
    // constraint rows are homogeneous, so the right-hand side is only id
    let rhs = vectorize(&LinMap::identity(field, m));
    for c in constraints {
        rows.extend(c.row_vectors());
    }
    let system = LinMap::from_rows(field, unknowns, &rows);
    Ok(solve_affine(&system, &rhs).map(|x| unvectorize(field, &x, n, m)))
}

/// Determinant by Gaussian elimination; used by tests as an independent
/// rank oracle.
pub fn determinant(m: &LinMap) -> Scalar {
    assert_eq!(m.rows(), m.cols());
    let field = m.field();
    let n = m.rows();
    let mut a: Vec<Vec<Scalar>> = m
        .row_vectors()
        .iter()
        .map(|r| r.to_dense(field, n))
        .collect();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -&det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        let (top, rest) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = Field::Rational;
        assert!(kernel_of(&LinMap::identity(f, 3)).is_zero());
        assert!(kernel_of(&LinMap::zero(f, 3, 3)).is_full());
    }

    #[test]
    fn kernel_of_sum_map() {
        // x + y = 0 ⇒ span{(1, -1)}
        let f = Field::Rational;
        let k = kernel_of(&LinMap::from_i64_rows(f, &[&[1, 1]]));
        let expected = Subspace::span(
            f,
            2,
            vec![SVec::from_dense(&[f.from_i64(1), f.from_i64(-1)])],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn section_of_identity() {
        let f = Field::Rational;
        let s = find_section(&LinMap::identity(f, 3), &[]).unwrap().unwrap();
        assert!(s.is_identity());
    }

    #[test]
    fn section_of_projection_is_first_solution() {
        let f = Field::Rational;
        let p = LinMap::from_i64_rows(f, &[&[1, 0]]);
        let s = find_section(&p, &[]).unwrap().unwrap();
        assert_eq!(s, LinMap::from_i64_rows(f, &[&[1], &[0]]));
    }

    #[test]
    fn non_surjective_rejected() {
        let f = Field::Rational;
        let p = LinMap::from_i64_rows(f, &[&[1, 0], &[2, 0]]);
        assert!(matches!(find_section(&p, &[]), Err(Error::NotSurjective { .. })));
    }

    #[test]
    fn simple_module_over_dual_numbers_does_not_split() {
        // A = k[t]/(t²) with basis {1, t}; free cover A → k, 1 ↦ 1, t ↦ 0.
        // Right action of t: on A sends 1 ↦ t, t ↦ 0; on k it is zero.
        let f = Field::Rational;
        let p = LinMap::from_i64_rows(f, &[&[1, 0]]);
        let t_on_a = LinMap::from_i64_rows(f, &[&[0, 0], &[1, 0]]);
        let t_on_k = LinMap::zero(f, 1, 1);
        // s : k → A must satisfy s∘t_k = t_A∘s
        let c = commutation_constraint(&t_on_k, &t_on_a);
        assert_eq!(find_section(&p, &[c]).unwrap(), None);

        // oracle: every s = (α, β)ᵀ with p∘s = id has α = 1, and A-linearity
        // forces t_A·s = 0, i.e. α = 0: the one-parameter family is empty.
        for beta in -3..=3 {
            let s = LinMap::from_i64_rows(f, &[&[1], &[beta]]);
            assert!(p.compose(&s).is_identity());
            assert!(!t_on_a.compose(&s).is_zero());
        }
    }

    #[test]
    fn determinant_oracle() {
        let f = Field::Rational;
        let m = LinMap::from_i64_rows(f, &[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(determinant(&m), f.from_i64(6));
        let singular = LinMap::from_i64_rows(f, &[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert!(determinant(&singular).is_zero());
        assert_eq!(singular.rank(), 2);
    }
}
