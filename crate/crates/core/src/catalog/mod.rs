//! Concrete Hopf algebras and subgroup data.

use crate::correspondence::{CoidealSubalgebra, QuotientModuleCoalgebra};
use crate::error::{Error, Result};
use crate::hopf::{CoalgebraData, HopfAlgebra};
use crate::linalg::{Field, LinMap, Scalar, SVec, Subspace};

/// Environment variable holding the default dimension cap.
pub const DIM_CAP_VAR: &str = "QSG_DIM_CAP";
pub const DEFAULT_DIM_CAP: usize = 64;

pub fn dim_cap() -> usize {
    std::env::var(DIM_CAP_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

/// Multiplication table of a finite group with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroupTable {
    pub fn new(mult: Vec<Vec<usize>>, labels: Vec<String>) -> Result<FiniteGroupTable> {
        let n = mult.len();
        if labels.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::violation("group table is not square over its labels"));
        }
        for (a, row) in mult.iter().enumerate() {
            if row[0] != a || mult[0][a] != a {
                return Err(Error::violation(format!("index 0 is not an identity for {}", labels[a])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::violation(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in mult.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| row[b] == 0 && mult[b][a] == 0)
                .ok_or_else(|| Error::violation(format!("{} has no inverse", labels[a])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroupTable {
            mult,
            inverse,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroupTable {
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|a| match a {
                0 => "e".to_string(),
                1 => "c".to_string(),
                _ => format!("c{a}"),
            })
            .collect();
        FiniteGroupTable::new(mult, labels).expect("cyclic table is a group")
    }

    /// Permutations of `{0,1,2}` in lexicographic order, `(ab)(i) = a(b(i))`.
    pub fn symmetric3() -> FiniteGroupTable {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mult = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let labels = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroupTable::new(mult, labels).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Checks that `m` is a subgroup; the witness is an offending pair.
    pub fn check_subgroup(&self, m: &[usize]) -> Result<()> {
        if !m.contains(&0) {
            return Err(Error::violation("subset does not contain the identity"));
        }
        for &a in m {
            for &b in m {
                if !m.contains(&self.mul(a, b)) {
                    return Err(Error::violation(format!(
                        "not closed: {}·{} = {}",
                        self.labels[a],
                        self.labels[b],
                        self.labels[self.mul(a, b)]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The table of a subgroup, in increasing index order.
    pub fn subgroup(&self, m: &[usize]) -> Result<FiniteGroupTable> {
        self.check_subgroup(m)?;
        let mut idx = m.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let pos = |g: usize| idx.iter().position(|&x| x == g).unwrap();
        let mult = idx
            .iter()
            .map(|&a| idx.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let labels = idx.iter().map(|&a| self.labels[a].clone()).collect();
        FiniteGroupTable::new(mult, labels)
    }

    /// Right cosets `Mg`, each sorted, in order of first element.
    pub fn right_cosets(&self, m: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = m.iter().map(|&h| self.mul(h, g)).collect();
            coset.sort_unstable();
            coset.dedup();
            for &x in &coset {
                seen[x] = true;
            }
            out.push(coset);
        }
        out
    }
}

/// `kG`: grouplike basis, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, g: &FiniteGroupTable) -> HopfAlgebra {
    let n = g.order();
    let one = field.one();
    let mult = LinMap::from_entries(
        field,
        n,
        n * n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (g.mul(a, b), a * n + b, one.clone())),
    )
    .expect("entries in range");
    let unit = LinMap::from_columns(field, n, vec![SVec::unit(field, 0)]);
    let comult = LinMap::from_columns(field, n * n, (0..n).map(|a| SVec::unit(field, a * n + a)).collect());
    let counit = LinMap::from_rows(field, n, &[SVec::from_pairs((0..n).map(|a| (a, one.clone())))]);
    let antipode = LinMap::from_columns(field, n, (0..n).map(|a| SVec::unit(field, g.inv(a))).collect());
    HopfAlgebra::from_maps(g.labels().to_vec(), mult, unit, comult, counit, antipode)
        .expect("group algebra shapes agree")
}

/// `k^G`, the dual of `kG`, with delta-function basis `δ<g>`.
pub fn function_algebra(field: Field, g: &FiniteGroupTable) -> HopfAlgebra {
    let labels = g.labels().iter().map(|l| format!("δ{l}")).collect();
    group_algebra(field, g).dual_with_labels(labels)
}

/// Classical subgroup data inside `k^G`: the functions constant on right
/// cosets `Mg`, and restriction of functions to `M`.
pub fn subgroup_data(field: Field, g: &FiniteGroupTable, m: &[usize]) -> Result<(CoidealSubalgebra, QuotientModuleCoalgebra)> {
    let sub = g.subgroup(m)?;
    let mut members = m.to_vec();
    members.sort_unstable();
    members.dedup();
    let h = function_algebra(field, g);
    let n = g.order();
    let one = field.one();

    let cosets = g.right_cosets(&members);
    let a_vectors = cosets
        .iter()
        .map(|c| SVec::from_pairs(c.iter().map(|&x| (x, one.clone()))))
        .collect();
    let a = CoidealSubalgebra::new(&h, &Subspace::span(field, n, a_vectors))?;

    let km = function_algebra(field, &sub);
    let b: CoalgebraData = km.coalgebra().clone();
    let k = members.len();
    let pi = LinMap::from_entries(field, k, n, members.iter().enumerate().map(|(i, &x)| (i, x, one.clone())))?;
    // σ(δ_g ⊗ δ_m) = δ_m if g = m
    let sigma = LinMap::from_entries(
        field,
        k,
        n * k,
        members.iter().enumerate().map(|(i, &x)| (i, x * k + i, one.clone())),
    )?;
    let q = QuotientModuleCoalgebra::new(&h, b, pi, sigma)?;
    Ok((a, q))
}

/// Taft algebra of dimension `n²`: `gⁿ = 1`, `xⁿ = 0`, `xg = q·gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`. Basis `g^a x^b` at index `b·n + a`.
pub fn taft(field: Field, n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    taft_capped(field, n, q, dim_cap())
}

pub fn taft_capped(field: Field, n: usize, q: &Scalar, cap: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::violation("n must be positive"));
    }
    if n * n > cap {
        return Err(Error::Unsupported(format!("dimension {} exceeds the cap {cap}", n * n)));
    }
    let p = field.characteristic();
    if p != 0 && (n as u64).is_multiple_of(p) {
        return Err(Error::violation(format!("characteristic {p} divides {n}")));
    }
    if !q.pow(n as u64).is_one() || (1..n).any(|k| q.pow(k as u64).is_one()) {
        return Err(Error::violation(format!("{q} is not a primitive {n}-th root of unity")));
    }
    let d = n * n;
    let idx = |a: usize, b: usize| b * n + a;
    let labels: Vec<String> = (0..d)
        .map(|i| {
            let (a, b) = (i % n, i / n);
            let gpart = match a {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g{a}"),
            };
            let xpart = match b {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x{b}"),
            };
            if a == 0 && b == 0 {
                "1".into()
            } else {
                gpart + &xpart
            }
        })
        .collect();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let (a, b, c, e) = (i % n, i / n, j % n, j / n);
            if b + e < n {
                entries.push((idx((a + c) % n, b + e), i * d + j, q.pow((b * c) as u64)));
            }
        }
    }
    let mult = LinMap::from_entries(field, d, d * d, entries)?;
    let unit = LinMap::from_columns(field, d, vec![SVec::unit(field, 0)]);
    let prod = |u: &SVec, v: &SVec| mult.apply(&u.tensor(v, d));
    let mult2 = mult
        .kron(&mult)
        .compose(&LinMap::permute_legs(field, &[d, d, d, d], &[0, 2, 1, 3]));
    let prod2 = |u: &SVec, v: &SVec| mult2.apply(&u.tensor(v, d * d));
    let e = |i: usize| SVec::unit(field, i);
    let (g, x) = (e(idx(1 % n, 0)), if n > 1 { e(idx(0, 1)) } else { SVec::new() });
    let dg = g.tensor(&g, d);
    let dx = x.tensor(&e(0), d).add(&g.tensor(&x, d));
    let one2 = e(0).tensor(&e(0), d);
    let g_inv = e(idx((n - 1) % n, 0));
    let s_x = prod(&g_inv, &x).neg();
    let mut comult_cols = Vec::with_capacity(d);
    let mut antipode_cols = Vec::with_capacity(d);
    for i in 0..d {
        let (a, b) = (i % n, i / n);
        let mut delta = one2.clone();
        let mut s = e(0);
        for _ in 0..a {
            delta = prod2(&delta, &dg);
        }
        for _ in 0..b {
            delta = prod2(&delta, &dx);
            s = prod(&s, &s_x);
        }
        for _ in 0..a {
            s = prod(&s, &g_inv);
        }
        comult_cols.push(delta);
        antipode_cols.push(s);
    }
    let comult = LinMap::from_columns(field, d * d, comult_cols);
    let counit = LinMap::from_rows(field, d, &[SVec::from_pairs((0..n).map(|a| (idx(a, 0), field.one())))]);
    let antipode = LinMap::from_columns(field, d, antipode_cols);
    HopfAlgebra::from_maps(labels, mult, unit, comult, counit, antipode)
}

/// Sweedler's four-dimensional Hopf algebra over ℚ, basis `1, g, x, gx`.
pub fn sweedler4() -> HopfAlgebra {
    taft(Field::Rational, 2, &Field::Rational.from_i64(-1)).expect("−1 is a primitive square root of unity")
}

/// Every named catalog object accepted by [`by_name`].
pub const NAMES: [&str; 8] = ["k", "kC2", "kC3", "kS3", "k^C2", "k^S3", "sweedler4", "taft"];

/// Looks up a catalog Hopf algebra by name; `taft` takes `n`, `p`, `q`.
pub fn by_name(name: &str, params: &[u64]) -> Result<HopfAlgebra> {
    let q = Field::Rational;
    match name {
        "k" => Ok(HopfAlgebra::trivial(q)),
        "kC2" => Ok(group_algebra(q, &FiniteGroupTable::cyclic(2))),
        "kC3" => Ok(group_algebra(q, &FiniteGroupTable::cyclic(3))),
        "kS3" => Ok(group_algebra(q, &FiniteGroupTable::symmetric3())),
        "k^C2" => Ok(function_algebra(q, &FiniteGroupTable::cyclic(2))),
        "k^S3" => Ok(function_algebra(q, &FiniteGroupTable::symmetric3())),
        "sweedler4" => Ok(sweedler4()),
        "taft" => {
            let [n, p, root] = params else {
                return Err(Error::violation("taft needs parameters n p q"));
            };
            let field = Field::prime(*p)?;
            taft(field, *n as usize, &field.from_i64(*root as i64))
        }
        other => Err(Error::violation(format!("unknown catalog object {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tables() {
        let s3 = FiniteGroupTable::symmetric3();
        assert_eq!(s3.order(), 6);
        for a in 0..6 {
            assert_eq!(s3.mul(a, s3.inv(a)), 0);
        }
        assert!((0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a))));
        let c3 = FiniteGroupTable::cyclic(3);
        assert_eq!(c3.mul(1, 2), 0);
        assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![1, 1]], vec!["e".into(), "a".into()]).is_err());
    }

    #[test]
    fn subgroups_and_cosets() {
        let s3 = FiniteGroupTable::symmetric3();
        for (m, index) in [(vec![0], 6), (vec![0, 1], 3), (vec![0, 3, 4], 2)] {
            assert!(s3.check_subgroup(&m).is_ok());
            let cosets = s3.right_cosets(&m);
            assert_eq!(cosets.len(), index);
            let mut all: Vec<usize> = cosets.concat();
            all.sort_unstable();
            assert_eq!(all, (0..6).collect::<Vec<_>>());
        }
        assert!(s3.check_subgroup(&[0, 3]).is_err());
        assert!(s3.check_subgroup(&[1]).is_err());
    }

    #[test]
    fn subgroup_data_dimensions() {
        let s3 = FiniteGroupTable::symmetric3();
        let (a, q) = subgroup_data(Field::Rational, &s3, &[0, 3, 4]).unwrap();
        assert_eq!((a.dim(), q.dim()), (2, 3));
        assert!(subgroup_data(Field::Rational, &s3, &[0, 1, 3]).is_err());
    }

    #[test]
    fn taft_parameters() {
        let f7 = Field::prime(7).unwrap();
        let t = taft(f7, 3, &f7.from_i64(2)).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(t.check_axioms().all_hold());
        // 3 is not a primitive cube root of unity mod 7
        assert!(taft(f7, 3, &f7.from_i64(3)).is_err());
        assert!(matches!(taft_capped(Field::Rational, 9, &Field::Rational.one(), 64), Err(Error::Unsupported(_))));
        let f3 = Field::prime(3).unwrap();
        assert!(taft(f3, 3, &f3.one()).is_err());
    }

    #[test]
    fn names_resolve() {
        for name in NAMES {
            let params: &[u64] = if name == "taft" { &[2, 5, 4] } else { &[] };
            assert!(by_name(name, params).is_ok(), "{name}");
        }
        assert!(by_name("taft", &[]).is_err());
        assert!(by_name("kC5", &[]).is_err());
    }
}
