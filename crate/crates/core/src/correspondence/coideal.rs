use serde::Serialize;

use crate::cert::{format_vector, CheckReport};
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, HopfAlgebra, Pairing};
use crate::linalg::{kernel_of, LinMap, SVec, Subspace};
use crate::rep::Side;

/// A verified right coideal subalgebra `A ⊆ H` (`Δ(A) ⊆ A⊗H`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    hopf: HopfAlgebra,
    space: Subspace,
    algebra: AlgebraData,
    coaction: LinMap,
    certificates: CheckReport,
}

/// Certificates for a candidate one-sided coideal subalgebra.
pub fn coideal_subalgebra_report(h: &HopfAlgebra, s: &Subspace, side: Side) -> CheckReport {
    let mut r = CheckReport::new();
    let labels = h.labels();
    if s.contains(&h.one()) {
        r.pass("contains 1");
    } else {
        r.fail("contains 1", "1");
    }
    let mut closed = None;
    'outer: for a in s.basis() {
        for b in s.basis() {
            if !s.contains(&h.product(a, b)) {
                closed = Some(format!(
                    "({})·({})",
                    format_vector(a, labels),
                    format_vector(b, labels)
                ));
                break 'outer;
            }
        }
    }
    r.push("closed under multiplication", closed.is_none(), closed);
    let full = Subspace::full(h.field(), h.dim());
    let target = match side {
        Side::Right => s.tensor(&full),
        Side::Left => full.tensor(s),
    };
    let name = match side {
        Side::Right => "right coideal",
        Side::Left => "left coideal",
    };
    let bad = s
        .basis()
        .iter()
        .find(|v| !target.contains(&h.coproduct(v)))
        .map(|v| format!("Δ({})", format_vector(v, labels)));
    r.push(name, bad.is_none(), bad);
    r
}

impl CoidealSubalgebra {
    /// Verifies that `s` is a right coideal subalgebra of `h`.
    pub fn new(h: &HopfAlgebra, s: &Subspace) -> Result<CoidealSubalgebra> {
        if s.ambient_dim() != h.dim() {
            return Err(Error::dims("subspace ambient dimension", h.dim(), s.ambient_dim()));
        }
        let certificates = coideal_subalgebra_report(h, s, Side::Right);
        if let Some(c) = certificates.first_failure() {
            return Err(Error::violation(format!(
                "{} fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        let labels: Vec<String> = s.basis().iter().map(|v| format_vector(v, h.labels())).collect();
        let algebra = h.algebra().restrict_to(s, labels)?;
        // Δ_A : A → A⊗H, read off at the pivot columns
        let f = h.field();
        let (d, k) = (h.dim(), s.dim());
        let mut cols = Vec::with_capacity(k);
        for v in s.basis() {
            let dv = h.coproduct(v);
            let mut c = SVec::new();
            for (i, p) in s.pivots().iter().enumerate() {
                for j in 0..d {
                    if let Some(x) = dv.get(p * d + j) {
                        c.set(i * d + j, x.clone());
                    }
                }
            }
            cols.push(c);
        }
        let coaction = LinMap::from_columns(f, k * d, cols);
        Ok(CoidealSubalgebra {
            hopf: h.clone(),
            space: s.clone(),
            algebra,
            coaction,
            certificates,
        })
    }

    /// The subalgebra spanned by the given basis labels.
    pub fn from_labels(h: &HopfAlgebra, labels: &[&str]) -> Result<CoidealSubalgebra> {
        let mut vs = Vec::new();
        for l in labels {
            let i = h
                .index_of(l)
                .ok_or_else(|| Error::violation(format!("unknown basis label {l}")))?;
            vs.push(h.basis(i));
        }
        CoidealSubalgebra::new(h, &Subspace::span(h.field(), h.dim(), vs))
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    /// `Δ_A : A → A⊗H`.
    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn inclusion(&self) -> LinMap {
        self.space.inclusion()
    }

    pub fn certificates(&self) -> &CheckReport {
        &self.certificates
    }

    /// `A⁺ = A ∩ ker ε`.
    pub fn augmentation_ideal(&self) -> Subspace {
        let ker_eps = kernel_of(self.hopf.counit());
        self.space.intersect(&ker_eps)
    }

    /// `H·A⁺`, the left ideal generated by `A⁺`.
    pub fn left_ideal(&self) -> Subspace {
        let h = &self.hopf;
        let f = h.field();
        let mut vs = Vec::new();
        for i in 0..h.dim() {
            for a in self.augmentation_ideal().basis() {
                vs.push(h.product(&SVec::unit(f, i), a));
            }
        }
        Subspace::span(f, h.dim(), vs)
    }
}

/// Which hit action produced an annihilator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HitConvention {
    Right,
    Left,
}

/// `A = {h : h·z = ε(z)h for all z ∈ Z}` under the first hit action whose
/// output is a right coideal subalgebra.
///
/// `Z` must be a one-sided coideal of `U`, or become one after adjoining `1`
/// (an augmentation ideal `K⁺` is accepted through `K = K⁺ + k·1`).
pub fn coideal_annihilator(p: &Pairing, z: &Subspace) -> Result<(CoidealSubalgebra, HitConvention)> {
    let u = p.u();
    let h = p.h();
    if z.ambient_dim() != u.dim() {
        return Err(Error::dims("coideal ambient dimension", u.dim(), z.ambient_dim()));
    }
    let with_one = z.sum(&Subspace::span(u.field(), u.dim(), vec![u.one()]));
    let is_coideal = |s: &Subspace, side: Side| {
        let full = Subspace::full(u.field(), u.dim());
        let target = match side {
            Side::Right => s.tensor(&full),
            Side::Left => full.tensor(s),
        };
        s.basis().iter().all(|v| target.contains(&u.coproduct(v)))
    };
    if ![z, &with_one]
        .iter()
        .any(|s| is_coideal(s, Side::Right) || is_coideal(s, Side::Left))
    {
        return Err(Error::violation("Z is not a coideal of U"));
    }
    let mut failures = Vec::new();
    for (side, conv) in [(Side::Right, HitConvention::Right), (Side::Left, HitConvention::Left)] {
        let action = p.hit_action(side)?;
        let mut rows: Vec<SVec> = Vec::new();
        for zv in z.basis() {
            let eps = u.coalgebra().epsilon(zv);
            let m = action
                .act_by_element(zv)
                .sub(&LinMap::identity(h.field(), h.dim()).scale(&eps));
            rows.extend(m.row_vectors());
        }
        let a = if rows.is_empty() {
            Subspace::full(h.field(), h.dim())
        } else {
            kernel_of(&LinMap::from_rows(h.field(), h.dim(), &rows))
        };
        match CoidealSubalgebra::new(h, &a) {
            Ok(c) => return Ok((c, conv)),
            Err(e) => failures.push(format!("{conv:?}: {e}")),
        }
    }
    Err(Error::violation(format!(
        "no hit convention yields a coideal subalgebra ({})",
        failures.join("; ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, FiniteGroupTable};
    use crate::linalg::Field;

    #[test]
    fn grouplike_subalgebra_of_sweedler() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        assert!(a.certificates().all_hold());
        let f = h.field();
        let g1 = h.element("g").sub(&h.one());
        assert_eq!(a.augmentation_ideal(), Subspace::span(f, 4, vec![g1.clone()]));
        let gxx = h.element("gx").add(&h.element("x"));
        assert_eq!(a.left_ideal(), Subspace::span(f, 4, vec![g1, gxx]));
        assert_eq!(a.inclusion().rank(), 2);
    }

    #[test]
    fn non_coideals_name_the_offender() {
        let h = sweedler4();
        let e = CoidealSubalgebra::from_labels(&h, &["1", "x"]).unwrap_err().to_string();
        assert!(e.ends_with("right coideal fails at Δ(x)"), "{e}");
        let e = CoidealSubalgebra::from_labels(&h, &["g", "x"]).unwrap_err().to_string();
        assert!(e.contains("contains 1"), "{e}");
        let r = coideal_subalgebra_report(&h, &Subspace::span(h.field(), 4, vec![h.element("1"), h.element("x")]), Side::Left);
        assert!(r.all_hold());
    }

    #[test]
    fn trivial_and_full_subalgebras() {
        let h = sweedler4();
        let one = CoidealSubalgebra::from_labels(&h, &["1"]).unwrap();
        assert!(one.augmentation_ideal().is_zero());
        let all = CoidealSubalgebra::new(&h, &Subspace::full(h.field(), 4)).unwrap();
        assert_eq!(all.left_ideal().dim(), 3);
    }

    #[test]
    fn annihilators_of_subgroups_are_coset_functions() {
        let s3 = FiniteGroupTable::symmetric3();
        let f = Field::Rational;
        let h = function_algebra(f, &s3);
        let p = Pairing::canonical(&h);
        for (m, index) in [(vec![0], 6), (vec![0, 1], 3), (vec![0, 3, 4], 2), ((0..6).collect(), 1)] {
            let k = Subspace::span(f, 6, m.iter().map(|&i| SVec::unit(f, i)).collect());
            let (a, _) = coideal_annihilator(&p, &k).unwrap();
            assert_eq!(a.dim(), index);
            let cosets = s3.right_cosets(&m);
            for c in cosets {
                let v = SVec::from_pairs(c.iter().map(|&x| (x, f.one())));
                assert!(a.space().contains(&v));
            }
        }
    }

    #[test]
    fn annihilator_accepts_augmentation_ideals() {
        let c2 = FiniteGroupTable::cyclic(2);
        let f = Field::Rational;
        let h = function_algebra(f, &c2);
        let p = Pairing::canonical(&h);
        let u = group_algebra(f, &c2);
        let kplus = Subspace::span(f, 2, vec![u.basis(1).sub(&u.basis(0))]);
        let (a, _) = coideal_annihilator(&p, &kplus).unwrap();
        assert_eq!(a.dim(), 1);
    }
}
