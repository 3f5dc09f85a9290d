use std::cell::RefCell;
use std::collections::HashMap;

use crate::cert::{numbered, CheckReport};
use crate::correspondence::CoidealSubalgebra;
use crate::error::{Error, Result};
use crate::hopf::CoalgebraData;
use crate::linalg::{kernel_of, solve, Field, LinMap, SVec, Subspace};
use crate::rep::{Comodule, Module, RelHopfModule, Side};

/// `HOM_k(A, N)` and `ĤOM_k(A, N)` inside `Hom_k(A, N)`.
///
/// A map `f : A → N` is stored as the row-major vector of its `dim N × dim A`
/// matrix, so `Hom_k(A, N)` has coordinates `n·dim A + a`.
#[derive(Clone, Debug)]
pub struct InternalHom {
    sub: CoidealSubalgebra,
    target: Comodule,
    /// `ω : Hom(A,N) → Hom(A,N⊗H)`.
    pub omega: LinMap,
    /// `ν : Hom(A,N)⊗H → Hom(A,N⊗H)`.
    pub nu: LinMap,
    /// `{f : ω(f) ∈ Im ν}`.
    pub hom: Subspace,
    /// The `A`-compatible part of `hom`.
    pub carrier: Subspace,
    /// `carrier` in the coordinates of `hom`; its basis is the basis of `object`.
    compatible: Subspace,
    /// `ĤOM(A,N)` with the `ν⁻¹∘ω` coaction and `(f·b)(a) = f(ba)`.
    pub object: RelHopfModule,
    pub certificates: CheckReport,
}

/// Splits `x ∈ S'⊗H` (ambient index `s·dh + h`) into coordinates over the
/// canonical basis of `S ⊆ k^n`, giving index `k·dh + h`.
fn coords_times(space: &Subspace, x: &SVec, dh: usize) -> Option<SVec> {
    let mut slices: Vec<SVec> = vec![SVec::new(); dh];
    for (i, c) in x.iter() {
        slices[i % dh].set(i / dh, c.clone());
    }
    let mut out = SVec::new();
    for (h, s) in slices.iter().enumerate() {
        let cs = space.coordinates(s)?;
        for (k, c) in cs.iter() {
            out.add_term(k * dh + h, c);
        }
    }
    Some(out)
}

fn into_coords(space: &Subspace, vs: impl IntoIterator<Item = SVec>, what: &str) -> Result<Vec<SVec>> {
    into_coords_by(|v| space.coordinates(v), vs, what)
}

fn into_coords_by(
    coords: impl Fn(&SVec) -> Option<SVec>,
    vs: impl IntoIterator<Item = SVec>,
    what: &str,
) -> Result<Vec<SVec>> {
    vs.into_iter()
        .enumerate()
        .map(|(k, v)| {
            coords(&v)
                .ok_or_else(|| Error::NotContained(format!("{what}: basis vector {k} leaves the carrier")))
        })
        .collect()
}

/// Computes `ĤOM(A, N)` for a right coideal subalgebra `A` and a right
/// `H`-comodule `N`.
pub fn internal_hom(sub: &CoidealSubalgebra, n: &Comodule) -> Result<InternalHom> {
    let h = sub.hopf();
    if n.side() != Side::Right || n.coalgebra() != h.coalgebra() {
        return Err(Error::violation("internal hom needs a right H-comodule"));
    }
    if !h.antipode_bijective().0 {
        return Err(Error::violation("internal hom needs a bijective antipode"));
    }
    let f = h.field();
    let (da, dn, dh) = (sub.dim(), n.dim(), h.dim());
    let idn = LinMap::identity(f, dn);
    let idh = LinMap::identity(f, dh);

    // ω(f) = (id⊗m)(ρ⊗id)(f⊗S)Δ_A
    let rho_s = idn
        .kron(h.mult())
        .compose(&n.coaction().kron(&idh))
        .compose(&LinMap::identity(f, dn).kron(h.antipode()));
    let omega = solve::operator_matrix(f, dn, da, |m| {
        rho_s.compose(&m.kron(&idh)).compose(sub.coaction())
    });
    // ν(f⊗h)(a) = f(a)⊗h
    let total = dn * da * dh;
    let mut entries = Vec::with_capacity(total);
    for ni in 0..dn {
        for a in 0..da {
            for hi in 0..dh {
                entries.push(((ni * dh + hi) * da + a, (ni * da + a) * dh + hi, f.one()));
            }
        }
    }
    let nu = LinMap::from_entries(f, total, total, entries)?;
    let mut r = CheckReport::new();
    let nu_rank = nu.rank();
    r.push("ν injective", nu_rank == total, Some(format!("rank {nu_rank} < {total}")));
    let nu_inv = nu
        .inverse()
        .ok_or_else(|| Error::violation(format!("ν not injective: rank {nu_rank} < {total}")))?;

    let im = crate::linalg::image_of(&nu);
    let hom = kernel_of(&im.quotient_map().compose(&omega));
    let structure = nu_inv.compose(&omega);

    // HOM as a comodule and as an A-module
    let coaction_cols = hom
        .basis()
        .iter()
        .enumerate()
        .map(|(k, v)| {
            coords_times(&hom, &structure.apply(v), dh)
                .ok_or_else(|| Error::NotContained(format!("ν⁻¹ω of HOM basis vector {k} leaves HOM⊗H")))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom_coaction = LinMap::from_columns(f, hom.dim() * dh, coaction_cols);
    let a_alg = sub.algebra();
    let mut acted = Vec::with_capacity(hom.dim() * da);
    for v in hom.basis() {
        let m = solve::unvectorize(f, v, dn, da);
        for b in 0..da {
            acted.push(solve::vectorize(&m.compose(&a_alg.left_mult(&SVec::unit(f, b)))));
        }
    }
    let hom_action = LinMap::from_columns(f, hom.dim(), into_coords(&hom, acted, "HOM action")?);

    // A-compatibility: ρ(f·b) = f₀·b₀ ⊗ f₁b₁
    let k = hom.dim();
    let lhs = hom_coaction.compose(&hom_action);
    let rhs = hom_action
        .kron(h.mult())
        .compose(&LinMap::permute_legs(f, &[k, dh, da, dh], &[0, 2, 1, 3]))
        .compose(&hom_coaction.kron(sub.coaction()));
    let defect = lhs.sub(&rhs);
    let mut rows = Vec::new();
    for b in 0..da {
        let slice = defect.compose(&LinMap::identity(f, k).kron(&LinMap::from_columns(f, da, vec![SVec::unit(f, b)])));
        rows.extend(slice.row_vectors());
    }
    let compatible = kernel_of(&LinMap::from_rows(f, k, &rows));
    let carrier = Subspace::span(
        f,
        dn * da,
        compatible.basis().iter().map(|c| hom.from_coordinates(c)).collect(),
    );

    let big_comodule = Comodule::unlabelled(Side::Right, h.coalgebra().clone(), hom_coaction)?;
    let big_module = Module::unlabelled(Side::Right, a_alg.clone(), hom_action)?;
    let big = RelHopfModule::new(sub, big_comodule, big_module)?;
    let object = big.restrict_to(&compatible)?;
    r.absorb("", object.check());
    let labels = numbered("f", object.dim());
    let object = RelHopfModule::new(
        sub,
        object.comodule().clone().with_labels(labels.clone())?,
        object.module().clone().with_labels(labels)?,
    )?;
    Ok(InternalHom {
        sub: sub.clone(),
        target: n.clone(),
        omega,
        nu,
        hom,
        carrier,
        compatible,
        object,
        certificates: r,
    })
}

impl InternalHom {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn target(&self) -> &Comodule {
        &self.target
    }

    /// Coordinates of `f ∈ Hom(A, N)` in the basis of `object`.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        self.compatible.coordinates(&self.hom.coordinates(v)?)
    }

    /// The map `A → N` with coordinates `c` in the basis of `object`.
    pub fn map_at(&self, c: &SVec) -> LinMap {
        let v = self.hom.from_coordinates(&self.compatible.from_coordinates(c));
        solve::unvectorize(self.target.field(), &v, self.target.dim(), self.sub.dim())
    }

    /// `ĤOM → N`, `f ↦ f(1_A)`.
    pub fn evaluation_at_one(&self) -> LinMap {
        let f = self.target.field();
        let one = self.sub.algebra().one();
        let cols = (0..self.dim())
            .map(|k| self.map_at(&SVec::unit(f, k)).apply(&one))
            .collect();
        LinMap::from_columns(f, self.target.dim(), cols)
    }
}

/// The bijection `Δ : Hom_{ℳᴴ}(M, N) → Hom_{ℳᴴ_A}(M, ĤOM(A,N))` and its inverse.
#[derive(Clone, Debug)]
pub struct AdjunctionCheck {
    pub hom_comodules: usize,
    pub hom_relative: usize,
    /// `Δ` in the canonical bases of the two Hom spaces.
    pub delta: LinMap,
    /// `ψ ↦ [m ↦ ψ(m)(1)]`.
    pub inverse: LinMap,
    pub certificates: CheckReport,
}

impl AdjunctionCheck {
    pub fn holds(&self) -> bool {
        self.certificates.all_hold()
    }
}

/// Checks the adjunction bijection for a relative Hopf module `M` and a
/// comodule `N`, rechecking that each `Δ(φ)` is valued in `ĤOM`, `A`-linear
/// and colinear.
pub fn adjunction_unit_counit_check(m: &RelHopfModule, n: &Comodule) -> Result<AdjunctionCheck> {
    let sub = m.sub();
    let ih = internal_hom(sub, n)?;
    let f = n.field();
    let (dm, dn, da) = (m.dim(), n.dim(), sub.dim());
    let hat = &ih.object;

    let lhs = m.comodule().hom_colinear(n)?;
    let colinear = m.comodule().hom_colinear(hat.comodule())?;
    let linear = m.module().hom(hat.module())?;
    let rhs = colinear.intersect(&linear);

    let mut r = CheckReport::new();
    let mut in_hat = true;
    let mut delta_cols = Vec::with_capacity(lhs.dim());
    let mut images = Vec::with_capacity(lhs.dim());
    for (k, v) in lhs.basis().iter().enumerate() {
        let phi = solve::unvectorize(f, v, dn, dm);
        // column m of Δ(φ): a ↦ φ(m·a)
        let mut cols = Vec::with_capacity(dm);
        for mi in 0..dm {
            let mut g = SVec::new();
            for a in 0..da {
                let ma = m.module().act_by(a).apply(&SVec::unit(f, mi));
                for (ni, x) in phi.apply(&ma).iter() {
                    g.set(ni * da + a, x.clone());
                }
            }
            match ih.coordinates(&g) {
                Some(c) => cols.push(c),
                None => {
                    in_hat = false;
                    r.fail("valued in ĤOM", format!("Δ(φ{k}) at basis {}", m.labels()[mi]));
                    cols.push(SVec::new());
                }
            }
        }
        let img = LinMap::from_columns(f, hat.dim(), cols);
        let vec = solve::vectorize(&img);
        images.push(img);
        delta_cols.push(vec);
    }
    if in_hat {
        r.pass("valued in ĤOM");
    }
    let bad_linear = images.iter().position(|g| !m.module().is_linear(hat.module(), g));
    r.push("A-linear", bad_linear.is_none(), bad_linear.map(|k| format!("Δ(φ{k})")));
    let bad_colinear = images.iter().position(|g| !m.comodule().is_colinear(hat.comodule(), g));
    r.push("H-colinear", bad_colinear.is_none(), bad_colinear.map(|k| format!("Δ(φ{k})")));

    let delta = LinMap::from_columns(
        f,
        rhs.dim(),
        into_coords(&rhs, delta_cols, "Δ")?,
    );
    let ev = ih.evaluation_at_one();
    let inv_cols = rhs
        .basis()
        .iter()
        .map(|v| solve::vectorize(&ev.compose(&solve::unvectorize(f, v, hat.dim(), dm))))
        .collect::<Vec<_>>();
    let inverse = LinMap::from_columns(f, lhs.dim(), into_coords(&lhs, inv_cols, "inverse of Δ")?);
    r.push(
        "Hom dimensions equal",
        lhs.dim() == rhs.dim(),
        Some(format!("{} vs {}", lhs.dim(), rhs.dim())),
    );
    r.push("inverse ∘ Δ = id", inverse.compose(&delta).is_identity(), None);
    r.push("Δ ∘ inverse = id", delta.compose(&inverse).is_identity(), None);

    // naturality in M along endomorphisms of M
    let colin = m.comodule().hom_colinear(m.comodule())?;
    let lin = m.module().hom(m.module())?;
    let ends = colin.intersect(&lin);
    let mut natural = None;
    'outer: for e in ends.basis() {
        let g = solve::unvectorize(f, e, dm, dm);
        for (k, v) in lhs.basis().iter().enumerate() {
            let phi = solve::unvectorize(f, v, dn, dm);
            let pulled = solve::vectorize(&phi.compose(&g));
            let Some(c) = lhs.coordinates(&pulled) else {
                natural = Some(format!("φ{k}∘g leaves Hom"));
                break 'outer;
            };
            let left = solve::unvectorize(f, &rhs.from_coordinates(&delta.apply(&c)), hat.dim(), dm);
            if left != images[k].compose(&g) {
                natural = Some(format!("Δ(φ{k}∘g) ≠ Δ(φ{k})∘g"));
                break 'outer;
            }
        }
    }
    r.push("natural in M", natural.is_none(), natural);

    Ok(AdjunctionCheck {
        hom_comodules: lhs.dim(),
        hom_relative: rhs.dim(),
        delta,
        inverse,
        certificates: r,
    })
}

/// A comonad on finite-dimensional vector spaces, sampled on `k^n`.
///
/// `comult(n)` lands in `G(k^{dim G(k^n)})`.
pub trait SampledComonad {
    fn field(&self) -> Field;
    fn name(&self) -> String;
    fn dim(&self, n: usize) -> Result<usize>;
    fn map(&self, n: usize, m: usize, f: &LinMap) -> Result<LinMap>;
    fn counit(&self, n: usize) -> Result<LinMap>;
    fn comult(&self, n: usize) -> Result<LinMap>;
}

pub struct IdentityComonad {
    field: Field,
}

impl IdentityComonad {
    pub fn new(field: Field) -> IdentityComonad {
        IdentityComonad { field }
    }
}

impl SampledComonad for IdentityComonad {
    fn field(&self) -> Field {
        self.field
    }

    fn name(&self) -> String {
        "identity".into()
    }

    fn dim(&self, n: usize) -> Result<usize> {
        Ok(n)
    }

    fn map(&self, _: usize, _: usize, f: &LinMap) -> Result<LinMap> {
        Ok(f.clone())
    }

    fn counit(&self, n: usize) -> Result<LinMap> {
        Ok(LinMap::identity(self.field, n))
    }

    fn comult(&self, n: usize) -> Result<LinMap> {
        Ok(LinMap::identity(self.field, n))
    }
}

/// `G = −⊗D`.
pub struct TensorComonad {
    d: CoalgebraData,
}

impl TensorComonad {
    pub fn new(d: &CoalgebraData) -> TensorComonad {
        TensorComonad { d: d.clone() }
    }
}

impl SampledComonad for TensorComonad {
    fn field(&self) -> Field {
        self.d.field()
    }

    fn name(&self) -> String {
        "tensor with D".into()
    }

    fn dim(&self, n: usize) -> Result<usize> {
        Ok(n * self.d.dim())
    }

    fn map(&self, _: usize, _: usize, f: &LinMap) -> Result<LinMap> {
        Ok(f.kron(&LinMap::identity(self.field(), self.d.dim())))
    }

    fn counit(&self, n: usize) -> Result<LinMap> {
        Ok(LinMap::identity(self.field(), n).kron(self.d.counit()))
    }

    fn comult(&self, n: usize) -> Result<LinMap> {
        Ok(LinMap::identity(self.field(), n).kron(self.d.comult()))
    }
}

/// `G = Forget∘Q̃` with `Q̃(V) = ĤOM(A, V⊗H)`: the comonad of the
/// composite adjunction `Mod_𝒞(A) ⇄ Vect`.
pub struct HomComonad {
    sub: CoidealSubalgebra,
    cache: RefCell<HashMap<usize, InternalHom>>,
}

impl HomComonad {
    pub fn new(sub: &CoidealSubalgebra) -> HomComonad {
        HomComonad {
            sub: sub.clone(),
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// `ĤOM(A, k^n⊗H)`.
    pub fn value(&self, n: usize) -> Result<InternalHom> {
        if let Some(v) = self.cache.borrow().get(&n) {
            return Ok(v.clone());
        }
        let h = self.sub.hopf();
        let cofree = Comodule::unlabelled(
            Side::Right,
            h.coalgebra().clone(),
            LinMap::identity(h.field(), n).kron(h.comult()),
        )?;
        let ih = internal_hom(&self.sub, &cofree)?;
        self.cache.borrow_mut().insert(n, ih.clone());
        Ok(ih)
    }
}

impl SampledComonad for HomComonad {
    fn field(&self) -> Field {
        self.sub.hopf().field()
    }

    fn name(&self) -> String {
        "forget after internal hom".into()
    }

    fn dim(&self, n: usize) -> Result<usize> {
        Ok(self.value(n)?.dim())
    }

    fn map(&self, n: usize, m: usize, f: &LinMap) -> Result<LinMap> {
        let (src, dst) = (self.value(n)?, self.value(m)?);
        let lift = f.kron(&LinMap::identity(self.field(), self.sub.hopf().dim()));
        let vs = (0..src.dim())
            .map(|k| solve::vectorize(&lift.compose(&src.map_at(&SVec::unit(self.field(), k)))))
            .collect::<Vec<_>>();
        Ok(LinMap::from_columns(self.field(), dst.dim(), into_coords_by(|v| dst.coordinates(v), vs, "G(f)")?))
    }

    fn counit(&self, n: usize) -> Result<LinMap> {
        let ih = self.value(n)?;
        let h = self.sub.hopf();
        Ok(LinMap::identity(self.field(), n)
            .kron(h.counit())
            .compose(&ih.evaluation_at_one()))
    }

    fn comult(&self, n: usize) -> Result<LinMap> {
        let src = self.value(n)?;
        let d = src.dim();
        let dst = self.value(d)?;
        let m = &src.object;
        let f = self.field();
        let da = self.sub.dim();
        // m ↦ [a ↦ ρ(m·a)]
        let mut vs = Vec::with_capacity(d);
        for mi in 0..d {
            let mut g = SVec::new();
            for a in 0..da {
                let ma = m.module().act_by(a).apply(&SVec::unit(f, mi));
                for (i, x) in m.comodule().coaction().apply(&ma).iter() {
                    g.set(i * da + a, x.clone());
                }
            }
            vs.push(g);
        }
        Ok(LinMap::from_columns(f, dst.dim(), into_coords_by(|v| dst.coordinates(v), vs, "comonad comultiplication")?))
    }
}

/// The coalgebra `C = G(k)` of a comonad, with `G(k^n) ≅ k^n⊗C` checked on samples.
#[derive(Clone, Debug)]
pub struct ComonadCoalgebra {
    pub coalgebra: CoalgebraData,
    pub certificates: CheckReport,
    /// Hypotheses not decidable from samples.
    pub assumed: Vec<String>,
}

/// `φ_n : k^n⊗C → G(k^n)` assembled from `G` of the coordinate inclusions.
fn additivity_witness(g: &dyn SampledComonad, n: usize, dc: usize) -> Result<LinMap> {
    let f = g.field();
    let mut cols = Vec::with_capacity(n * dc);
    for i in 0..n {
        let iota = LinMap::from_columns(f, n, vec![SVec::unit(f, i)]);
        let gi = g.map(1, n, &iota)?;
        cols.extend(gi.columns().iter().cloned());
    }
    Ok(LinMap::from_columns(f, g.dim(n)?, cols))
}

/// Extracts `C = G(k)` with `Δ = φ_{dim C}⁻¹∘δ_k` and `ε = ε_k`, and checks the
/// comonad structure is `id⊗Δ`, `id⊗ε` on each sample `k^n`.
pub fn comonad_coalgebra(g: &dyn SampledComonad, samples: &[usize]) -> Result<ComonadCoalgebra> {
    let f = g.field();
    let dc = g.dim(1)?;
    let phi_c = additivity_witness(g, dc, dc)?;
    let phi_c_inv = phi_c
        .inverse()
        .ok_or_else(|| Error::violation("G does not preserve finite direct sums at C"))?;
    let comult = phi_c_inv.compose(&g.comult(1)?);
    let counit = g.counit(1)?;
    let coalgebra = CoalgebraData::new(numbered("c", dc), comult.clone(), counit.clone())?;
    let mut r = CheckReport::new();
    r.absorb("", coalgebra.check());
    for &n in samples {
        let phi = additivity_witness(g, n, dc)?;
        let Some(phi_inv) = phi.inverse() else {
            r.fail(format!("direct sums preserved on k^{n}"), format!("rank {}", phi.rank()));
            continue;
        };
        r.pass(format!("direct sums preserved on k^{n}"));
        let idn = LinMap::identity(f, n);
        let gn = g.dim(n)?;
        let phi_g = additivity_witness(g, gn, dc)?;
        let phi_g_inv = phi_g
            .inverse()
            .ok_or_else(|| Error::violation(format!("G does not preserve direct sums at G(k^{n})")))?;
        let transported = phi_inv
            .kron(&LinMap::identity(f, dc))
            .compose(&phi_g_inv)
            .compose(&g.comult(n)?)
            .compose(&phi);
        r.compare(
            &format!("comultiplication is id⊗Δ on k^{n}"),
            &transported,
            &idn.kron(&comult),
            &|j| format!("basis {j} of k^{n}⊗C"),
        );
        r.compare(
            &format!("counit is id⊗ε on k^{n}"),
            &g.counit(n)?.compose(&phi),
            &idn.kron(&counit),
            &|j| format!("basis {j} of k^{n}⊗C"),
        );
    }
    Ok(ComonadCoalgebra {
        coalgebra,
        certificates: r,
        assumed: vec!["G is cocontinuous".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, sweedler4, FiniteGroupTable};

    #[test]
    fn internal_hom_into_the_regular_comodule() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let ih = internal_hom(&a, &Comodule::regular(Side::Right, h.coalgebra())).unwrap();
        assert!(ih.certificates.all_hold());
        assert!(ih.object.is_valid());
        assert_eq!(ih.hom.dim(), 8);
        let k = Comodule::trivial_hopf(Side::Right, &h, 1);
        assert!(internal_hom(&a, &k.dual()).is_err());
    }

    #[test]
    fn adjunction_bijection() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let m = RelHopfModule::hopf_regular(&a);
        for n in [Comodule::trivial_hopf(Side::Right, &h, 1), Comodule::regular(Side::Right, h.coalgebra())] {
            let c = adjunction_unit_counit_check(&m, &n).unwrap();
            assert!(c.holds());
            assert_eq!(c.hom_comodules, c.hom_relative);
            assert!(c.inverse.compose(&c.delta).is_identity());
        }
    }

    #[test]
    fn identity_comonad_is_the_ground_field() {
        let co = comonad_coalgebra(&IdentityComonad::new(Field::Rational), &[1, 2, 3]).unwrap();
        assert_eq!(co.coalgebra.dim(), 1);
        assert!(co.certificates.all_hold());
    }

    #[test]
    fn tensor_comonad_recovers_the_coalgebra() {
        let d = function_algebra(Field::Rational, &FiniteGroupTable::symmetric3()).coalgebra().clone();
        let co = comonad_coalgebra(&TensorComonad::new(&d), &[1, 2]).unwrap();
        assert!(co.certificates.all_hold());
        assert_eq!(co.coalgebra.comult(), d.comult());
        assert_eq!(co.coalgebra.counit(), d.counit());
    }

    #[test]
    fn hom_comonad_over_scalars_is_h() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1"]).unwrap();
        let g = HomComonad::new(&a);
        assert_eq!(g.dim(1).unwrap(), 4);
        let co = comonad_coalgebra(&g, &[1, 2]).unwrap();
        assert!(co.certificates.all_hold());
        assert!(co.coalgebra.check().all_hold());
        assert!(!co.coalgebra.is_cocommutative());
    }
}
