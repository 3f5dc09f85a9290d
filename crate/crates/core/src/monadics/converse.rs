use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cert::CheckReport;
use crate::correspondence::{
    coinvariants, is_faithfully_coflat, is_faithfully_flat, CoidealSubalgebra, QuotientModuleCoalgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{restrict, LinMap, SVec, Subspace};
use crate::rep::{cotensor, recover_coalgebra_map, Comodule, Side};

use super::monad::{monad_from_adjunction, unit_object_algebra, Adjunction, CotensorAdjunction};

#[derive(Clone, Debug)]
pub struct SurjectivityReport {
    pub rank: usize,
    pub dim_b: usize,
    pub coflat: bool,
    pub certificates: CheckReport,
}

impl SurjectivityReport {
    pub fn holds(&self) -> bool {
        self.coflat && self.certificates.all_hold()
    }
}

/// Certifies `rank π = dim B` and that `H → H□_B H → B□_B H ≅ H` is the identity.
pub fn surjectivity_from_coflatness(q: &QuotientModuleCoalgebra) -> Result<SurjectivityReport> {
    let h = q.hopf();
    let f = h.field();
    let d = h.dim();
    let coflat = is_faithfully_coflat(q, Side::Right)?.faithfully_flat
        && is_faithfully_coflat(q, Side::Left)?.faithfully_flat;
    let h_right = q.hopf_as_right_comodule();
    let h_left = q.hopf_as_left_comodule();
    let b_right = Comodule::regular(Side::Right, q.b());
    let hh = cotensor(&h_right, &h_left)?;
    let bh = cotensor(&b_right, &h_left)?;
    let full = Subspace::full(f, d);

    let mut r = CheckReport::new();
    let rank = q.pi().rank();
    r.push("π surjective", rank == q.dim(), Some(format!("rank {rank} < {}", q.dim())));
    let delta = match restrict(h.comult(), &full, &hh) {
        Ok(m) => {
            r.pass("Δ lands in H□H");
            m
        }
        Err(e) => {
            r.fail("Δ lands in H□H", e.to_string());
            return Ok(SurjectivityReport { rank, dim_b: q.dim(), coflat, certificates: r });
        }
    };
    let idh = LinMap::identity(f, d);
    let pi_id = restrict(&q.pi().kron(&idh), &hh, &bh)?;
    let collapse = restrict(&q.b().counit().kron(&idh), &bh, &full)?;
    r.push(
        "B□H ≅ H",
        collapse.is_invertible(),
        Some(format!("rank {} of {}", collapse.rank(), bh.dim())),
    );
    let composite = collapse.compose(&pi_id).compose(&delta);
    r.compare("composite is the identity", &composite, &idh, &|j| h.labels()[j].clone());
    Ok(SurjectivityReport {
        rank,
        dim_b: q.dim(),
        coflat,
        certificates: r,
    })
}

/// `X⊗̂M`: the right `B`-comodule `x⊗m ↦ x₀⊗m₀⊗x₁·m₁`.
pub fn twisted_tensor(x: &Comodule, m: &Comodule, q: &QuotientModuleCoalgebra) -> Result<Comodule> {
    let h = q.hopf();
    let f = h.field();
    let (dx, dm, dh, db) = (x.dim(), m.dim(), h.dim(), q.dim());
    let coaction = LinMap::identity(f, dx * dm)
        .kron(q.sigma())
        .compose(&LinMap::permute_legs(f, &[dx, dh, dm, db], &[0, 2, 1, 3]))
        .compose(&x.coaction().kron(m.coaction()));
    let mut labels = Vec::with_capacity(dx * dm);
    for a in x.labels() {
        for b in m.labels() {
            labels.push(format!("{a}⊗{b}"));
        }
    }
    Comodule::new(Side::Right, q.b().clone(), coaction, labels)
}

#[derive(Clone, Debug)]
pub struct GammaReport {
    /// `dim X⊗(M□_B H)`.
    pub dim: usize,
    pub gamma: LinMap,
    pub gamma_tilde: LinMap,
    pub seed: u64,
    pub random_checks: usize,
    pub certificates: CheckReport,
}

impl GammaReport {
    pub fn holds(&self) -> bool {
        self.certificates.all_hold()
    }
}

/// `γ : X⊗(M□_B H) → (X⊗̂M)□_B H`, `x⊗m⊗h ↦ x₀⊗m⊗x₁h`, and
/// `γ̃ : (x⊗m)⊗h ↦ x₀⊗m⊗S(x₁)h`, with both composites checked on the
/// computed subspaces and on `samples` seeded random vectors.
pub fn gamma_isomorphism(
    x: &Comodule,
    m: &Comodule,
    q: &QuotientModuleCoalgebra,
    seed: u64,
    samples: usize,
) -> Result<GammaReport> {
    let h = q.hopf();
    let f = h.field();
    if !h.antipode_bijective().0 {
        return Err(Error::violation("γ̃ needs a bijective antipode"));
    }
    let (dx, dm, dh) = (x.dim(), m.dim(), h.dim());
    let h_left = q.hopf_as_left_comodule();
    let src = Subspace::full(f, dx).tensor(&cotensor(m, &h_left)?);
    let xm = twisted_tensor(x, m, q)?;
    let dst = cotensor(&xm, &h_left)?;

    let idm = LinMap::identity(f, dm);
    let idh = LinMap::identity(f, dh);
    // x⊗m⊗h → x₀⊗x₁⊗m⊗h → x₀⊗m⊗x₁⊗h
    let spread = LinMap::permute_legs(f, &[dx, dh, dm, dh], &[0, 2, 1, 3])
        .compose(&x.coaction().kron(&idm.kron(&idh)));
    let mult = LinMap::identity(f, dx * dm).kron(h.mult());
    let gamma_raw = mult.compose(&spread);
    let s_leg = LinMap::identity(f, dx * dm).kron(&h.antipode().kron(&idh));
    let tilde_raw = mult.compose(&s_leg).compose(&spread);

    let mut r = CheckReport::new();
    let gamma = match restrict(&gamma_raw, &src, &dst) {
        Ok(g) => {
            r.pass("γ lands in (X⊗M)□H");
            g
        }
        Err(e) => {
            r.fail("γ lands in (X⊗M)□H", e.to_string());
            LinMap::zero(f, dst.dim(), src.dim())
        }
    };
    let gamma_tilde = match restrict(&tilde_raw, &dst, &src) {
        Ok(g) => {
            r.pass("γ̃ lands in X⊗(M□H)");
            g
        }
        Err(e) => {
            r.fail("γ̃ lands in X⊗(M□H)", e.to_string());
            LinMap::zero(f, src.dim(), dst.dim())
        }
    };
    r.push(
        "γ̃∘γ = id",
        gamma_tilde.compose(&gamma).is_identity(),
        Some(format!("on {} dimensions", src.dim())),
    );
    r.push(
        "γ∘γ̃ = id",
        gamma.compose(&gamma_tilde).is_identity(),
        Some(format!("on {} dimensions", dst.dim())),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for t in 0..samples {
        let mut c = SVec::new();
        for k in 0..src.dim() {
            c.set(k, f.from_i64(rng.gen_range(-9..=9)));
        }
        let v = src.from_coordinates(&c);
        if tilde_raw.apply(&gamma_raw.apply(&v)) != v {
            bad = Some(format!("sample {t} (seed {seed})"));
            break;
        }
    }
    r.push(format!("γ̃(γ(v)) = v on {samples} random vectors"), bad.is_none(), bad);
    Ok(GammaReport {
        dim: src.dim(),
        gamma,
        gamma_tilde,
        seed,
        random_checks: samples,
        certificates: r,
    })
}

/// Result of the pipeline from a quotient to its coideal subalgebra.
#[derive(Clone, Debug)]
pub struct Theorem2Outcome {
    pub stages: Vec<(String, CheckReport)>,
    pub halted_at: Option<String>,
    pub subalgebra: Option<CoidealSubalgebra>,
    pub flat_right: bool,
    pub flat_left: bool,
}

impl Theorem2Outcome {
    pub fn succeeded(&self) -> bool {
        self.halted_at.is_none() && self.flat_right && self.flat_left
    }
}

/// Runs the chain: recover `ψ` from the functor's value on `H`, check the
/// quotient data and coflatness, certify surjectivity, compute the
/// coinvariants, confirm the monad's algebra is the restricted
/// multiplication, and decide faithful flatness.
pub fn theorem2_pipeline(q: &QuotientModuleCoalgebra) -> Result<Theorem2Outcome> {
    let h = q.hopf();
    let mut out = Theorem2Outcome {
        stages: Vec::new(),
        halted_at: None,
        subalgebra: None,
        flat_right: false,
        flat_left: false,
    };
    let stage = |out: &mut Theorem2Outcome, name: &str, r: CheckReport| -> bool {
        let ok = r.all_hold();
        out.stages.push((name.to_string(), r));
        if !ok {
            out.halted_at = Some(name.to_string());
        }
        ok
    };

    let mut r = CheckReport::new();
    let lambda = q.hopf_as_right_comodule().coaction().clone();
    match recover_coalgebra_map(h.coalgebra(), q.b(), &lambda) {
        Ok(psi) => r.push("recovered map equals π", psi == *q.pi(), None),
        Err(e) => r.fail("recovered map equals π", e.to_string()),
    }
    if !stage(&mut out, "recover", r) {
        return Ok(out);
    }
    if !stage(&mut out, "quotient data", q.check()) {
        return Ok(out);
    }

    let surj = surjectivity_from_coflatness(q)?;
    let mut r = CheckReport::new();
    r.push("faithfully coflat", surj.coflat, None);
    if !stage(&mut out, "coflatness", r) {
        return Ok(out);
    }
    if !stage(&mut out, "surjectivity", surj.certificates) {
        return Ok(out);
    }

    let a = match coinvariants(q) {
        Ok(a) => a,
        Err(e) => {
            let mut r = CheckReport::new();
            r.fail("coinvariants form a coideal subalgebra", e.to_string());
            stage(&mut out, "coinvariants", r);
            return Ok(out);
        }
    };
    let mut r = CheckReport::new();
    r.pass("coinvariants form a coideal subalgebra");
    stage(&mut out, "coinvariants", r);

    let adj = CotensorAdjunction::new(q);
    let samples = vec![("H".to_string(), Comodule::regular(Side::Right, h.coalgebra()))];
    let mut r = CheckReport::new();
    match monad_from_adjunction(&adj, &samples).and_then(|m| unit_object_algebra(&adj, &m)) {
        Ok(alg) => {
            let carrier = adj.carrier(&adj.left(&Comodule::trivial_hopf(Side::Right, h, 1))?)?;
            r.absorb("T(I) ", alg.certificates.clone());
            r.push("T(I) is the coinvariants", carrier == *a.space(), None);
            r.push(
                "multiplication is the restriction of H's",
                alg.algebra.mult() == a.algebra().mult(),
                None,
            );
        }
        Err(e) => r.fail("monad extraction", e.to_string()),
    }
    if !stage(&mut out, "monad", r) {
        return Ok(out);
    }

    out.flat_right = is_faithfully_flat(&a, Side::Right)?.faithfully_flat;
    out.flat_left = is_faithfully_flat(&a, Side::Left)?.faithfully_flat;
    let mut r = CheckReport::new();
    r.push("faithfully flat (right)", out.flat_right, None);
    r.push("faithfully flat (left)", out.flat_left, None);
    stage(&mut out, "flatness", r);
    out.subalgebra = Some(a);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
    use crate::correspondence::quotient_module_coalgebra;
    use crate::linalg::Field;

    fn sweedler_quotient() -> QuotientModuleCoalgebra {
        let h = sweedler4();
        quotient_module_coalgebra(&CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap()).unwrap()
    }

    #[test]
    fn surjectivity_certificates() {
        let r = surjectivity_from_coflatness(&sweedler_quotient()).unwrap();
        assert!(r.holds());
        assert_eq!((r.rank, r.dim_b), (2, 2));
    }

    #[test]
    fn gamma_on_sweedler() {
        let q = sweedler_quotient();
        let x = Comodule::regular(Side::Right, q.hopf().coalgebra());
        let k = Comodule::trivial(Side::Right, q.b(), &q.base_point(), 1);
        let r = gamma_isomorphism(&x, &k, &q, 0, 25).unwrap();
        assert!(r.holds(), "{:?}", r.certificates.first_failure());
        assert_eq!(r.dim, 8);
        let b = Comodule::regular(Side::Right, q.b());
        let r = gamma_isomorphism(&x, &b, &q, 3, 25).unwrap();
        assert!(r.holds());
        assert_eq!(r.dim, 16);
        assert!(twisted_tensor(&x, &b, &q).unwrap().is_valid());
    }

    #[test]
    fn gamma_needs_a_bijective_antipode() {
        let q = sweedler_quotient();
        let h = q.hopf().with_antipode(LinMap::zero(Field::Rational, 4, 4)).unwrap();
        let q0 = QuotientModuleCoalgebra::counit(&h);
        let x = Comodule::regular(Side::Right, h.coalgebra());
        let m = Comodule::regular(Side::Right, q0.b());
        assert!(gamma_isomorphism(&x, &m, &q0, 0, 1).is_err());
    }

    #[test]
    fn pipeline_recovers_the_subalgebra() {
        let q = sweedler_quotient();
        let out = theorem2_pipeline(&q).unwrap();
        assert!(out.succeeded(), "{:?}", out.halted_at);
        assert_eq!(out.subalgebra.unwrap().dim(), 2);

        let s3 = FiniteGroupTable::symmetric3();
        let (a, q) = subgroup_data(Field::Rational, &s3, &[0, 1]).unwrap();
        let out = theorem2_pipeline(&q).unwrap();
        assert!(out.succeeded());
        assert_eq!(out.subalgebra.unwrap().space(), a.space());
    }

    #[test]
    fn pipeline_on_the_identity_quotient_gives_scalars() {
        let h = sweedler4();
        let out = theorem2_pipeline(&QuotientModuleCoalgebra::identity(&h)).unwrap();
        assert!(out.succeeded());
        let a = out.subalgebra.unwrap();
        assert_eq!(a.space(), &Subspace::span(h.field(), 4, vec![h.one()]));
    }
}
