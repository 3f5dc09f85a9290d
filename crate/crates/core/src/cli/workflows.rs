//! Verification runs shared by the commands and `suite all`.

use serde_json::json;

use crate::catalog::{function_algebra, subgroup_data, FiniteGroupTable};
use crate::cert::format_vector;
use crate::correspondence::{
    classify_quotient, classify_subalgebra, coinvariants, is_faithfully_coflat, is_faithfully_flat, mw_equivalence_check,
    psi, quotient_module_coalgebra, roundtrip_quotient, roundtrip_subalgebra, c_semisimple_implication,
    flatness_oracle_over, CoidealSubalgebra, QuotientModuleCoalgebra,
};
use crate::error::Result;
use crate::hopf::{CoalgebraData, HopfAlgebra, Pairing};
use crate::linalg::{Field, Subspace};
use crate::monadics::{
    adjunction_unit_counit_check, compare_talgebras_to_modules, free_talgebras, gamma_isomorphism, monad_from_adjunction,
    surjectivity_from_coflatness, theorem2_pipeline, unit_object_algebra, InductionAdjunction, ModuleInCategory,
};
use crate::morita::{coend, coend_pre_equivalence, regular_coend_isomorphism, verify_pre_equivalence, PreEquivalenceData};
use crate::rep::{simple_comodules, Comodule, Module, RelHopfModule, Side};

use super::report::Section;
use super::spec::SpecFile;

/// Largest middle term in the oracle's family of short exact sequences.
pub const ORACLE_MAX_MIDDLE: usize = 6;

pub fn hopf_hash(h: &HopfAlgebra) -> String {
    SpecFile::from_hopf(h).content_hash()
}

fn subspace_text(h: &HopfAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| format_vector(v, h.labels())).collect()
}

/// The Hopf axiom suite and antipode bijectivity.
pub fn axioms(name: &str, h: &HopfAlgebra) -> Section {
    let mut s = Section::new(format!("axioms {name}")).with_instance(hopf_hash(h));
    s.absorb("", h.check_axioms());
    let (bij, rank) = h.antipode_bijective();
    s.push("antipode bijective", bij, Some(format!("rank {rank} of {}", h.dim())));
    s.value("dim", h.dim());
    s.value("field", h.field().to_string());
    s
}

pub fn coalgebra_axioms(name: &str, c: &CoalgebraData) -> Section {
    let mut s = Section::new(format!("axioms {name}")).with_instance(SpecFile::from_coalgebra(c).content_hash());
    s.absorb("", c.check());
    s.value("dim", c.dim());
    s
}

/// `A ↦ H_A ↦ coinvariants`, classification and the flat/coflat agreement.
pub fn correspond(name: &str, a: &CoidealSubalgebra) -> Result<Section> {
    let h = a.hopf();
    let mut s = Section::new(format!("correspond {name}"))
        .with_instance(SpecFile::from_subspace(h, a.space()).content_hash());
    s.absorb("A ", a.certificates().clone());
    let q = quotient_module_coalgebra(a)?;
    s.absorb("H_A ", q.check());
    let back = coinvariants(&q)?;
    s.push(
        "coinvariants of H_A equal A",
        back.space() == a.space(),
        Some(format!("recovered {}", subspace_text(h, back.space()).join(", "))),
    );
    let rt = roundtrip_subalgebra(name, a)?;
    s.push("roundtrip exact", rt.exact, Some(rt.detail.clone()));
    let (label, flat) = classify_subalgebra(a)?;
    let (qlabel, coflat) = classify_quotient(&q)?;
    for (f, c) in flat.iter().zip(&coflat) {
        s.push(
            format!("flat and coflat agree ({} side)", f.side),
            f.faithfully_flat == c.faithfully_flat,
            Some(format!("flat {}, coflat {}", f.faithfully_flat, c.faithfully_flat)),
        );
    }
    s.value("dim A", a.dim());
    s.value("dim H_A", q.dim());
    s.value("A", subspace_text(h, a.space()));
    s.value("roundtrip", if rt.exact { "exact" } else { "inexact" });
    s.value("classification A", label.to_string());
    s.value("classification H_A", qlabel.to_string());
    Ok(s)
}

/// `Q ↦ coinvariants ↦ H/H(coinvariants)⁺` up to isomorphism.
pub fn quotient_roundtrip(name: &str, q: &QuotientModuleCoalgebra) -> Result<Section> {
    let mut s = Section::new(format!("quotient roundtrip {name}"))
        .with_instance(SpecFile::from_quotient(q).content_hash());
    let rt = roundtrip_quotient(name, q)?;
    s.push("roundtrip exact", rt.exact, Some(rt.detail.clone()));
    let a = coinvariants(q)?;
    for side in [Side::Left, Side::Right] {
        let f = is_faithfully_flat(&a, side)?.faithfully_flat;
        let c = is_faithfully_coflat(q, side)?.faithfully_flat;
        s.push(
            format!("flat and coflat agree ({side} side)"),
            f == c,
            Some(format!("flat {f}, coflat {c}")),
        );
    }
    s.value("dim B", q.dim());
    s.value("dim coinvariants", a.dim());
    Ok(s)
}

/// Names accepted by `mw --objects`.
pub const MW_OBJECTS: [&str; 4] = ["H", "A", "HA", "simples"];

/// Bijectivity of the unit `u_M` and counit `c_N` of the equivalence on the
/// selected test objects: `H` and `A` as relative Hopf modules, `H_A` as a
/// comodule, and the simple `H_A`-comodules together with their images.
pub fn mw(name: &str, a: &CoidealSubalgebra, objects: &[&str]) -> Result<Section> {
    let q = quotient_module_coalgebra(a)?;
    let mut modules = Vec::new();
    let mut comodules = Vec::new();
    if objects.contains(&"H") {
        modules.push(("H".to_string(), RelHopfModule::hopf_regular(a)));
    }
    if objects.contains(&"A") {
        modules.push(("A".to_string(), RelHopfModule::subalgebra_regular(a)));
    }
    if objects.contains(&"HA") {
        comodules.push(("H_A".to_string(), Comodule::regular(Side::Right, q.b())));
    }
    if objects.contains(&"simples") {
        for (i, n) in simple_comodules(q.b())?.into_iter().enumerate() {
            let (m, _) = psi(a, &q, &n)?;
            modules.push((format!("Ψ(S{i})"), m));
            comodules.push((format!("S{i}"), n));
        }
    }
    let report = mw_equivalence_check(a, &q, &modules, &comodules)?;
    let mut s = Section::new(format!("mw {name}")).with_instance(SpecFile::from_subspace(a.hopf(), a.space()).content_hash());
    for (kind, list) in [("u", &report.units), ("c", &report.counits)] {
        for o in list {
            s.push(
                format!("{kind}_{} bijective", o.name),
                o.bijective,
                Some(format!("rank {} on dim {}, round trip dim {}", o.rank, o.dim, o.round_trip_dim)),
            );
            s.push(format!("{kind}_{} is a morphism", o.name), o.morphism, Some(o.name.clone()));
        }
    }
    s.value("objects", report.units.len() + report.counits.len());
    Ok(s)
}

/// The `Res ⊣ forget` monad: `T(I)` with its multiplication against `A`'s,
/// and the comparison between `T`-algebras and `A`-modules.
pub fn theorem1(name: &str, a: &CoidealSubalgebra) -> Result<(Section, Vec<String>)> {
    let h = a.hopf();
    let adj = InductionAdjunction::new(a);
    let samples = vec![
        ("H".to_string(), Comodule::regular(Side::Right, h.coalgebra())),
        ("A".to_string(), RelHopfModule::subalgebra_regular(a).comodule().clone()),
    ];
    let monad = monad_from_adjunction(&adj, &samples)?;
    let alg = unit_object_algebra(&adj, &monad)?;
    let mut s = Section::new(format!("theorem1 {name}")).with_instance(SpecFile::from_subspace(h, a.space()).content_hash());
    s.absorb("T(I) ", alg.certificates.clone());
    s.push(
        "T(I) multiplication equals multiplication of A",
        alg.algebra.mult() == a.algebra().mult(),
        Some(format!("{:?} vs {:?}", alg.algebra.mult(), a.algebra().mult())),
    );
    s.push("T(I) unit equals unit of A", alg.algebra.unit() == a.algebra().unit(), None);
    let modules = vec![
        ModuleInCategory::from_relhopf("H", &RelHopfModule::hopf_regular(a)),
        ModuleInCategory::from_relhopf("A", &RelHopfModule::subalgebra_regular(a)),
    ];
    let cmp = compare_talgebras_to_modules(&adj, &alg, &free_talgebras(&monad), &modules)?;
    for e in &cmp.entries {
        s.absorb(&format!("{} ({}) ", e.name, e.direction), e.certificates.clone());
        s.push(format!("{} round trip", e.name), e.round_trip, Some(e.direction.clone()));
    }
    s.value("dim T(I)", alg.algebra.dim());
    s.value("sampled objects", monad.objects.len());
    Ok((s, cmp.assumed))
}

/// The staged pipeline from a quotient to its coideal subalgebra.
pub fn theorem2(name: &str, q: &QuotientModuleCoalgebra) -> Result<Section> {
    let h = q.hopf();
    let out = theorem2_pipeline(q)?;
    let mut s = Section::new(format!("theorem2 {name}")).with_instance(SpecFile::from_quotient(q).content_hash());
    for (stage, r) in &out.stages {
        s.absorb(&format!("{stage}: "), r.clone());
    }
    let surj = surjectivity_from_coflatness(q)?;
    s.push("surjectivity certificate", surj.holds(), Some(format!("rank {} of {}", surj.rank, surj.dim_b)));
    if let Some(stage) = &out.halted_at {
        s.value("halted at", stage.clone());
    }
    if let Some(a) = &out.subalgebra {
        s.value("coideal subalgebra", subspace_text(h, a.space()));
    }
    s.value("faithfully flat", json!({ "left": out.flat_left, "right": out.flat_right }));
    Ok(s)
}

/// `γ` and `γ̃` for `X = H` and `M ∈ {k, B}`.
pub fn gamma(name: &str, q: &QuotientModuleCoalgebra, seed: u64, samples: usize) -> Result<Section> {
    let h = q.hopf();
    let x = Comodule::regular(Side::Right, h.coalgebra());
    let ms = [
        ("k", Comodule::trivial(Side::Right, q.b(), &q.base_point(), 1)),
        ("B", Comodule::regular(Side::Right, q.b())),
    ];
    let mut s = Section::new(format!("gamma {name}")).with_instance(SpecFile::from_quotient(q).content_hash());
    for (mname, m) in &ms {
        let g = gamma_isomorphism(&x, m, q, seed, samples)?;
        s.absorb(&format!("M = {mname}: "), g.certificates);
        s.value(&format!("dim X⊗(M□H), M = {mname}"), g.dim);
    }
    s.value("random samples", samples);
    Ok(s)
}

/// The `ĤOM` adjunction on `M ∈ {H, A}`, `N ∈ {k, H}`.
pub fn internal_hom(name: &str, a: &CoidealSubalgebra) -> Result<Section> {
    let h = a.hopf();
    let ms = [("H", RelHopfModule::hopf_regular(a)), ("A", RelHopfModule::subalgebra_regular(a))];
    let ns = [
        ("k", Comodule::trivial_hopf(Side::Right, h, 1)),
        ("H", Comodule::regular(Side::Right, h.coalgebra())),
    ];
    let mut s = Section::new(format!("internal hom {name}")).with_instance(SpecFile::from_subspace(h, a.space()).content_hash());
    for (mn, m) in &ms {
        for (nn, n) in &ns {
            let c = adjunction_unit_counit_check(m, n)?;
            let tag = format!("({mn}, {nn})");
            s.push(
                format!("{tag} Hom dimensions equal"),
                c.hom_comodules == c.hom_relative,
                Some(format!("{} vs {}", c.hom_comodules, c.hom_relative)),
            );
            s.absorb(&format!("{tag} "), c.certificates);
            s.value(&format!("dim Hom {tag}"), c.hom_comodules);
        }
    }
    Ok(s)
}

/// The semisimplicity implication for `K = k[M] ⊆ kG` paired with `k^G`.
pub fn semisimplicity(name: &str, g: &FiniteGroupTable, m: &[usize]) -> Result<Section> {
    let h = function_algebra(Field::Rational, g);
    let p = Pairing::canonical(&h);
    let k = Subspace::span(
        Field::Rational,
        p.u().dim(),
        m.iter().map(|&i| p.u().basis(i)).collect(),
    );
    let modules = vec![Module::regular(Side::Left, p.u().algebra())];
    let r = c_semisimple_implication(&p, &k, &modules)?;
    let mut s = Section::new(format!("semisimplicity {name}")).with_instance(SpecFile::from_pairing(&p).content_hash());
    s.push(
        "implication not falsified",
        r.consistent(),
        Some(format!(
            "hypothesis {}, cosemisimple {}, flat left {}, flat right {}",
            r.hypothesis, r.cosemisimple, r.flat_left, r.flat_right
        )),
    );
    s.value("hypothesis", r.hypothesis);
    s.value("cosemisimple", r.cosemisimple);
    s.value("faithfully flat", json!({ "left": r.flat_left, "right": r.flat_right }));
    Ok(s)
}

/// The structural flatness verdict against the exactness oracle.
pub fn flatness_oracle(name: &str, a: &CoidealSubalgebra, max_middle: usize) -> Result<Section> {
    let h = a.hopf();
    let mut s = Section::new(format!("flatness oracle {name}")).with_instance(SpecFile::from_subspace(h, a.space()).content_hash());
    for side in [Side::Left, Side::Right] {
        let ev = is_faithfully_flat(a, side)?;
        let or = flatness_oracle_over(h.algebra(), a.space(), side, max_middle)?;
        s.push(
            format!("verdicts agree ({side} side)"),
            ev.faithfully_flat == or.faithfully_flat(),
            Some(format!(
                "structural {}, oracle {} ({})",
                ev.faithfully_flat,
                or.faithfully_flat(),
                or.counterexample.clone().unwrap_or_default()
            )),
        );
        s.value(&format!("sequences ({side})"), or.sequences);
    }
    Ok(s)
}

fn objects_of(c: &CoalgebraData) -> Result<Vec<(String, Comodule)>> {
    let mut v = vec![("regular".to_string(), Comodule::regular(Side::Right, c))];
    for (i, n) in simple_comodules(c)?.into_iter().enumerate() {
        v.push((format!("S{i}"), n));
    }
    Ok(v)
}

/// The identity pre-equivalence of `D` and the isomorphism `Coend(D) ≅ D`.
pub fn morita_identity(name: &str, c: &CoalgebraData) -> Result<Section> {
    let mut s = Section::new(format!("morita {name}")).with_instance(SpecFile::from_coalgebra(c).content_hash());
    let objects = objects_of(c)?;
    let r = verify_pre_equivalence(&PreEquivalenceData::identity(c), &objects, &objects)?;
    s.push("identity data: f bijective", r.f_bijective, None);
    s.push("identity data: g bijective", r.g_bijective, None);
    s.absorb("identity data: ", r.certificates);
    let (co, theta) = regular_coend_isomorphism(c)?;
    s.absorb("Coend(D) ", co.certificates);
    s.push(
        "θ : Coend(D) → D invertible",
        theta.is_invertible(),
        Some(format!("rank {} of {}", theta.rank(), c.dim())),
    );
    s.push(
        "θ is a coalgebra map",
        co.coalgebra.check_morphism(c, &theta)?.all_hold(),
        None,
    );
    s.value("dim", c.dim());
    s.value("test objects", objects.len());
    Ok(s)
}

/// The pre-equivalence `(Coend(M), D, M, M*)`.
pub fn morita_coend(name: &str, m: &Comodule) -> Result<Section> {
    let mut s = Section::new(format!("morita coend {name}")).with_instance(SpecFile::from_comodule(m).content_hash());
    let c = coend(m)?;
    s.absorb("Coend(M) ", c.certificates.clone());
    let e = coend_pre_equivalence(m)?;
    let gamma_objects = objects_of(&e.gamma)?;
    let d_objects = vec![
        ("M".to_string(), m.clone()),
        ("regular".to_string(), Comodule::regular(Side::Right, m.coalgebra())),
    ];
    let r = verify_pre_equivalence(&e, &gamma_objects, &d_objects)?;
    s.push("f bijective", r.f_bijective, None);
    s.push("g bijective", r.g_bijective, None);
    s.absorb("", r.certificates);
    s.value("dim Coend(M)", c.coalgebra.dim());
    s.value("dim M", m.dim());
    Ok(s)
}

/// Subgroup data of `S₃` used throughout the suite, as `(label, members)`.
pub fn s3_subgroups() -> Vec<(&'static str, Vec<usize>)> {
    vec![("1", vec![0]), ("C2", vec![0, 1]), ("C3", vec![0, 3, 4]), ("S3", (0..6).collect())]
}

pub fn s3_data(members: &[usize]) -> Result<(CoidealSubalgebra, QuotientModuleCoalgebra)> {
    subgroup_data(Field::Rational, &FiniteGroupTable::symmetric3(), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sweedler4;

    #[test]
    fn correspond_values_for_sweedler() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let s = correspond("H4", &a).unwrap();
        assert!(s.holds());
        assert_eq!(s.values["dim H_A"], 2);
        assert_eq!(s.values["roundtrip"], "exact");
        assert_eq!(s.values["classification A"], "quantum-homogeneous-space");
    }

    #[test]
    fn subgroup_sections_pass() {
        for (name, m) in s3_subgroups() {
            let (a, q) = s3_data(&m).unwrap();
            assert!(correspond(name, &a).unwrap().holds(), "{name}");
            assert!(quotient_roundtrip(name, &q).unwrap().holds(), "{name}");
            assert!(semisimplicity(name, &FiniteGroupTable::symmetric3(), &m).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn gamma_dimensions() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        let s = gamma("H4", &q, 0, 10).unwrap();
        assert!(s.holds());
        assert_eq!(s.values["dim X⊗(M□H), M = k"], 8);
        assert_eq!(s.values["dim X⊗(M□H), M = B"], 16);
    }

    #[test]
    fn hashes_are_stable() {
        assert_eq!(hopf_hash(&sweedler4()), hopf_hash(&sweedler4()));
        assert_ne!(hopf_hash(&sweedler4()), hopf_hash(&sweedler4().dual()));
    }
}
