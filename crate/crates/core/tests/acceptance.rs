//! End-to-end acceptance run. Prints one line per criterion and fails if any
//! criterion fails or exceeds its time budget.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use qsg::catalog::{by_name, function_algebra, subgroup_data, sweedler4, FiniteGroupTable, NAMES};
use qsg::correspondence::{
    c_semisimple_implication, coinvariants, flatness_oracle_over, is_faithfully_coflat, is_faithfully_flat,
    mw_equivalence_check, psi, quotient_module_coalgebra, roundtrip_quotient, roundtrip_subalgebra, CoidealSubalgebra,
    QuotientModuleCoalgebra,
};
use qsg::hopf::{CoalgebraData, Pairing};
use qsg::linalg::{Field, SVec, Subspace};
use qsg::monadics::{
    adjunction_unit_counit_check, compare_talgebras_to_modules, free_talgebras, gamma_isomorphism, monad_from_adjunction,
    surjectivity_from_coflatness, theorem2_pipeline, unit_object_algebra, InductionAdjunction, ModuleInCategory,
};
use qsg::morita::{coend, coend_pre_equivalence, regular_coend_isomorphism, verify_pre_equivalence, PreEquivalenceData};
use qsg::rep::{simple_comodules, Comodule, Module, RelHopfModule, Side};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn h4_instance() -> (CoidealSubalgebra, QuotientModuleCoalgebra) {
    let h = sweedler4();
    let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
    let q = quotient_module_coalgebra(&a).unwrap();
    (a, q)
}

fn s3_instances() -> Vec<(&'static str, CoidealSubalgebra, QuotientModuleCoalgebra)> {
    let s3 = FiniteGroupTable::symmetric3();
    [("1", vec![0]), ("C2", vec![0, 1]), ("C3", vec![0, 3, 4]), ("S3", (0..6).collect())]
        .into_iter()
        .map(|(n, m)| {
            let (a, q) = subgroup_data(Field::Rational, &s3, &m).unwrap();
            (n, a, q)
        })
        .collect()
}

fn corpus() -> Vec<(String, CoidealSubalgebra, QuotientModuleCoalgebra)> {
    let (a, q) = h4_instance();
    let mut v = vec![("H4".to_string(), a, q)];
    v.extend(s3_instances().into_iter().map(|(n, a, q)| (format!("k^S3/{n}"), a, q)));
    v
}

fn scratch_dir() -> PathBuf {
    std::env::temp_dir().join(format!("qsg-acceptance-{}", std::process::id()))
}

fn scratch(name: &str) -> PathBuf {
    let dir = scratch_dir();
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> qsg::cli::Outcome {
    qsg::cli::run(std::iter::once("qsg").chain(args.iter().copied()))
}

fn axiom_suite() -> Verdict {
    let objects: [(&str, &[&str]); 6] = [
        ("k", &[]),
        ("kC2", &[]),
        ("kS3", &[]),
        ("k^S3", &[]),
        ("sweedler4", &[]),
        ("taft", &["3", "7", "2"]),
    ];
    let mut slowest = Duration::ZERO;
    for (name, params) in objects {
        let path = scratch(&format!("{}.qsg", name.replace('^', "dual-")));
        let p = path.to_str().unwrap();
        let mut args = vec!["catalog", name];
        args.extend_from_slice(params);
        args.extend(["--emit", p]);
        let out = run(&args);
        ensure(out.exit_code == 0, format!("catalog {name}: {}", out.stderr))?;
        let t = Instant::now();
        let out = run(&["check", p]);
        let took = t.elapsed();
        slowest = slowest.max(took);
        ensure(out.exit_code == 0, format!("check {name}: {}", out.stdout))?;
        ensure(took < Duration::from_secs(1), format!("check {name} took {took:.2?}"))?;
    }
    Ok(format!("6 objects, slowest check {slowest:.2?}"))
}

fn sweedler_correspondence() -> Verdict {
    let t = Instant::now();
    let (a, q) = h4_instance();
    ensure(q.dim() == 2, format!("dim H_A = {}", q.dim()))?;
    let back = ok(coinvariants(&q))?;
    let h = a.hopf();
    let expected = Subspace::span(h.field(), 4, vec![h.one(), h.element("g")]);
    ensure(back.space() == &expected, "coinvariants differ from span{1,g}")?;
    let took = t.elapsed();
    ensure(took < Duration::from_secs(1), format!("took {took:.2?}"))?;
    Ok(format!("dim H_A = 2, coinvariants = span{{1,g}} in {took:.2?}"))
}

fn roundtrips() -> Verdict {
    let mut n = 0;
    for (name, a, q) in corpus() {
        ensure(ok(roundtrip_subalgebra(&name, &a))?.exact, format!("{name}: A roundtrip inexact"))?;
        ensure(ok(roundtrip_quotient(&name, &q))?.exact, format!("{name}: quotient roundtrip inexact"))?;
        for side in [Side::Left, Side::Right] {
            let f = ok(is_faithfully_flat(&a, side))?.faithfully_flat;
            let c = ok(is_faithfully_coflat(&q, side))?.faithfully_flat;
            ensure(f == c, format!("{name} ({side}): flat {f}, coflat {c}"))?;
        }
        n += 1;
    }
    Ok(format!("{n} instances exact, flat/coflat agree on both sides"))
}

fn mw_objects(a: &CoidealSubalgebra) -> Result<usize, String> {
    let q = ok(quotient_module_coalgebra(a))?;
    let mut modules = vec![
        ("H".to_string(), RelHopfModule::hopf_regular(a)),
        ("A".to_string(), RelHopfModule::subalgebra_regular(a)),
    ];
    let mut comodules = vec![("H_A".to_string(), Comodule::regular(Side::Right, q.b()))];
    for (i, s) in ok(simple_comodules(q.b()))?.into_iter().enumerate() {
        modules.push((format!("Ψ(S{i})"), ok(psi(a, &q, &s))?.0));
        comodules.push((format!("S{i}"), s));
    }
    let r = ok(mw_equivalence_check(a, &q, &modules, &comodules))?;
    ensure(r.all_bijective(), format!("{r:?}"))?;
    Ok(r.units.len() + r.counits.len())
}

fn mw_equivalence() -> Verdict {
    let t = Instant::now();
    let mut objects = 0;
    let (a, _) = h4_instance();
    objects += mw_objects(&a)?;
    for (_, a, _) in s3_instances() {
        objects += mw_objects(&a)?;
    }
    let took = t.elapsed();
    ensure(took < Duration::from_secs(10), format!("took {took:.2?}"))?;
    Ok(format!("{objects} unit/counit maps bijective in {took:.2?}"))
}

fn theorem1() -> Verdict {
    let (a, _) = h4_instance();
    let h = a.hopf();
    let adj = InductionAdjunction::new(&a);
    let samples = vec![
        ("H".to_string(), Comodule::regular(Side::Right, h.coalgebra())),
        ("A".to_string(), RelHopfModule::subalgebra_regular(&a).comodule().clone()),
    ];
    let monad = ok(monad_from_adjunction(&adj, &samples))?;
    let alg = ok(unit_object_algebra(&adj, &monad))?;
    ensure(alg.algebra.mult() == a.algebra().mult(), "T(I) multiplication differs from A's")?;
    let modules = vec![
        ModuleInCategory::from_relhopf("H", &RelHopfModule::hopf_regular(&a)),
        ModuleInCategory::from_relhopf("A", &RelHopfModule::subalgebra_regular(&a)),
    ];
    let cmp = ok(compare_talgebras_to_modules(&adj, &alg, &free_talgebras(&monad), &modules))?;
    ensure(cmp.all_hold(), "comparison round trip fails")?;
    Ok(format!("T(I) = A, {} comparison round trips exact", cmp.entries.len()))
}

fn theorem2() -> Verdict {
    let s3 = FiniteGroupTable::symmetric3();
    let (a_s3, q_s3) = subgroup_data(Field::Rational, &s3, &[0, 1]).unwrap();
    let (a_h4, q_h4) = h4_instance();
    for (name, a, q) in [("H4", a_h4, q_h4), ("k^S3/C2", a_s3, q_s3)] {
        let out = ok(theorem2_pipeline(&q))?;
        ensure(out.halted_at.is_none(), format!("{name}: halted at {:?}", out.halted_at))?;
        let sub = out.subalgebra.as_ref().ok_or(format!("{name}: no subalgebra"))?;
        ensure(sub.space() == a.space(), format!("{name}: wrong coideal subalgebra"))?;
        ensure(ok(is_faithfully_flat(sub, Side::Right))?.faithfully_flat, format!("{name}: not flat"))?;
        ensure(ok(surjectivity_from_coflatness(&q))?.holds(), format!("{name}: surjectivity"))?;
    }
    Ok("H4 and k^S3/C2 recover A, flat, identity composite certified".into())
}

fn converse() -> Verdict {
    let t = Instant::now();
    let (_, q) = h4_instance();
    let x = Comodule::regular(Side::Right, q.hopf().coalgebra());
    let mut dims = Vec::new();
    for m in [Comodule::trivial(Side::Right, q.b(), &q.base_point(), 1), Comodule::regular(Side::Right, q.b())] {
        let g = ok(gamma_isomorphism(&x, &m, &q, 0, 100))?;
        ensure(g.holds(), format!("{:?}", g.certificates.first_failure()))?;
        ensure(g.gamma.compose(&g.gamma_tilde).is_identity() && g.gamma_tilde.compose(&g.gamma).is_identity(), "composites")?;
        dims.push(g.dim);
    }
    let took = t.elapsed();
    ensure(took < Duration::from_secs(5), format!("took {took:.2?}"))?;
    Ok(format!("γ, γ̃ inverse on dims {dims:?} plus 100 random vectors each, {took:.2?}"))
}

fn internal_hom() -> Verdict {
    let (a, _) = h4_instance();
    let h = a.hopf();
    let mut pairs = 0;
    for m in [RelHopfModule::hopf_regular(&a), RelHopfModule::subalgebra_regular(&a)] {
        for n in [Comodule::trivial_hopf(Side::Right, h, 1), Comodule::regular(Side::Right, h.coalgebra())] {
            let c = ok(adjunction_unit_counit_check(&m, &n))?;
            ensure(c.hom_comodules == c.hom_relative, "Hom dimensions differ")?;
            ensure(c.holds(), format!("{:?}", c.certificates.first_failure()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs certified"))
}

fn semisimplicity() -> Verdict {
    let s3 = FiniteGroupTable::symmetric3();
    let h = function_algebra(Field::Rational, &s3);
    let p = Pairing::canonical(&h);
    let regular = vec![Module::regular(Side::Left, p.u().algebra())];
    let mut c2 = None;
    for m in [vec![0], vec![0, 1], vec![0, 3, 4], (0..6).collect()] {
        let k = Subspace::span(Field::Rational, 6, m.iter().map(|&i| p.u().basis(i)).collect());
        let r = ok(c_semisimple_implication(&p, &k, &regular))?;
        ensure(r.consistent(), format!("implication falsified for {m:?}"))?;
        if m == [0, 1] {
            c2 = Some(r);
        }
    }
    let r = c2.unwrap();
    ensure(r.hypothesis, "hypothesis false for kC2")?;
    ensure(r.cosemisimple && r.flat_left && r.flat_right, "a conclusion is false for kC2")?;
    Ok("kC2 ⊆ kS3: hypothesis and both conclusions true; no instance falsifies".into())
}

fn oracle() -> Verdict {
    let mut checked = 0;
    for (name, a, _) in corpus() {
        for side in [Side::Left, Side::Right] {
            let ev = ok(is_faithfully_flat(&a, side))?.faithfully_flat;
            let or = ok(flatness_oracle_over(a.hopf().algebra(), a.space(), side, 6))?;
            ensure(ev == or.faithfully_flat(), format!("{name} ({side}): structural {ev}, oracle {or:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} verdicts agree"))
}

fn morita() -> Verdict {
    let mut coalgebras: Vec<(String, CoalgebraData)> = Vec::new();
    for name in NAMES {
        let params: &[u64] = if name == "taft" { &[3, 7, 2] } else { &[] };
        coalgebras.push((name.to_string(), by_name(name, params).unwrap().coalgebra().clone()));
    }
    for (name, d) in &coalgebras {
        let e = PreEquivalenceData::identity(d);
        let mut objects = vec![("D".to_string(), Comodule::regular(Side::Right, d))];
        if d.field().characteristic() == 0 {
            for (i, s) in ok(simple_comodules(d))?.into_iter().enumerate() {
                objects.push((format!("S{i}"), s));
            }
        }
        let r = ok(verify_pre_equivalence(&e, &objects, &objects))?;
        ensure(r.equivalence(), format!("identity data on {name}: {:?}", r.certificates.first_failure()))?;
        let (_, theta) = ok(regular_coend_isomorphism(d))?;
        ensure(theta.is_invertible(), format!("{name}: θ not invertible"))?;
    }

    let f = Field::Rational;
    let kc2 = function_algebra(f, &FiniteGroupTable::cyclic(2)).coalgebra().clone();
    let both_weights = Comodule::regular(Side::Right, &kc2);
    let ground = CoalgebraData::trivial(f);
    let plane = Comodule::trivial(Side::Right, &ground, &SVec::unit(f, 0), 2);
    let mut dims = Vec::new();
    for (d, m) in [(&kc2, &both_weights), (&ground, &plane)] {
        let c = ok(coend(m))?;
        ensure(c.certificates.all_hold(), "coend certificates")?;
        let e = ok(coend_pre_equivalence(m))?;
        let objects = |c: &CoalgebraData| -> Result<Vec<(String, Comodule)>, String> {
            let mut v = vec![("regular".to_string(), Comodule::regular(Side::Right, c))];
            v.extend(ok(simple_comodules(c))?.into_iter().enumerate().map(|(i, s)| (format!("S{i}"), s)));
            Ok(v)
        };
        let r = ok(verify_pre_equivalence(&e, &objects(&e.gamma)?, &objects(d)?))?;
        ensure(r.equivalence(), format!("coend pair: {:?}", r.certificates.first_failure()))?;
        dims.push(c.coalgebra.dim());
    }
    Ok(format!(
        "identity data on {} coalgebras; Coend pairs of dims {dims:?} certified",
        coalgebras.len()
    ))
}

fn determinism() -> Verdict {
    let t = Instant::now();
    let (p1, p2) = (scratch("suite-1.json"), scratch("suite-2.json"));
    for p in [&p1, &p2] {
        let out = run(&["--report", p.to_str().unwrap(), "suite", "all", "--seed", "0"]);
        ensure(out.exit_code == 0, format!("suite all failed:\n{}", out.stdout))?;
    }
    let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    ensure(a == b, "reports differ")?;
    let took = t.elapsed();
    ensure(took < Duration::from_secs(120), format!("took {took:.2?}"))?;
    Ok(format!("{} identical bytes, two runs in {took:.2?}", a.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("axiom suite on the catalog", axiom_suite),
        ("H4 quotient and coinvariants", sweedler_correspondence),
        ("correspondence round trips", roundtrips),
        ("unit and counit bijections", mw_equivalence),
        ("monad algebra and comparison", theorem1),
        ("quotient to subalgebra pipeline", theorem2),
        ("converse isomorphisms", converse),
        ("internal hom adjunction", internal_hom),
        ("semisimplicity implication", semisimplicity),
        ("flatness oracle agreement", oracle),
        ("Morita pre-equivalence data", morita),
        ("deterministic suite reports", determinism),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = f();
        let took = t.elapsed();
        let line = match &v {
            Ok(detail) => format!("criterion {:2} PASS  {name} [{took:.2?}]: {detail}\n", i + 1),
            Err(why) => format!("criterion {:2} FAIL  {name} [{took:.2?}]: {why}\n", i + 1),
        };
        // bypasses the test harness capture so the lines always show
        err.write_all(line.as_bytes()).unwrap();
        if v.is_err() {
            failed.push(i + 1);
        }
    }
    drop(err);
    let _ = std::fs::remove_dir_all(scratch_dir());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
