//! `suite all`: every verification over the standard corpus.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::catalog::{by_name, function_algebra, sweedler4, FiniteGroupTable, NAMES};
use crate::correspondence::{quotient_module_coalgebra, CoidealSubalgebra};
use crate::error::Result;
use crate::linalg::Field;
use crate::rep::{Comodule, Side};

use super::report::Section;
use super::workflows as w;

type Job = Box<dyn Fn() -> Result<(Vec<Section>, Vec<String>)> + Send + Sync>;

fn one(s: Result<Section>) -> Result<(Vec<Section>, Vec<String>)> {
    s.map(|s| (vec![s], Vec::new()))
}

fn sweedler_sub() -> Result<CoidealSubalgebra> {
    CoidealSubalgebra::from_labels(&sweedler4(), &["1", "g"])
}

fn jobs(seed: u64) -> Vec<(String, Job)> {
    let mut v: Vec<(String, Job)> = Vec::new();
    for name in NAMES {
        let params: Vec<u64> = if name == "taft" { vec![3, 7, 2] } else { Vec::new() };
        let label = if name == "taft" { "taft(3, F7)".to_string() } else { name.to_string() };
        let l = label.clone();
        v.push((
            format!("axioms {label}"),
            Box::new(move || Ok((vec![w::axioms(&l, &by_name(name, &params)?)], Vec::new()))),
        ));
        if name != "taft" {
            let l = label.clone();
            v.push((
                format!("morita {label}"),
                Box::new(move || one(w::morita_identity(&l, by_name(name, &[])?.coalgebra()))),
            ));
        }
    }
    v.push((
        "morita coend k^C2".into(),
        Box::new(|| {
            let d = function_algebra(Field::Rational, &FiniteGroupTable::cyclic(2));
            one(w::morita_coend("k^C2 regular", &Comodule::regular(Side::Right, d.coalgebra())))
        }),
    ));
    v.push((
        "sweedler4 span{1,g}".into(),
        Box::new(move || {
            let a = sweedler_sub()?;
            let q = quotient_module_coalgebra(&a)?;
            let (t1, assumed) = w::theorem1("sweedler4", &a)?;
            let objects = w::MW_OBJECTS.to_vec();
            Ok((
                vec![
                    w::correspond("sweedler4", &a)?,
                    w::quotient_roundtrip("sweedler4", &q)?,
                    w::mw("sweedler4", &a, &objects)?,
                    t1,
                    w::theorem2("sweedler4", &q)?,
                    w::gamma("sweedler4", &q, seed, 100)?,
                    w::internal_hom("sweedler4", &a)?,
                    w::flatness_oracle("sweedler4", &a, w::ORACLE_MAX_MIDDLE)?,
                ],
                assumed,
            ))
        }),
    ));
    for (label, members) in w::s3_subgroups() {
        let name = format!("k^S3 / {label}");
        let m2 = members.clone();
        v.push((
            name.clone(),
            Box::new(move || {
                let (a, q) = w::s3_data(&members)?;
                let mut out = vec![
                    w::correspond(&name, &a)?,
                    w::quotient_roundtrip(&name, &q)?,
                    w::flatness_oracle(&name, &a, w::ORACLE_MAX_MIDDLE)?,
                ];
                if label == "C2" {
                    out.push(w::mw(&name, &a, &w::MW_OBJECTS)?);
                    out.push(w::theorem2(&name, &q)?);
                }
                Ok((out, Vec::new()))
            }),
        ));
        v.push((
            format!("semisimplicity {label}"),
            Box::new(move || one(w::semisimplicity(&format!("kS3 ⊇ k{label}"), &FiniteGroupTable::symmetric3(), &m2))),
        ));
    }
    v
}

/// Runs every job, in parallel when threads are available, and returns the
/// sections sorted by instance hash and name together with the hypotheses
/// that were assumed rather than checked.
pub fn run_all(seed: u64) -> (Vec<Section>, Vec<String>) {
    let jobs = jobs(seed);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(Vec<Section>, Vec<String>)>> = Mutex::new(Vec::new());
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len());
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((name, job)) = jobs.get(i) else { break };
                let out = job().unwrap_or_else(|e| (vec![Section::from_error(name.clone(), &e)], Vec::new()));
                results.lock().expect("no job panics while holding the lock").push(out);
            });
        }
    });
    let mut sections = Vec::new();
    let mut assumed = Vec::new();
    for (s, a) in results.into_inner().expect("threads joined") {
        sections.extend(s);
        assumed.extend(a);
    }
    sections.sort_by(|a, b| (&a.instance, &a.name).cmp(&(&b.instance, &b.name)));
    assumed.sort();
    assumed.dedup();
    (sections, assumed)
}
