//! Command-line front end: spec files in, verdicts and JSON reports out.
//!
//! Exit codes: 0 when every check holds, 1 when a check fails, 2 when the
//! input cannot be read, parsed or built.

pub mod report;
pub mod spec;
pub mod suite;
pub mod workflows;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::catalog::{by_name, subgroup_data, FiniteGroupTable, NAMES};
use crate::correspondence::{quotient_module_coalgebra, CoidealSubalgebra, QuotientModuleCoalgebra};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::Field;
use crate::rep::Side;

pub use report::{InputRef, Report, Section};
pub use spec::{Kind, SpecFile};

#[derive(Debug, Parser)]
#[command(name = "qsg", version, about = "Exact checks for coideal subalgebras, quotient coalgebras and their comodules")]
pub struct Cli {
    /// Write the JSON report to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom suite for a spec file.
    Check {
        spec: PathBuf,
        /// Ambient Hopf algebra, needed for subspace and quotient specs.
        #[arg(long)]
        hopf: Option<PathBuf>,
    },
    /// Build a catalog object, check it and optionally write its spec.
    Catalog {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
        /// For `subgroup`: write the coideal subalgebra spec here.
        #[arg(long)]
        emit_subalgebra: Option<PathBuf>,
        /// For `subgroup`: write the quotient spec here.
        #[arg(long)]
        emit_quotient: Option<PathBuf>,
    },
    /// A ↦ H_A ↦ coinvariants, with classification.
    Correspond {
        spec: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
        /// Write the quotient `H_A` as a quotient spec.
        #[arg(long)]
        emit_quotient: Option<PathBuf>,
    },
    /// Unit and counit of the relative Hopf module equivalence.
    Mw {
        spec: PathBuf,
        #[arg(long)]
        subalgebra: PathBuf,
        /// Comma-separated subset of H, A, HA, simples.
        #[arg(long, default_value = "H,A,HA,simples")]
        objects: String,
    },
    /// The pipeline from a quotient module coalgebra to its coinvariants.
    Theorem2 {
        spec: PathBuf,
        #[arg(long)]
        quotient: PathBuf,
    },
    /// The isomorphisms γ and γ̃ with seeded random checks.
    Gamma {
        spec: PathBuf,
        #[arg(long)]
        quotient: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Morita–Takeuchi data for a coalgebra or Hopf algebra.
    Morita {
        spec: PathBuf,
        /// A right comodule whose coend pre-equivalence is verified.
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// The full acceptance run.
    Suite {
        #[arg(value_parser = ["all"])]
        which: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return Outcome {
                exit_code: code,
                report: None,
                stdout: if code == 0 { text.clone() } else { String::new() },
                stderr: if code == 0 { String::new() } else { text },
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let name = command_name(&cli.command);
    let mut report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) if e.is_input_error() => {
            return Outcome {
                exit_code: 2,
                report: None,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            };
        }
        Err(e) => {
            let mut r = Report::new(name);
            r.sections.push(Section::from_error(name, &e));
            r
        }
    };
    report.finish();
    report.runtime = start.elapsed();
    let mut stderr = String::new();
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return Outcome {
                exit_code: 2,
                report: Some(report),
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    if !report.passed() {
        stderr.push_str("one or more checks failed\n");
    }
    Outcome {
        exit_code: if report.passed() { 0 } else { 1 },
        stdout: report.summary(),
        stderr,
        report: Some(report),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Catalog { .. } => "catalog",
        Command::Correspond { .. } => "correspond",
        Command::Mw { .. } => "mw",
        Command::Theorem2 { .. } => "theorem2",
        Command::Gamma { .. } => "gamma",
        Command::Morita { .. } => "morita",
        Command::Suite { .. } => "suite",
    }
}

pub fn load_spec(path: &Path) -> Result<SpecFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    SpecFile::parse(&text)
}

fn write_spec(path: &Path, s: &SpecFile) -> Result<()> {
    std::fs::write(path, s.serialize()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_hopf(path: &Path, r: &mut Report) -> Result<HopfAlgebra> {
    let s = load_spec(path)?;
    r.input("hopf", s.kind.name(), s.content_hash());
    s.to_hopf()
}

fn load_subalgebra(h: &HopfAlgebra, path: &Path, r: &mut Report) -> Result<CoidealSubalgebra> {
    let s = load_spec(path)?;
    r.input("subalgebra", s.kind.name(), s.content_hash());
    CoidealSubalgebra::new(h, &s.to_subspace(h)?)
}

fn load_quotient(h: &HopfAlgebra, path: &Path, r: &mut Report) -> Result<QuotientModuleCoalgebra> {
    let s = load_spec(path)?;
    r.input("quotient", s.kind.name(), s.content_hash());
    s.to_quotient(h)
}

fn execute(c: &Command) -> Result<Report> {
    let mut r = Report::new(command_name(c));
    match c {
        Command::Check { spec, hopf } => {
            let s = load_spec(spec)?;
            r.input("spec", s.kind.name(), s.content_hash());
            let ambient = match hopf {
                Some(p) => Some(load_hopf(p, &mut r)?),
                None => None,
            };
            let need = |kind: Kind| {
                ambient
                    .clone()
                    .ok_or_else(|| Error::Input(format!("checking a {} spec needs --hopf", kind.name())))
            };
            let section = match s.kind {
                Kind::Hopf => workflows::axioms("spec", &s.to_hopf()?),
                Kind::Coalgebra => workflows::coalgebra_axioms("spec", &s.to_coalgebra()?),
                Kind::Comodule => {
                    let m = s.to_comodule()?;
                    let mut sec = Section::new("axioms comodule");
                    sec.absorb("coalgebra ", m.coalgebra().check());
                    sec.absorb("", m.check());
                    sec.value("dim", m.dim());
                    sec.value("side", m.side().to_string());
                    sec
                }
                Kind::Pairing => {
                    let p = s.to_pairing()?;
                    let mut sec = Section::new("axioms pairing");
                    sec.absorb("U ", p.u().check_axioms());
                    sec.absorb("H ", p.h().check_axioms());
                    sec.absorb("", p.check());
                    sec
                }
                Kind::Subspace => {
                    let h = need(Kind::Subspace)?;
                    let sub = s.to_subspace(&h)?;
                    let mut sec = Section::new("coideal subalgebra");
                    sec.absorb("", crate::correspondence::coideal_subalgebra_report(&h, &sub, Side::Right));
                    sec.value("dim", sub.dim());
                    sec
                }
                Kind::Quotient => {
                    let h = need(Kind::Quotient)?;
                    let q = s.to_quotient(&h)?;
                    let mut sec = Section::new("quotient module coalgebra");
                    sec.absorb("", q.check());
                    sec.value("dim", q.dim());
                    sec
                }
            };
            r.sections.push(section);
        }
        Command::Catalog {
            name,
            params,
            emit,
            emit_subalgebra,
            emit_quotient,
        } => {
            if name == "subgroup" {
                let (a, q) = catalog_subgroup(params)?;
                let h = a.hopf().clone();
                r.sections.push(workflows::axioms(&format!("subgroup {}", params.join(" ")), &h));
                r.sections.push(workflows::correspond("subgroup", &a)?);
                if let Some(p) = emit {
                    write_spec(p, &SpecFile::from_hopf(&h))?;
                }
                if let Some(p) = emit_subalgebra {
                    write_spec(p, &SpecFile::from_subspace(&h, a.space()))?;
                }
                if let Some(p) = emit_quotient {
                    write_spec(p, &SpecFile::from_quotient(&q))?;
                }
            } else {
                let nums = params
                    .iter()
                    .map(|p| p.parse::<u64>().map_err(|_| Error::Input(format!("parameter `{p}` is not a number"))))
                    .collect::<Result<Vec<_>>>()?;
                let h = by_name(name, &nums).map_err(|e| match e {
                    Error::Violation(m) if m.starts_with("unknown") || m.contains("needs parameters") => Error::Input(
                        format!("{m}; known objects: {}, subgroup <C2|C3|S3> <members…>", NAMES.join(", ")),
                    ),
                    other => other,
                })?;
                r.input("catalog", "hopf", workflows::hopf_hash(&h));
                r.sections.push(workflows::axioms(name, &h));
                if let Some(p) = emit {
                    write_spec(p, &SpecFile::from_hopf(&h))?;
                }
            }
        }
        Command::Correspond {
            spec,
            subalgebra,
            emit_quotient,
        } => {
            let h = load_hopf(spec, &mut r)?;
            let a = load_subalgebra(&h, subalgebra, &mut r)?;
            r.sections.push(workflows::correspond("A", &a)?);
            if let Some(p) = emit_quotient {
                write_spec(p, &SpecFile::from_quotient(&quotient_module_coalgebra(&a)?))?;
            }
        }
        Command::Mw {
            spec,
            subalgebra,
            objects,
        } => {
            let h = load_hopf(spec, &mut r)?;
            let a = load_subalgebra(&h, subalgebra, &mut r)?;
            let objs: Vec<&str> = objects.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if let Some(bad) = objs.iter().find(|o| !workflows::MW_OBJECTS.contains(o)) {
                return Err(Error::Input(format!(
                    "unknown test object `{bad}`; choose from {}",
                    workflows::MW_OBJECTS.join(", ")
                )));
            }
            r.sections.push(workflows::mw("A", &a, &objs)?);
        }
        Command::Theorem2 { spec, quotient } => {
            let h = load_hopf(spec, &mut r)?;
            let q = load_quotient(&h, quotient, &mut r)?;
            r.sections.push(workflows::theorem2("B", &q)?);
        }
        Command::Gamma {
            spec,
            quotient,
            seed,
            samples,
        } => {
            let h = load_hopf(spec, &mut r)?;
            let q = load_quotient(&h, quotient, &mut r)?;
            r.seed = Some(*seed);
            r.sections.push(workflows::gamma("B", &q, *seed, *samples)?);
        }
        Command::Morita { spec, data } => {
            let s = load_spec(spec)?;
            r.input("coalgebra", s.kind.name(), s.content_hash());
            let c = match s.kind {
                Kind::Hopf => s.to_hopf()?.coalgebra().clone(),
                Kind::Coalgebra => s.to_coalgebra()?,
                other => return Err(Error::Input(format!("morita needs a hopf or coalgebra spec, found {}", other.name()))),
            };
            r.sections.push(workflows::morita_identity("D", &c)?);
            if let Some(p) = data {
                let ms = load_spec(p)?;
                r.input("data", ms.kind.name(), ms.content_hash());
                let m = ms.to_comodule()?;
                if m.coalgebra() != &c {
                    return Err(Error::Input("the data comodule is over a different coalgebra".into()));
                }
                if m.side() != Side::Right {
                    return Err(Error::Input("the data comodule must be a right comodule".into()));
                }
                r.sections.push(workflows::morita_coend("M", &m)?);
            }
        }
        Command::Suite { seed, .. } => {
            r.seed = Some(*seed);
            let (sections, assumed) = suite::run_all(*seed);
            r.sections = sections;
            for a in assumed {
                r.assume(a);
            }
        }
    }
    Ok(r)
}

fn catalog_subgroup(params: &[String]) -> Result<(CoidealSubalgebra, QuotientModuleCoalgebra)> {
    let Some((group, members)) = params.split_first() else {
        return Err(Error::Input("subgroup needs a group (C2, C3, S3) and member indices".into()));
    };
    let g = match group.as_str() {
        "C2" => FiniteGroupTable::cyclic(2),
        "C3" => FiniteGroupTable::cyclic(3),
        "S3" => FiniteGroupTable::symmetric3(),
        other => return Err(Error::Input(format!("unknown group `{other}`"))),
    };
    let members = members
        .iter()
        .map(|m| {
            m.parse::<usize>()
                .ok()
                .filter(|&i| i < g.order())
                .ok_or_else(|| Error::Input(format!("`{m}` is not an element index of {group}")))
        })
        .collect::<Result<Vec<_>>>()?;
    subgroup_data(Field::Rational, &g, &members).map_err(|e| match e {
        Error::Violation(m) => Error::Input(m),
        other => other,
    })
}
