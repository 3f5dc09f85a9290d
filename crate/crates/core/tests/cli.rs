use std::path::PathBuf;
use std::process::Command;

use qsg::catalog::by_name;
use qsg::cli::SpecFile;
use qsg::rep::{Comodule, Side};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("qsg-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn qsg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qsg")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn emitted_catalog_specs_check_clean() {
    let dir = Scratch::new("emit");
    for name in ["kC2", "k^S3", "sweedler4"] {
        let spec = dir.path(&format!("{name}.spec"));
        let (code, _, err) = qsg(&["catalog", name, "--emit", &spec]);
        assert_eq!(code, 0, "{err}");
        let (code, out, err) = qsg(&["check", &spec]);
        assert_eq!(code, 0, "{out}{err}");
    }
}

#[test]
fn broken_coassociativity_fails_with_witness() {
    let dir = Scratch::new("broken");
    let spec = dir.path("h4.spec");
    assert_eq!(qsg(&["catalog", "sweedler4", "--emit", &spec]).0, 0);
    let text = std::fs::read_to_string(&spec).unwrap();
    let broken = text.replace("  x -> g x : 1\n", "  x -> g x : 3\n");
    assert_ne!(broken, text);
    std::fs::write(&spec, broken).unwrap();

    let report = dir.path("report.json");
    let (code, _, _) = qsg(&["check", &spec, "--report", &report]);
    assert_eq!(code, 1);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["verdict"], "fail");
    let coassoc = json["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["checks"].as_array().unwrap())
        .find(|c| c["name"].as_str().unwrap().contains("coassociativ"))
        .expect("coassociativity check present");
    assert_eq!(coassoc["holds"], false);
    assert_eq!(coassoc["witness"], "x");
}

#[test]
fn correspond_on_a_subgroup() {
    let dir = Scratch::new("correspond");
    let (h, a) = (dir.path("h.spec"), dir.path("a.spec"));
    let (code, _, err) = qsg(&["catalog", "subgroup", "S3", "0", "1", "--emit", &h, "--emit-subalgebra", &a]);
    assert_eq!(code, 0, "{err}");

    let out = qsg::cli::run(["qsg", "correspond", &h, "--subalgebra", &a]);
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let report = out.report.unwrap();
    let section = report.sections.iter().find(|s| s.values.contains_key("dim H_A")).unwrap();
    assert_eq!(section.values["dim H_A"], 2);
}

#[test]
fn malformed_input_exits_with_2() {
    let dir = Scratch::new("input");
    let bad = dir.path("bad.spec");
    std::fs::write(&bad, "field Q\nkind hopf\nbasis H: 1 g\nmap mult : H H -> H\n  1 1 -> q : 1\n").unwrap();
    let (code, _, err) = qsg(&["check", &bad]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");

    assert_eq!(qsg(&["check", &dir.path("missing.spec")]).0, 2);
    assert_eq!(qsg(&["frobnicate"]).0, 2);
    assert_eq!(qsg(&["catalog", "nonesuch"]).0, 2);
    assert_eq!(qsg(&["catalog", "taft", "two"]).0, 2);
}

#[test]
fn morita_with_comodule_data() {
    let dir = Scratch::new("morita");
    let h = by_name("k^C2", &[]).unwrap();
    let (spec, data) = (dir.path("h.spec"), dir.path("m.spec"));
    std::fs::write(&spec, SpecFile::from_hopf(&h).serialize()).unwrap();
    let m = Comodule::regular(Side::Right, h.coalgebra());
    std::fs::write(&data, SpecFile::from_comodule(&m).serialize()).unwrap();

    let (code, out, err) = qsg(&["morita", &spec, "--data", &data]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("morita coend"), "{out}");
}

#[test]
fn help_and_version_exit_cleanly() {
    let (code, out, _) = qsg(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("correspond"));
    assert_eq!(qsg(&["--version"]).0, 0);
}
