//! Writes catalog objects as spec files, reads them back, and runs the
//! command-line front end on them.

use qsg::catalog::{by_name, subgroup_data, FiniteGroupTable};
use qsg::cli::{run, SpecFile};
use qsg::linalg::Field;

fn main() -> qsg::Result<()> {
    let dir = std::env::temp_dir().join("qsg-catalog-emit");
    std::fs::create_dir_all(&dir).map_err(|e| qsg::Error::Io(e.to_string()))?;

    let h = by_name("taft", &[3, 7, 2])?;
    let spec = SpecFile::from_hopf(&h);
    let back = SpecFile::parse(&spec.serialize())?;
    println!("taft(3, F7): {} maps, roundtrip {}, hash {}", spec.maps.len(), back == spec, &spec.content_hash()[..16]);

    let (a, _) = subgroup_data(Field::Rational, &FiniteGroupTable::symmetric3(), &[0, 1])?;
    let hopf = dir.join("s3.spec");
    let sub = dir.join("c2.sub");
    std::fs::write(&hopf, SpecFile::from_hopf(a.hopf()).serialize()).unwrap();
    std::fs::write(&sub, SpecFile::from_subspace(a.hopf(), a.space()).serialize()).unwrap();

    let out = run(["qsg", "correspond", hopf.to_str().unwrap(), "--subalgebra", sub.to_str().unwrap()]);
    print!("{}", out.stdout);
    println!("exit code {}", out.exit_code);
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
