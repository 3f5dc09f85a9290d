//! Runs the Hopf axiom suite over the catalog and shows a failing witness.

use qsg::catalog::{by_name, sweedler4};
use qsg::linalg::{Field, LinMap};

fn main() {
    for name in ["k", "kC2", "kS3", "k^S3", "sweedler4"] {
        let h = by_name(name, &[]).unwrap();
        let r = h.check_axioms();
        println!("{name:10} dim {:2}  {} checks, all hold: {}", h.dim(), r.len(), r.all_hold());
    }
    let taft = by_name("taft", &[3, 7, 2]).unwrap();
    println!("taft(3, F7) dim {}  all hold: {}", taft.dim(), taft.check_axioms().all_hold());

    // double the g⊗x term of Δx
    let h = sweedler4();
    let f = Field::Rational;
    let bump = LinMap::from_entries(f, 16, 4, [(4 + 2, 2, f.one())]).unwrap();
    let bad = qsg::hopf::HopfAlgebra::from_maps(
        h.labels().to_vec(),
        h.mult().clone(),
        h.unit().clone(),
        h.comult().add(&bump),
        h.counit().clone(),
        h.antipode().clone(),
    )
    .unwrap();
    for c in bad.check_axioms().checks.iter().filter(|c| !c.holds) {
        println!("broken: {} fails at {}", c.name, c.witness.as_deref().unwrap_or("?"));
    }
}
