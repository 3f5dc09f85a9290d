//! Morita–Takeuchi data: identity pre-equivalences, Coend(M) and cohom.

use qsg::catalog::{by_name, function_algebra, sweedler4, FiniteGroupTable};
use qsg::linalg::Field;
use qsg::morita::{
    coend, coend_pre_equivalence, cohom, cohom_adjunction_check, regular_coend_isomorphism, verify_pre_equivalence,
    PreEquivalenceData,
};
use qsg::rep::{Bicomodule, Comodule, Side};

fn main() -> qsg::Result<()> {
    for name in ["k", "kC2", "kS3", "k^S3", "sweedler4"] {
        let h = by_name(name, &[])?;
        let objects = vec![("D".to_string(), Comodule::regular(Side::Right, h.coalgebra()))];
        let r = verify_pre_equivalence(&PreEquivalenceData::identity(h.coalgebra()), &objects, &objects)?;
        let (_, theta) = regular_coend_isomorphism(h.coalgebra())?;
        println!("{name:10} identity data: {}  Coend(D) ≅ D: {}", r.equivalence(), theta.is_invertible());
    }

    let d = function_algebra(Field::Rational, &FiniteGroupTable::cyclic(2));
    let m = Comodule::regular(Side::Right, d.coalgebra());
    let c = coend(&m)?;
    let e = coend_pre_equivalence(&m)?;
    let gamma = vec![("Γ".to_string(), Comodule::regular(Side::Right, &e.gamma))];
    let r = verify_pre_equivalence(&e, &gamma, &[("M".to_string(), m.clone())])?;
    println!("Coend(M) dim {}, pre-equivalence holds: {}", c.coalgebra.dim(), r.equivalence());

    let h = sweedler4();
    let x = Bicomodule::regular(h.coalgebra());
    let y = Comodule::trivial_hopf(Side::Right, &h, 1);
    println!(
        "cohom(H, k) dim {}, adjunction holds: {}",
        cohom(&x, &y)?.comodule.dim(),
        cohom_adjunction_check(&x, &y, &Comodule::regular(Side::Right, h.coalgebra()))?.all_hold()
    );
    Ok(())
}
