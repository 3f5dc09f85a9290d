//! The monad of −⊗A ⊣ forget, its algebra T(I), the internal hom and the
//! comonad coalgebra of ĤOM(A, −⊗H).

use qsg::catalog::sweedler4;
use qsg::correspondence::CoidealSubalgebra;
use qsg::monadics::{
    adjunction_unit_counit_check, comonad_coalgebra, compare_talgebras_to_modules, free_talgebras, internal_hom,
    monad_from_adjunction, unit_object_algebra, HomComonad, InductionAdjunction, ModuleInCategory,
};
use qsg::rep::{Comodule, RelHopfModule, Side};

fn main() -> qsg::Result<()> {
    let h = sweedler4();
    let a = CoidealSubalgebra::from_labels(&h, &["1", "g"])?;
    let adj = InductionAdjunction::new(&a);
    let samples = vec![("H".to_string(), Comodule::regular(Side::Right, h.coalgebra()))];
    let monad = monad_from_adjunction(&adj, &samples)?;
    let alg = unit_object_algebra(&adj, &monad)?;
    println!("T(I) has dim {}; multiplication is A's: {}", alg.algebra.dim(), alg.algebra.mult() == a.algebra().mult());

    let modules = vec![ModuleInCategory::from_relhopf("H", &RelHopfModule::hopf_regular(&a))];
    let cmp = compare_talgebras_to_modules(&adj, &alg, &free_talgebras(&monad), &modules)?;
    for e in &cmp.entries {
        println!("  {:8} {:22} round trip {}", e.name, e.direction, e.round_trip);
    }
    println!("  assumed: {:?}", cmp.assumed);

    let ih = internal_hom(&a, &Comodule::regular(Side::Right, h.coalgebra()))?;
    println!("ĤOM(A, H) has dim {}", ih.dim());
    let m = RelHopfModule::hopf_regular(&a);
    let c = adjunction_unit_counit_check(&m, &Comodule::trivial_hopf(Side::Right, &h, 1))?;
    println!("Hom(H, k) = {} = Hom_A(H, ĤOM(A, k)) = {}: {}", c.hom_comodules, c.hom_relative, c.holds());

    let g = HomComonad::new(&a);
    let co = comonad_coalgebra(&g, &[1, 2])?;
    println!("comonad coalgebra dim {}, checks hold: {}", co.coalgebra.dim(), co.certificates.all_hold());
    Ok(())
}
