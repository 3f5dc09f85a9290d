//! Unit and counit of the equivalence between relative Hopf modules and
//! comodules over H_A, on H, A, H_A and the simple comodules.

use qsg::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
use qsg::correspondence::{mw_equivalence_check, psi, quotient_module_coalgebra, CoidealSubalgebra, QuotientModuleCoalgebra};
use qsg::linalg::Field;
use qsg::rep::{simple_comodules, Comodule, RelHopfModule, Side};

fn run(name: &str, a: &CoidealSubalgebra, q: &QuotientModuleCoalgebra) -> qsg::Result<()> {
    let mut modules = vec![
        ("H".to_string(), RelHopfModule::hopf_regular(a)),
        ("A".to_string(), RelHopfModule::subalgebra_regular(a)),
    ];
    let mut comodules = vec![("H_A".to_string(), Comodule::regular(Side::Right, q.b()))];
    for (i, s) in simple_comodules(q.b())?.into_iter().enumerate() {
        modules.push((format!("Ψ(S{i})"), psi(a, q, &s)?.0));
        comodules.push((format!("S{i}"), s));
    }
    let r = mw_equivalence_check(a, q, &modules, &comodules)?;
    for c in r.units.iter().chain(&r.counits) {
        println!("{name}: {:6} dim {} rank {} bijective {}", c.name, c.dim, c.rank, c.bijective);
    }
    Ok(())
}

fn main() -> qsg::Result<()> {
    let a = CoidealSubalgebra::from_labels(&sweedler4(), &["1", "g"])?;
    run("H4", &a, &quotient_module_coalgebra(&a)?)?;
    let (a, q) = subgroup_data(Field::Rational, &FiniteGroupTable::symmetric3(), &[0, 1])?;
    run("k^S3", &a, &q)
}
