//! Surjectivity from coflatness, γ and γ̃, and the staged pipeline back
//! from a quotient to its coideal subalgebra.

use qsg::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
use qsg::cert::format_vector;
use qsg::correspondence::{quotient_module_coalgebra, CoidealSubalgebra};
use qsg::linalg::Field;
use qsg::monadics::{gamma_isomorphism, surjectivity_from_coflatness, theorem2_pipeline};
use qsg::rep::{Comodule, Side};

fn main() -> qsg::Result<()> {
    let h = sweedler4();
    let q = quotient_module_coalgebra(&CoidealSubalgebra::from_labels(&h, &["1", "g"])?)?;
    let s = surjectivity_from_coflatness(&q)?;
    println!("rank π = {} = dim B = {}: {}", s.rank, s.dim_b, s.holds());

    let x = Comodule::regular(Side::Right, h.coalgebra());
    for (name, m) in [
        ("k", Comodule::trivial(Side::Right, q.b(), &q.base_point(), 1)),
        ("B", Comodule::regular(Side::Right, q.b())),
    ] {
        let g = gamma_isomorphism(&x, &m, &q, 2024, 100)?;
        println!("M = {name}: dim {}, γ̃γ = id and γγ̃ = id with {} samples: {}", g.dim, g.random_checks, g.holds());
    }

    let (_, q) = subgroup_data(Field::Rational, &FiniteGroupTable::symmetric3(), &[0, 1])?;
    for (label, q) in [("H4", quotient_module_coalgebra(&CoidealSubalgebra::from_labels(&h, &["1", "g"])?)?), ("k^S3", q)] {
        let out = theorem2_pipeline(&q)?;
        let stages: Vec<&str> = out.stages.iter().map(|(n, _)| n.as_str()).collect();
        let a = out.subalgebra.as_ref().unwrap();
        let basis: Vec<String> = a.space().basis().iter().map(|v| format_vector(v, a.hopf().labels())).collect();
        println!("{label}: {} -> [{}], succeeded {}", stages.join(" > "), basis.join(", "), out.succeeded());
    }
    Ok(())
}
