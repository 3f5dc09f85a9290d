//! Radicals, simple modules and the semisimplicity implication for kS₃.

use qsg::catalog::{by_name, function_algebra, FiniteGroupTable};
use qsg::correspondence::c_semisimple_implication;
use qsg::hopf::Pairing;
use qsg::linalg::{Field, Subspace};
use qsg::rep::{is_cosemisimple, jacobson_radical, simple_modules, Module, Side};

fn main() -> qsg::Result<()> {
    for name in ["kC2", "kS3", "sweedler4"] {
        let h = by_name(name, &[])?;
        let rad = jacobson_radical(h.algebra())?;
        let dims: Vec<usize> = simple_modules(h.algebra(), Side::Left)?.iter().map(Module::dim).collect();
        println!(
            "{name:10} radical dim {}, simples {:?}, cosemisimple {}",
            rad.dim(),
            dims,
            is_cosemisimple(h.coalgebra())?
        );
    }

    let p = Pairing::canonical(&function_algebra(Field::Rational, &FiniteGroupTable::symmetric3()));
    let k = Subspace::span(Field::Rational, 6, vec![p.u().basis(0), p.u().basis(1)]);
    let r = c_semisimple_implication(&p, &k, &[Module::regular(Side::Left, p.u().algebra())])?;
    println!(
        "kS3 ⊇ kC2: hypothesis {}, cosemisimple {}, faithfully flat {}/{}",
        r.hypothesis, r.cosemisimple, r.flat_left, r.flat_right
    );
    Ok(())
}
