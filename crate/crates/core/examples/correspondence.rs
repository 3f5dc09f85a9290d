//! A ↦ H_A ↦ coinvariants for Sweedler's algebra and the subgroups of S₃.

use qsg::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
use qsg::cert::format_vector;
use qsg::correspondence::{
    classify_quotient, classify_subalgebra, coinvariants, quotient_module_coalgebra, roundtrip_quotient,
    CoidealSubalgebra,
};
use qsg::linalg::Field;

fn main() -> qsg::Result<()> {
    let h = sweedler4();
    let a = CoidealSubalgebra::from_labels(&h, &["1", "g"])?;
    let q = quotient_module_coalgebra(&a)?;
    let back = coinvariants(&q)?;
    println!("H4: dim A = {}, dim H_A = {}, B labels {:?}", a.dim(), q.dim(), q.b().labels());
    println!("coinvariants = A: {}", back.space() == a.space());
    println!("A is {}, H_A is {}", classify_subalgebra(&a)?.0, classify_quotient(&q)?.0);

    let s3 = FiniteGroupTable::symmetric3();
    for (name, m) in [("1", vec![0]), ("C2", vec![0, 1]), ("C3", vec![0, 3, 4]), ("S3", (0..6).collect())] {
        let (a, q) = subgroup_data(Field::Rational, &s3, &m)?;
        let rt = roundtrip_quotient(name, &q)?;
        let basis: Vec<String> = a.space().basis().iter().map(|v| format_vector(v, a.hopf().labels())).collect();
        println!("k^S3 / {name}: exact {}  ({})  A = {}", rt.exact, rt.detail, basis.join(", "));
    }
    Ok(())
}
