//! Jacobson radicals, simple modules and socles.
//!
//! Simple modules are found as composition factors of the regular module.
//! Proper submodules are located with the Norton irreducibility test: for an
//! algebra element `θ` and an irreducible factor `p` of its minimal
//! polynomial, spinning a vector of `ker p(θ)` (and of `ker p(θ)ᵀ` in the
//! dual) either produces a proper submodule or, when `dim ker p(θ) = deg p`,
//! proves irreducibility.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, CoalgebraData};
use crate::linalg::poly::{irreducible_factors, minimal_polynomial};
use crate::linalg::{kernel_of, restrict, Field, LinMap, SVec, Subspace};

use super::module::{hom_between_families, spin};
use super::{Comodule, Module, Side};

const SEED: u64 = 0x6d65_6174;
const MAX_ATTEMPTS: usize = 400;

/// The radical of an algebra together with its simple modules on one side.
#[derive(Clone, Debug)]
pub struct RadicalData {
    pub radical: Subspace,
    pub simples: Vec<Module>,
}

fn trace(m: &LinMap) -> crate::linalg::Scalar {
    let f = m.field();
    (0..m.rows().min(m.cols())).fold(f.zero(), |acc, i| &acc + &m.entry(i, i))
}

/// `J(A)` as the kernel of the trace form `(x, y) ↦ tr(L_{xy})`.
pub fn jacobson_radical(a: &AlgebraData) -> Result<Subspace> {
    let f = a.field();
    let d = a.dim();
    let p = f.characteristic();
    if p != 0 && p as usize <= d {
        return Err(Error::RadicalUnavailable(format!(
            "characteristic {p} does not exceed the algebra dimension {d}"
        )));
    }
    let traces: Vec<_> = (0..d).map(|k| trace(&a.left_mult(&SVec::unit(f, k)))).collect();
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = SVec::new();
        for j in 0..d {
            let prod = a.product(&SVec::unit(f, i), &SVec::unit(f, j));
            let t = prod.dot(&SVec::from_dense(&traces), f);
            row.set(j, t);
        }
        rows.push(row);
    }
    Ok(kernel_of(&LinMap::from_rows(f, d, &rows)))
}

pub fn radical_and_simples(a: &AlgebraData, side: Side) -> Result<RadicalData> {
    let radical = jacobson_radical(a)?;
    let simples = simple_modules(a, side)?;
    Ok(RadicalData { radical, simples })
}

/// Pairwise non-isomorphic simple modules of `A` on the given side.
pub fn simple_modules(a: &AlgebraData, side: Side) -> Result<Vec<Module>> {
    let regular = Module::regular(side, a);
    let factors = composition_factors(a.field(), regular.family(), a.dim())?;
    let mut distinct: Vec<Vec<LinMap>> = Vec::new();
    for fam in factors {
        let n = fam[0].rows();
        let seen = distinct.iter().any(|g| {
            g[0].rows() == n && !hom_between_families(a.field(), &fam, g, n, n).is_zero()
        });
        if !seen {
            distinct.push(fam);
        }
    }
    distinct.sort_by_key(|g| g[0].rows());
    distinct
        .into_iter()
        .map(|fam| Module::from_family(side, a.clone(), &fam))
        .collect()
}

/// Composition factors of a module given by action matrices.
pub fn composition_factors(field: Field, family: Vec<LinMap>, dim: usize) -> Result<Vec<Vec<LinMap>>> {
    let mut out = Vec::new();
    let mut current = family;
    let mut n = dim;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    while n > 0 {
        let simple = simple_submodule(field, &current, n, &mut rng)?;
        let fam: Vec<LinMap> = current
            .iter()
            .map(|m| restrict(m, &simple, &simple))
            .collect::<Result<_>>()?;
        out.push(fam);
        let q = simple.quotient_map();
        let sec = crate::hopf::section_of_quotient(&simple);
        current = current.iter().map(|m| q.compose(m).compose(&sec)).collect();
        n = q.rows();
    }
    Ok(out)
}

/// A simple submodule of the module `k^n` acted on by `family`.
fn simple_submodule(field: Field, family: &[LinMap], n: usize, rng: &mut ChaCha8Rng) -> Result<Subspace> {
    let mut embedding = LinMap::identity(field, n);
    let mut fam = family.to_vec();
    let mut dim = n;
    while let Some(s) = proper_submodule(field, &fam, dim, rng)? {
        fam = fam
            .iter()
            .map(|m| restrict(m, &s, &s))
            .collect::<Result<_>>()?;
        embedding = embedding.compose(&s.inclusion());
        dim = s.dim();
    }
    Ok(Subspace::span(field, n, embedding.columns().to_vec()))
}

fn random_element(field: Field, family: &[LinMap], n: usize, rng: &mut ChaCha8Rng) -> LinMap {
    let mut theta = LinMap::zero(field, n, n);
    for m in family {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            theta = theta.add(&m.scale(&field.from_i64(c)));
        }
    }
    // products reach elements outside the span of the generators' images
    if rng.gen_bool(0.5) && !family.is_empty() {
        let k = rng.gen_range(0..family.len());
        theta = theta.add(&theta.compose(&family[k]));
    }
    theta
}

/// A proper nonzero submodule, or `None` when the module is irreducible.
fn proper_submodule(field: Field, family: &[LinMap], n: usize, rng: &mut ChaCha8Rng) -> Result<Option<Subspace>> {
    if n <= 1 {
        return Ok(None);
    }
    let dual: Vec<LinMap> = family.iter().map(LinMap::transpose).collect();
    for attempt in 0..MAX_ATTEMPTS {
        let theta = if attempt < family.len() {
            family[attempt].clone()
        } else {
            random_element(field, family, n, rng)
        };
        for p in irreducible_factors(&minimal_polynomial(&theta)) {
            let pt = p.eval_matrix(&theta);
            let kernel = kernel_of(&pt);
            for v in kernel.basis().iter().take(4) {
                let s = spin(field, n, family, vec![v.clone()]);
                if s.dim() < n {
                    return Ok(Some(s));
                }
            }
            let dual_kernel = kernel_of(&pt.transpose());
            for w in dual_kernel.basis().iter().take(4) {
                let s = spin(field, n, &dual, vec![w.clone()]);
                if s.dim() < n {
                    let annihilator = kernel_of(&LinMap::from_rows(field, n, s.basis()));
                    return Ok(Some(annihilator));
                }
            }
            if Some(kernel.dim()) == p.degree() {
                return Ok(None);
            }
        }
    }
    Err(Error::Unsupported(
        "irreducibility test did not reach a decision".into(),
    ))
}

/// The socle: the sum of the images of all maps from simple modules.
pub fn socle(v: &Module) -> Result<Subspace> {
    let simples = simple_modules(v.algebra(), v.side())?;
    let f = v.field();
    let mut socle = Subspace::zero(f, v.dim());
    for s in &simples {
        for h in s.hom_basis(v)? {
            socle = socle.sum(&Subspace::span(f, v.dim(), h.columns().to_vec()));
        }
    }
    Ok(socle)
}

/// Whether `V` is a direct sum of simple modules (its socle is everything).
pub fn is_semisimple_module(v: &Module) -> Result<bool> {
    Ok(socle(v)?.is_full())
}

/// Whether the dual algebra `C*` has zero radical.
pub fn is_cosemisimple(c: &CoalgebraData) -> Result<bool> {
    let dual = AlgebraData::new(
        c.labels().to_vec(),
        c.comult().transpose(),
        c.counit().transpose(),
    )?;
    Ok(jacobson_radical(&dual)?.is_zero())
}

/// Grouplike elements, read off the one-dimensional simple modules of `C*`.
pub fn grouplikes(c: &CoalgebraData) -> Result<Vec<SVec>> {
    let dual = AlgebraData::new(
        c.labels().to_vec(),
        c.comult().transpose(),
        c.counit().transpose(),
    )?;
    let f = c.field();
    let mut out: Vec<SVec> = simple_modules(&dual, Side::Left)?
        .iter()
        .filter(|m| m.dim() == 1)
        .map(|m| SVec::from_pairs((0..c.dim()).map(|i| (i, m.act_by(i).entry(0, 0)))))
        .collect();
    out.retain(|g| c.coproduct(g) == g.tensor(g, c.dim()) && c.epsilon(g) == f.one());
    out.sort_by_key(|g| g.iter().map(|(i, x)| (*i, x.sort_key())).collect::<Vec<_>>());
    Ok(out)
}

/// Pairwise non-isomorphic simple right `C`-comodules, as simple left `C*`-modules.
pub fn simple_comodules(c: &CoalgebraData) -> Result<Vec<Comodule>> {
    let dual = AlgebraData::new(
        c.labels().to_vec(),
        c.comult().transpose(),
        c.counit().transpose(),
    )?;
    let dc = c.dim();
    simple_modules(&dual, Side::Left)?
        .iter()
        .enumerate()
        .map(|(s, m)| {
            let n = m.dim();
            let mut entries = Vec::new();
            for e in 0..dc {
                for (row, col, x) in m.act_by(e).entries() {
                    entries.push((row * dc + e, col, x.clone()));
                }
            }
            let coaction = LinMap::from_entries(c.field(), n * dc, n, entries)?;
            let labels = (0..n).map(|i| format!("s{s}_{i}")).collect();
            Comodule::new(Side::Right, c.clone(), coaction, labels)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, taft, FiniteGroupTable};

    fn dual_numbers() -> AlgebraData {
        let f = Field::Rational;
        // 1·1 = 1, 1·t = t·1 = t, t·t = 0
        let mult = LinMap::from_entries(f, 2, 4, [(0, 0, f.one()), (1, 1, f.one()), (1, 2, f.one())]).unwrap();
        let unit = LinMap::from_columns(f, 2, vec![SVec::unit(f, 0)]);
        AlgebraData::new(vec!["1".into(), "t".into()], mult, unit).unwrap()
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = dual_numbers();
        let j = jacobson_radical(&a).unwrap();
        assert_eq!(j, Subspace::span(Field::Rational, 2, vec![SVec::unit(Field::Rational, 1)]));
        let s = simple_modules(&a, Side::Left).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim(), 1);
        assert!(!is_semisimple_module(&Module::regular(Side::Left, &a)).unwrap());
    }

    #[test]
    fn radical_of_sweedler_is_spanned_by_x_and_gx() {
        let h = sweedler4();
        let j = jacobson_radical(h.algebra()).unwrap();
        assert_eq!(j, Subspace::span(h.field(), 4, vec![h.element("x"), h.element("gx")]));
    }

    #[test]
    fn radical_needs_large_characteristic() {
        let f7 = Field::prime(7).unwrap();
        let t = taft(f7, 3, &f7.from_i64(2)).unwrap();
        assert!(matches!(jacobson_radical(t.algebra()), Err(Error::RadicalUnavailable(_))));
    }

    #[test]
    fn simples_of_s3() {
        let ks3 = group_algebra(Field::Rational, &FiniteGroupTable::symmetric3());
        let mut dims: Vec<usize> = simple_modules(ks3.algebra(), Side::Left).unwrap().iter().map(Module::dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(jacobson_radical(ks3.algebra()).unwrap().is_zero());
        assert!(is_semisimple_module(&Module::regular(Side::Left, ks3.algebra())).unwrap());
    }

    #[test]
    fn cosemisimplicity_and_grouplikes() {
        let s3 = FiniteGroupTable::symmetric3();
        assert!(is_cosemisimple(function_algebra(Field::Rational, &s3).coalgebra()).unwrap());
        assert!(!is_cosemisimple(sweedler4().coalgebra()).unwrap());
        let h = sweedler4();
        let g = grouplikes(h.coalgebra()).unwrap();
        let span = Subspace::span(h.field(), 4, g.clone());
        assert_eq!(g.len(), 2);
        assert_eq!(span, Subspace::span(h.field(), 4, vec![h.element("1"), h.element("g")]));
        assert_eq!(grouplikes(group_algebra(Field::Rational, &s3).coalgebra()).unwrap().len(), 6);
    }

    #[test]
    fn simple_comodules_are_simple() {
        let s3 = FiniteGroupTable::symmetric3();
        let c = function_algebra(Field::Rational, &s3).coalgebra().clone();
        let simples = simple_comodules(&c).unwrap();
        let mut dims: Vec<usize> = simples.iter().map(Comodule::dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
        for s in &simples {
            assert!(s.is_valid());
            assert_eq!(s.hom_colinear(s).unwrap().dim(), 1);
        }
        assert_eq!(simple_comodules(sweedler4().coalgebra()).unwrap().len(), 2);
    }
}
