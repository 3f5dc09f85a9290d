use crate::error::{Error, Result};
use crate::hopf::{section_of_quotient, AlgebraData, HopfAlgebra};
use crate::linalg::{find_section, solve, LinMap, Subspace};
use crate::rep::{jacobson_radical, simple_modules, spin, tensor_over, Module, Side};

use super::{CoidealSubalgebra, QuotientModuleCoalgebra};

/// Outcome of the projectivity-plus-nonvanishing test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessEvidence {
    pub side: Side,
    pub faithfully_flat: bool,
    pub projective: bool,
    /// Number of generators of the free cover used for the splitting.
    pub generators: usize,
    /// Splitting `H → K^n` of the free cover, when one exists.
    pub section: Option<LinMap>,
    /// `dim(H ⊗_K S)` (or `S ⊗_K H`) for each simple `S`.
    pub tensor_dims: Vec<usize>,
}

/// Whether an algebra `R` is faithfully flat over a subalgebra `K ⊆ R`
/// acting on the given side.
pub fn faithfully_flat_over(ambient: &AlgebraData, sub: &Subspace, side: Side) -> Result<FlatnessEvidence> {
    let labels = (0..sub.dim()).map(|i| format!("k{i}")).collect();
    let k = ambient.restrict_to(sub, labels)?;
    let m = Module::regular(side, ambient).restrict(&k, &sub.inclusion())?;
    module_flatness(&m)
}

/// Projectivity plus `M ⊗ S ≠ 0` on every simple, for a module `M`.
pub fn module_flatness(m: &Module) -> Result<FlatnessEvidence> {
    let side = m.side();
    let k = m.algebra();
    let f = m.field();
    let (d, dk) = (m.dim(), k.dim());
    let family = m.family();

    // greedy generating set
    let mut gens = Vec::new();
    let mut span = Subspace::zero(f, d);
    for i in 0..d {
        let e = crate::linalg::SVec::unit(f, i);
        if !span.contains(&e) {
            gens.push(e);
            span = spin(f, d, &family, gens.clone());
        }
    }
    let n = gens.len();

    // free cover K^n → M, (i, b) ↦ g_i acted on by b
    let mut cols = Vec::with_capacity(n * dk);
    for g in &gens {
        for fb in &family {
            cols.push(fb.apply(g));
        }
    }
    let cover = LinMap::from_columns(f, d, cols);
    let regular = Module::regular(side, k).family();
    let id_n = LinMap::identity(f, n);
    let constraints: Vec<LinMap> = (0..dk)
        .map(|b| solve::commutation_constraint(&family[b], &id_n.kron(&regular[b])))
        .collect();
    let section = find_section(&cover, &constraints)?;

    let simples = simple_modules(k, side.other())?;
    let mut tensor_dims = Vec::with_capacity(simples.len());
    for s in &simples {
        let (_, dim) = match side {
            Side::Right => tensor_over(m, s)?,
            Side::Left => tensor_over(s, m)?,
        };
        tensor_dims.push(dim);
    }
    let projective = section.is_some();
    Ok(FlatnessEvidence {
        side,
        faithfully_flat: projective && tensor_dims.iter().all(|&x| x > 0),
        projective,
        generators: n,
        section,
        tensor_dims,
    })
}

pub fn is_faithfully_flat(a: &CoidealSubalgebra, side: Side) -> Result<FlatnessEvidence> {
    faithfully_flat_over(a.hopf().algebra(), a.space(), side)
}

/// Faithful coflatness of `H` as a `B`-comodule on the given side, decided
/// through faithful flatness of `H*` over the image of `B*`.
pub fn is_faithfully_coflat(q: &QuotientModuleCoalgebra, side: Side) -> Result<FlatnessEvidence> {
    let dual: HopfAlgebra = q.hopf().dual();
    let image = Subspace::span(
        dual.field(),
        dual.dim(),
        q.pi().transpose().columns().to_vec(),
    );
    faithfully_flat_over(dual.algebra(), &image, side)
}

/// A candidate short exact sequence `0 → X →f Y →g Z → 0` of left modules.
#[derive(Clone, Debug)]
pub struct ShortSequence {
    pub name: String,
    pub x: Module,
    pub y: Module,
    pub z: Module,
    pub f: LinMap,
    pub g: LinMap,
}

fn exact_ranks(dx: usize, dy: usize, dz: usize, f: &LinMap, g: &LinMap) -> bool {
    let (rf, rg) = (f.rank(), g.rank());
    g.compose(f).is_zero() && rf == dx && rg == dz && rf + rg == dy
}

impl ShortSequence {
    pub fn is_exact(&self) -> bool {
        exact_ranks(self.x.dim(), self.y.dim(), self.z.dim(), &self.f, &self.g)
    }

    /// Applies `M ⊗_K −` and tests exactness of the result.
    pub fn tensored_exact(&self, m: &Module) -> Result<bool> {
        let field = m.field();
        let idm = LinMap::identity(field, m.dim());
        let quot = |x: &Module| -> Result<(LinMap, LinMap, usize)> {
            let (rel, dim) = tensor_over(m, x)?;
            Ok((rel.quotient_map(), section_of_quotient(&rel), dim))
        };
        let (_, sx, tx) = quot(&self.x)?;
        let (qy, sy, ty) = quot(&self.y)?;
        let (qz, _, tz) = quot(&self.z)?;
        let tf = qy.compose(&idm.kron(&self.f)).compose(&sx);
        let tg = qz.compose(&idm.kron(&self.g)).compose(&sy);
        Ok(exact_ranks(tx, ty, tz, &tf, &tg))
    }
}

/// Split, non-split and deliberately broken sequences of left `K`-modules
/// whose middle term has dimension at most `max_middle`.
pub fn sequence_family(k: &AlgebraData, max_middle: usize) -> Result<Vec<ShortSequence>> {
    let f = k.field();
    let regular = Module::regular(Side::Left, k);
    let mut objects: Vec<(String, Module)> = Vec::new();
    for (i, s) in simple_modules(k, Side::Left)?.into_iter().enumerate() {
        objects.push((format!("S{i}"), s));
    }
    objects.push(("K".into(), regular.clone()));
    let mut nonsplit = Vec::new();
    if let Ok(j) = jacobson_radical(k) {
        if !j.is_zero() && !j.is_full() {
            let jm = regular.submodule(&j)?;
            let top = regular.quotient(&j)?;
            objects.push(("J".into(), jm.clone()));
            objects.push(("K/J".into(), top.clone()));
            nonsplit.push(ShortSequence {
                name: "J → K → K/J".into(),
                x: jm,
                y: regular.clone(),
                z: top,
                f: j.inclusion(),
                g: j.quotient_map(),
            });
        }
    }
    let mut out = Vec::new();
    for (nx, x) in &objects {
        for (nz, z) in &objects {
            if x.dim() + z.dim() > max_middle {
                continue;
            }
            let y = x.direct_sum(z)?;
            let (a, b) = (x.dim(), z.dim());
            let inc = LinMap::from_columns(
                f,
                a + b,
                (0..a).map(|i| crate::linalg::SVec::unit(f, i)).collect(),
            );
            let proj = LinMap::from_columns(
                f,
                b,
                (0..a + b)
                    .map(|i| {
                        if i < a {
                            crate::linalg::SVec::new()
                        } else {
                            crate::linalg::SVec::unit(f, i - a)
                        }
                    })
                    .collect(),
            );
            out.push(ShortSequence {
                name: format!("{nx} → {nx}⊕{nz} → {nz}"),
                x: x.clone(),
                y: y.clone(),
                z: z.clone(),
                f: inc.clone(),
                g: proj.clone(),
            });
            out.push(ShortSequence {
                name: format!("{nx} → {nx}⊕{nz} →0 {nz}"),
                x: x.clone(),
                y: y.clone(),
                z: z.clone(),
                f: inc,
                g: LinMap::zero(f, b, a + b),
            });
            out.push(ShortSequence {
                name: format!("{nx} →0 {nx}⊕{nz} → {nz}"),
                x: x.clone(),
                y,
                z: z.clone(),
                f: LinMap::zero(f, a + b, a),
                g: proj,
            });
        }
    }
    for s in nonsplit {
        if s.y.dim() <= max_middle {
            let broken = ShortSequence {
                name: format!("{} with zero second map", s.name),
                g: LinMap::zero(f, s.z.dim(), s.y.dim()),
                ..s.clone()
            };
            out.push(s);
            out.push(broken);
        }
    }
    Ok(out)
}

/// Definitional check: does `M ⊗_K −` preserve and reflect exactness on the family?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub sequences: usize,
    pub exact: usize,
    pub preserves: bool,
    pub reflects: bool,
    pub counterexample: Option<String>,
}

impl OracleVerdict {
    pub fn faithfully_flat(&self) -> bool {
        self.preserves && self.reflects
    }
}

/// Runs the exactness oracle for a right module `M` over `K`.
pub fn flatness_oracle(m: &Module, max_middle: usize) -> Result<OracleVerdict> {
    if m.side() != Side::Right {
        return Err(Error::violation("the oracle tensors a right module with left modules"));
    }
    let seqs = sequence_family(m.algebra(), max_middle)?;
    let mut verdict = OracleVerdict {
        sequences: seqs.len(),
        exact: 0,
        preserves: true,
        reflects: true,
        counterexample: None,
    };
    for s in &seqs {
        let before = s.is_exact();
        let after = s.tensored_exact(m)?;
        if before {
            verdict.exact += 1;
        }
        if before && !after {
            verdict.preserves = false;
            verdict.counterexample.get_or_insert_with(|| format!("not preserved: {}", s.name));
        }
        if !before && after {
            verdict.reflects = false;
            verdict.counterexample.get_or_insert_with(|| format!("not reflected: {}", s.name));
        }
    }
    Ok(verdict)
}

/// The oracle for `R` over a subalgebra `K` acting on the given side; a left
/// action is handled as a right action of `K^op`.
pub fn flatness_oracle_over(ambient: &AlgebraData, sub: &Subspace, side: Side, max_middle: usize) -> Result<OracleVerdict> {
    let labels = (0..sub.dim()).map(|i| format!("k{i}")).collect();
    let k = ambient.restrict_to(sub, labels)?;
    let m = Module::regular(side, ambient).restrict(&k, &sub.inclusion())?;
    flatness_oracle(&m.as_right(), max_middle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sweedler4;
    use crate::linalg::{Field, SVec};

    /// Upper triangular 2×2 matrices, basis `e11, e12, e22`.
    fn upper_triangular() -> AlgebraData {
        let f = Field::Rational;
        let one = f.one();
        // e11·e11, e11·e12, e12·e22, e22·e22
        let entries = [(0, 0), (1, 1), (1, 5), (2, 8)].map(|(i, j)| (i, j, one.clone()));
        let mult = LinMap::from_entries(f, 3, 9, entries).unwrap();
        let unit = LinMap::from_columns(f, 3, vec![SVec::from_pairs([(0, one.clone()), (2, one)])]);
        AlgebraData::new(vec!["e11".into(), "e12".into(), "e22".into()], mult, unit).unwrap()
    }

    #[test]
    fn triangular_algebra_is_not_flat_over_its_dual_numbers() {
        let r = upper_triangular();
        assert!(r.check().all_hold());
        let f = r.field();
        let k = Subspace::span(f, 3, vec![r.one(), SVec::unit(f, 1)]);
        let ev = faithfully_flat_over(&r, &k, Side::Right).unwrap();
        assert!(!ev.projective);
        assert!(!ev.faithfully_flat);
        let v = flatness_oracle_over(&r, &k, Side::Right, 6).unwrap();
        assert!(!v.faithfully_flat());
        assert!(v.counterexample.unwrap().starts_with("not preserved"));
    }

    #[test]
    fn sweedler_is_faithfully_flat_over_grouplikes() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        for side in [Side::Left, Side::Right] {
            let ev = is_faithfully_flat(&a, side).unwrap();
            assert!(ev.faithfully_flat);
            assert!(ev.section.is_some());
            let v = flatness_oracle_over(h.algebra(), a.space(), side, 6).unwrap();
            assert!(v.faithfully_flat(), "{:?}", v.counterexample);
        }
    }

    #[test]
    fn sequence_family_mixes_exact_and_broken() {
        let h = sweedler4();
        let k = h.algebra();
        let seqs = sequence_family(k, 4).unwrap();
        let exact = seqs.iter().filter(|s| s.is_exact()).count();
        assert!(exact > 0 && exact < seqs.len());
        assert!(seqs.iter().all(|s| s.y.dim() <= 4));
        assert!(seqs.iter().any(|s| s.name.starts_with("J → K")));
    }
}
