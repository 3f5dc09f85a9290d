use crate::cert::{numbered, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::hopf::{CoalgebraData, HopfAlgebra};
use crate::linalg::{kernel_of, restrict, solve, Field, LinMap, SVec, Subspace};

use super::Side;

/// A comodule over a coalgebra `C`.
///
/// Right: `coaction` is `dim·dim_C × dim`, index `n·dim_C + c`.
/// Left: `coaction` is `dim_C·dim × dim`, index `c·dim + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    side: Side,
    coalgebra: CoalgebraData,
    coaction: LinMap,
    labels: Vec<String>,
}

impl Comodule {
    pub fn new(side: Side, coalgebra: CoalgebraData, coaction: LinMap, labels: Vec<String>) -> Result<Comodule> {
        let n = labels.len();
        ensure_dim("coaction columns", n, coaction.cols())?;
        ensure_dim("coaction rows", n * coalgebra.dim(), coaction.rows())?;
        Ok(Comodule {
            side,
            coalgebra,
            coaction,
            labels,
        })
    }

    /// Same as [`Comodule::new`] with labels `v0, v1, …`.
    pub fn unlabelled(side: Side, coalgebra: CoalgebraData, coaction: LinMap) -> Result<Comodule> {
        let n = coaction.cols();
        Comodule::new(side, coalgebra, coaction, numbered("v", n))
    }

    /// `C` over itself via `Δ`.
    pub fn regular(side: Side, c: &CoalgebraData) -> Comodule {
        Comodule {
            side,
            coalgebra: c.clone(),
            coaction: c.comult().clone(),
            labels: c.labels().to_vec(),
        }
    }

    /// `k^n` with `v ↦ v⊗g` for a grouplike `g`.
    pub fn trivial(side: Side, c: &CoalgebraData, grouplike: &SVec, n: usize) -> Comodule {
        let f = c.field();
        let g = LinMap::from_columns(f, c.dim(), vec![grouplike.clone()]);
        let id = LinMap::identity(f, n);
        let coaction = match side {
            Side::Right => id.kron(&g),
            Side::Left => g.kron(&id),
        };
        Comodule {
            side,
            coalgebra: c.clone(),
            coaction,
            labels: numbered("v", n),
        }
    }

    /// Trivial comodule over a Hopf algebra, using `1`.
    pub fn trivial_hopf(side: Side, h: &HopfAlgebra, n: usize) -> Comodule {
        Comodule::trivial(side, h.coalgebra(), &h.one(), n)
    }

    pub fn zero(side: Side, c: &CoalgebraData) -> Comodule {
        Comodule {
            side,
            coalgebra: c.clone(),
            coaction: LinMap::zero(c.field(), 0, 0),
            labels: Vec::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Comodule> {
        ensure_dim("comodule labels", self.dim(), labels.len())?;
        self.labels = labels;
        Ok(self)
    }

    /// The coaction in right-handed form: a left `C`-comodule becomes a
    /// right `C^cop`-comodule by flipping the legs.
    pub fn as_right(&self) -> Comodule {
        match self.side {
            Side::Right => self.clone(),
            Side::Left => Comodule {
                side: Side::Right,
                coalgebra: self.coalgebra.coopposite(),
                coaction: LinMap::swap(self.field(), self.coalgebra.dim(), self.dim())
                    .compose(&self.coaction),
                labels: self.labels.clone(),
            },
        }
    }

    pub fn check(&self) -> CheckReport {
        let r = self.as_right();
        let f = r.field();
        let (n, dc) = (r.dim(), r.coalgebra.dim());
        let idn = LinMap::identity(f, n);
        let idc = LinMap::identity(f, dc);
        let mut rep = CheckReport::new();
        let lhs = r.coaction.kron(&idc).compose(&r.coaction);
        let rhs = idn.kron(r.coalgebra.comult()).compose(&r.coaction);
        rep.compare("coaction coassociative", &lhs, &rhs, &|j| r.labels[j].clone());
        let counit = idn.kron(r.coalgebra.counit()).compose(&r.coaction);
        rep.compare("coaction counital", &counit, &idn, &|j| r.labels[j].clone());
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_hold()
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.side != other.side || self.coalgebra != other.coalgebra {
            return Err(Error::violation("direct sum of comodules over different coalgebras"));
        }
        let f = self.field();
        let (a, b) = (self.dim(), other.dim());
        let ia = inclusion(f, a + b, 0, a);
        let ib = inclusion(f, a + b, a, b);
        let dc = LinMap::identity(f, self.coalgebra.dim());
        let (ja, jb) = match self.side {
            Side::Right => (ia.kron(&dc), ib.kron(&dc)),
            Side::Left => (dc.kron(&ia), dc.kron(&ib)),
        };
        let mut cols: Vec<SVec> = Vec::with_capacity(a + b);
        for c in 0..a {
            cols.push(ja.apply(self.coaction.column(c)));
        }
        for c in 0..b {
            cols.push(jb.apply(other.coaction.column(c)));
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Comodule::new(
            self.side,
            self.coalgebra.clone(),
            LinMap::from_columns(f, (a + b) * self.coalgebra.dim(), cols),
            labels,
        )
    }

    /// The coaction restricted to a `ρ`-stable subspace, in its canonical basis.
    pub fn subcomodule(&self, s: &Subspace) -> Result<Comodule> {
        let f = self.field();
        let (n, dc, k) = (self.dim(), self.coalgebra.dim(), s.dim());
        let mut cols = Vec::with_capacity(k);
        for (idx, v) in s.basis().iter().enumerate() {
            let image = self.coaction.apply(v);
            // read off coefficients at pivot positions, then verify
            let mut coords = SVec::new();
            for (i, p) in s.pivots().iter().enumerate() {
                for c in 0..dc {
                    let (src, dst) = match self.side {
                        Side::Right => (p * dc + c, i * dc + c),
                        Side::Left => (c * n + p, c * k + i),
                    };
                    if let Some(x) = image.get(src) {
                        coords.set(dst, x.clone());
                    }
                }
            }
            let inc = s.inclusion();
            let idc = LinMap::identity(f, dc);
            let lift = match self.side {
                Side::Right => inc.kron(&idc),
                Side::Left => idc.kron(&inc),
            };
            if lift.apply(&coords) != image {
                return Err(Error::NotContained(format!(
                    "coaction of basis vector {idx} leaves the subspace"
                )));
            }
            cols.push(coords);
        }
        Comodule::unlabelled(self.side, self.coalgebra.clone(), LinMap::from_columns(f, k * dc, cols))
    }

    /// Whether `f : self → other` is colinear.
    pub fn is_colinear(&self, other: &Comodule, f: &LinMap) -> bool {
        let idc = LinMap::identity(self.field(), self.coalgebra.dim());
        let lift = match self.side {
            Side::Right => f.kron(&idc),
            Side::Left => idc.kron(f),
        };
        lift.compose(&self.coaction) == other.coaction.compose(f)
    }

    /// The colinear maps `self → other`, as vectorised `dim(other) × dim(self)` matrices.
    pub fn hom_colinear(&self, other: &Comodule) -> Result<Subspace> {
        if self.side != other.side || self.coalgebra != other.coalgebra {
            return Err(Error::violation("colinear maps between comodules over different coalgebras"));
        }
        let field = self.field();
        let idc = LinMap::identity(field, self.coalgebra.dim());
        let side = self.side;
        let cond = |s: &LinMap| {
            let lift = match side {
                Side::Right => s.kron(&idc),
                Side::Left => idc.kron(s),
            };
            lift.compose(&self.coaction).sub(&other.coaction.compose(s))
        };
        Ok(solve::map_space(field, other.dim(), self.dim(), &[&cond]))
    }

    /// Colinear maps as matrices (a basis).
    pub fn hom_basis(&self, other: &Comodule) -> Result<Vec<LinMap>> {
        let s = self.hom_colinear(other)?;
        Ok(s.basis()
            .iter()
            .map(|v| solve::unvectorize(self.field(), v, other.dim(), self.dim()))
            .collect())
    }

    /// Corestriction along a coalgebra map `ψ : C → B`.
    pub fn corestrict(&self, b: &CoalgebraData, psi: &LinMap) -> Result<Comodule> {
        let report = self.coalgebra.check_morphism(b, psi)?;
        if let Some(c) = report.first_failure() {
            return Err(Error::violation(format!(
                "not a coalgebra map: `{}` fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(self.corestrict_unchecked(b, psi))
    }

    pub(crate) fn corestrict_unchecked(&self, b: &CoalgebraData, psi: &LinMap) -> Comodule {
        let idn = LinMap::identity(self.field(), self.dim());
        let lift = match self.side {
            Side::Right => idn.kron(psi),
            Side::Left => psi.kron(&idn),
        };
        Comodule {
            side: self.side,
            coalgebra: b.clone(),
            coaction: lift.compose(&self.coaction),
            labels: self.labels.clone(),
        }
    }

    /// `V ⊗ W` with `v⊗w ↦ v₀⊗w₀⊗v₁w₁` (right) or `v₋₁w₋₁⊗v₀⊗w₀` (left).
    pub fn tensor(&self, other: &Comodule, h: &HopfAlgebra) -> Result<Comodule> {
        if self.coalgebra != *h.coalgebra() || other.coalgebra != *h.coalgebra() || self.side != other.side {
            return Err(Error::violation("tensor of comodules over different Hopf algebras"));
        }
        let f = self.field();
        let (a, b, d) = (self.dim(), other.dim(), h.dim());
        let coaction = match self.side {
            Side::Right => LinMap::identity(f, a * b)
                .kron(h.mult())
                .compose(&LinMap::permute_legs(f, &[a, d, b, d], &[0, 2, 1, 3]))
                .compose(&self.coaction.kron(&other.coaction)),
            Side::Left => h
                .mult()
                .kron(&LinMap::identity(f, a * b))
                .compose(&LinMap::permute_legs(f, &[d, a, d, b], &[0, 2, 1, 3]))
                .compose(&self.coaction.kron(&other.coaction)),
        };
        let labels = tensor_labels(&self.labels, &other.labels);
        Comodule::new(self.side, self.coalgebra.clone(), coaction, labels)
    }

    /// The dual comodule on the other side, in the dual basis.
    pub fn dual(&self) -> Comodule {
        let f = self.field();
        let (n, dc) = (self.dim(), self.coalgebra.dim());
        let mut entries = Vec::new();
        for (row, j, x) in self.coaction.entries() {
            match self.side {
                Side::Right => {
                    let (i, c) = (row / dc, row % dc);
                    entries.push((c * n + j, i, x.clone()));
                }
                Side::Left => {
                    let (c, i) = (row / n, row % n);
                    entries.push((j * dc + c, i, x.clone()));
                }
            }
        }
        Comodule {
            side: self.side.other(),
            coalgebra: self.coalgebra.clone(),
            coaction: LinMap::from_entries(f, n * dc, n, entries).expect("entries in range"),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
        }
    }
}

/// Unit vectors `offset..offset+len` of `k^total`, as columns.
pub(crate) fn inclusion(f: Field, total: usize, offset: usize, len: usize) -> LinMap {
    LinMap::from_columns(f, total, (0..len).map(|i| SVec::unit(f, offset + i)).collect())
}

pub(crate) fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(format!("{x}⊗{y}"));
        }
    }
    out
}

/// `V □_C W ⊆ V⊗W` for a right comodule `V` and a left comodule `W`.
pub fn cotensor(v: &Comodule, w: &Comodule) -> Result<Subspace> {
    if v.side != Side::Right || w.side != Side::Left {
        return Err(Error::violation("cotensor needs a right and a left comodule"));
    }
    if v.coalgebra != w.coalgebra {
        return Err(Error::violation("cotensor over different coalgebras"));
    }
    let f = v.field();
    let lhs = v.coaction.kron(&LinMap::identity(f, w.dim()));
    let rhs = LinMap::identity(f, v.dim()).kron(&w.coaction);
    Ok(kernel_of(&lhs.sub(&rhs)))
}

/// The map `V□W → V'□W'` induced by colinear `f : V → V'`, `g : W → W'`.
pub fn cotensor_map(f: &LinMap, g: &LinMap, src: &Subspace, dst: &Subspace) -> Result<LinMap> {
    restrict(&f.kron(g), src, dst)
}

/// Recovers `ψ = (ε⊗id)∘λ` from a `B`-coaction `λ` on the carrier of the
/// regular `C`-comodule and checks that corestriction along `ψ` gives back `λ`.
pub fn recover_coalgebra_map(c: &CoalgebraData, b: &CoalgebraData, lambda: &LinMap) -> Result<LinMap> {
    ensure_dim("coaction rows", c.dim() * b.dim(), lambda.rows())?;
    ensure_dim("coaction columns", c.dim(), lambda.cols())?;
    let psi = c.counit().kron(&LinMap::identity(c.field(), b.dim())).compose(lambda);
    let report = c.check_morphism(b, &psi)?;
    if !report.all_hold() {
        return Err(Error::violation("functor not induced by a coalgebra map"));
    }
    let regenerated = Comodule::regular(Side::Right, c).corestrict_unchecked(b, &psi);
    if regenerated.coaction != *lambda {
        return Err(Error::violation("functor not induced by a coalgebra map"));
    }
    Ok(psi)
}

/// A `(Γ, D)`-bicomodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    left: Comodule,
    right: Comodule,
}

impl Bicomodule {
    pub fn new(left: Comodule, right: Comodule) -> Result<Bicomodule> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::violation("bicomodule needs a left and a right coaction"));
        }
        ensure_dim("bicomodule carriers", left.dim(), right.dim())?;
        Ok(Bicomodule { left, right })
    }

    /// `D` over itself on both sides.
    pub fn regular(d: &CoalgebraData) -> Bicomodule {
        Bicomodule {
            left: Comodule::regular(Side::Left, d),
            right: Comodule::regular(Side::Right, d),
        }
    }

    pub fn left(&self) -> &Comodule {
        &self.left
    }

    pub fn right(&self) -> &Comodule {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.absorb("left ", self.left.check());
        r.absorb("right ", self.right.check());
        let f = self.left.field();
        let a = LinMap::identity(f, self.left.coalgebra.dim())
            .kron(&self.right.coaction)
            .compose(&self.left.coaction);
        let b = self
            .left
            .coaction
            .kron(&LinMap::identity(f, self.right.coalgebra.dim()))
            .compose(&self.right.coaction);
        r.compare("coactions commute", &a, &b, &|j| self.left.labels[j].clone());
        r
    }

    /// Whether `f : self → other` is colinear on both sides.
    pub fn is_bicolinear(&self, other: &Bicomodule, f: &LinMap) -> bool {
        self.left.is_colinear(&other.left, f) && self.right.is_colinear(&other.right, f)
    }

    /// The dual bicomodule `(D, Γ)`.
    pub fn dual(&self) -> Bicomodule {
        Bicomodule {
            left: self.right.dual(),
            right: self.left.dual(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, FiniteGroupTable};
    use crate::correspondence::{quotient_module_coalgebra, CoidealSubalgebra};

    #[test]
    fn colinear_endomorphisms_of_the_regular_comodule() {
        let s3 = FiniteGroupTable::symmetric3();
        let h = function_algebra(Field::Rational, &s3);
        let c = h.coalgebra().clone();
        let reg = Comodule::regular(Side::Right, &c);
        assert!(reg.is_valid());
        assert_eq!(reg.hom_colinear(&reg).unwrap().dim(), 6);
        let triv = Comodule::trivial(Side::Right, &c, &h.one(), 1);
        assert!(triv.is_valid());
        assert_eq!(triv.hom_colinear(&reg).unwrap().dim(), 1);
        // kS₃ is cocommutative with six grouplikes: End is diagonal
        let ks3 = group_algebra(Field::Rational, &s3);
        let reg = Comodule::regular(Side::Right, ks3.coalgebra());
        assert_eq!(reg.hom_colinear(&reg).unwrap().dim(), 6);
    }

    #[test]
    fn cotensor_of_sweedler_over_its_quotient() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        let v = q.hopf_as_right_comodule();
        let w = q.hopf_as_left_comodule();
        assert!(v.is_valid() && w.is_valid());
        assert_eq!(cotensor(&v, &w).unwrap().dim(), 8);
        assert!(cotensor(&w, &v).is_err());
    }

    #[test]
    fn cotensor_with_the_coalgebra_is_the_comodule() {
        let h = sweedler4();
        let c = h.coalgebra();
        let v = Comodule::regular(Side::Right, c);
        let w = Comodule::regular(Side::Left, c);
        assert_eq!(cotensor(&v, &w).unwrap().dim(), 4);
    }

    #[test]
    fn tensor_and_dual_stay_comodules() {
        let h = sweedler4();
        let reg = Comodule::regular(Side::Right, h.coalgebra());
        let t = reg.tensor(&reg, &h).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(t.is_valid());
        let d = reg.dual();
        assert!(d.is_valid());
        assert_eq!(d.side(), Side::Left);
        let s = reg.direct_sum(&Comodule::trivial_hopf(Side::Right, &h, 2)).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(s.is_valid());
    }

    #[test]
    fn subcomodule_rejects_non_subcomodules() {
        let h = sweedler4();
        let reg = Comodule::regular(Side::Right, h.coalgebra());
        let f = h.field();
        let one = Subspace::span(f, 4, vec![h.element("1")]);
        assert_eq!(reg.subcomodule(&one).unwrap().dim(), 1);
        let x = Subspace::span(f, 4, vec![h.element("x")]);
        assert!(reg.subcomodule(&x).is_err());
    }

    #[test]
    fn recovering_a_coalgebra_map() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&a).unwrap();
        let lambda = q.hopf_as_right_comodule().coaction().clone();
        assert_eq!(recover_coalgebra_map(h.coalgebra(), q.b(), &lambda).unwrap(), *q.pi());

        let f = h.field();
        let bump = LinMap::from_entries(f, lambda.rows(), lambda.cols(), [(1, 2, f.one())]).unwrap();
        assert!(recover_coalgebra_map(h.coalgebra(), q.b(), &lambda.add(&bump)).is_err());
    }

    #[test]
    fn regular_bicomodule() {
        let b = Bicomodule::regular(sweedler4().coalgebra());
        assert!(b.check().all_hold());
        assert!(b.dual().check().all_hold());
        assert!(b.is_bicolinear(&b, &LinMap::identity(Field::Rational, 4)));
    }
}
