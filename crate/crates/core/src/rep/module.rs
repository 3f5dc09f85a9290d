use crate::cert::{numbered, tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::hopf::AlgebraData;
use crate::linalg::{image_of, solve, Field, LinMap, SVec, Subspace};

use super::comodule::inclusion;
use super::Side;

/// A module over an algebra `A`.
///
/// Right: `action` is `dim × dim·dim_A`, index `m·dim_A + a`.
/// Left: `action` is `dim × dim_A·dim`, index `a·dim + m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    side: Side,
    algebra: AlgebraData,
    action: LinMap,
    labels: Vec<String>,
}

impl Module {
    pub fn new(side: Side, algebra: AlgebraData, action: LinMap, labels: Vec<String>) -> Result<Module> {
        let n = labels.len();
        ensure_dim("action rows", n, action.rows())?;
        ensure_dim("action columns", n * algebra.dim(), action.cols())?;
        Ok(Module {
            side,
            algebra,
            action,
            labels,
        })
    }

    pub fn unlabelled(side: Side, algebra: AlgebraData, action: LinMap) -> Result<Module> {
        let n = action.rows();
        Module::new(side, algebra, action, numbered("m", n))
    }

    /// Builds the action from one matrix per basis element of `A`.
    pub fn from_family(side: Side, algebra: AlgebraData, family: &[LinMap]) -> Result<Module> {
        ensure_dim("action family", algebra.dim(), family.len())?;
        let f = algebra.field();
        let n = family.first().map_or(0, |m| m.rows());
        let da = algebra.dim();
        let mut entries = Vec::new();
        for (a, m) in family.iter().enumerate() {
            for (i, j, x) in m.entries() {
                let col = match side {
                    Side::Right => j * da + a,
                    Side::Left => a * n + j,
                };
                entries.push((i, col, x.clone()));
            }
        }
        let action = LinMap::from_entries(f, n, n * da, entries)?;
        Module::unlabelled(side, algebra, action)
    }

    pub fn regular(side: Side, algebra: &AlgebraData) -> Module {
        Module {
            side,
            algebra: algebra.clone(),
            action: algebra.mult().clone(),
            labels: algebra.labels().to_vec(),
        }
    }

    /// `k^n` on which `a` acts by the scalar `χ(a)` for a character `χ : A → k`.
    pub fn scalar(side: Side, algebra: &AlgebraData, chi: &LinMap, n: usize) -> Module {
        let id = LinMap::identity(algebra.field(), n);
        let action = match side {
            Side::Right => id.kron(chi),
            Side::Left => chi.kron(&id),
        };
        Module {
            side,
            algebra: algebra.clone(),
            action,
            labels: numbered("m", n),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Module> {
        ensure_dim("module labels", self.dim(), labels.len())?;
        self.labels = labels;
        Ok(self)
    }

    /// Matrix by which the basis element `a` acts.
    pub fn act_by(&self, a: usize) -> LinMap {
        let f = self.field();
        let (n, da) = (self.dim(), self.algebra.dim());
        let cols = (0..n)
            .map(|m| {
                let col = match self.side {
                    Side::Right => m * da + a,
                    Side::Left => a * n + m,
                };
                self.action.column(col).clone()
            })
            .collect();
        LinMap::from_columns(f, n, cols)
    }

    /// Matrix by which an arbitrary element acts.
    pub fn act_by_element(&self, a: &SVec) -> LinMap {
        let mut out = LinMap::zero(self.field(), self.dim(), self.dim());
        for (i, x) in a.iter() {
            out = out.add(&self.act_by(*i).scale(x));
        }
        out
    }

    /// One action matrix per basis element of `A`.
    pub fn family(&self) -> Vec<LinMap> {
        (0..self.algebra.dim()).map(|a| self.act_by(a)).collect()
    }

    /// Right-handed form: a left `A`-module is a right `A^op`-module.
    pub fn as_right(&self) -> Module {
        match self.side {
            Side::Right => self.clone(),
            Side::Left => Module {
                side: Side::Right,
                algebra: self.algebra.opposite(),
                action: self
                    .action
                    .compose(&LinMap::swap(self.field(), self.dim(), self.algebra.dim())),
                labels: self.labels.clone(),
            },
        }
    }

    pub fn check(&self) -> CheckReport {
        let r = self.as_right();
        let f = r.field();
        let (n, da) = (r.dim(), r.algebra.dim());
        let idn = LinMap::identity(f, n);
        let ida = LinMap::identity(f, da);
        let la = r.algebra.labels();
        let mut rep = CheckReport::new();
        let lhs = r.action.compose(&r.action.kron(&ida));
        let rhs = r.action.compose(&idn.kron(r.algebra.mult()));
        rep.compare("action associative", &lhs, &rhs, &|j| {
            tensor_label(j, &[&r.labels, la, la])
        });
        let unit = r.action.compose(&idn.kron(r.algebra.unit()));
        rep.compare("action unital", &unit, &idn, &|j| r.labels[j].clone());
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_hold()
    }

    /// Whether `f : self → other` is `A`-linear.
    pub fn is_linear(&self, other: &Module, f: &LinMap) -> bool {
        (0..self.algebra.dim()).all(|a| f.compose(&self.act_by(a)) == other.act_by(a).compose(f))
    }

    /// `A`-linear maps `self → other`, vectorised `dim(other) × dim(self)`.
    pub fn hom(&self, other: &Module) -> Result<Subspace> {
        if self.side != other.side || self.algebra != other.algebra {
            return Err(Error::violation("module maps between modules over different algebras"));
        }
        Ok(hom_between_families(
            self.field(),
            &self.family(),
            &other.family(),
            self.dim(),
            other.dim(),
        ))
    }

    pub fn hom_basis(&self, other: &Module) -> Result<Vec<LinMap>> {
        Ok(self
            .hom(other)?
            .basis()
            .iter()
            .map(|v| solve::unvectorize(self.field(), v, other.dim(), self.dim()))
            .collect())
    }

    /// Restriction along an algebra map `ι : K → A`.
    pub fn restrict(&self, k: &AlgebraData, iota: &LinMap) -> Result<Module> {
        ensure_dim("restriction map rows", self.algebra.dim(), iota.rows())?;
        ensure_dim("restriction map columns", k.dim(), iota.cols())?;
        let idn = LinMap::identity(self.field(), self.dim());
        let lift = match self.side {
            Side::Right => idn.kron(iota),
            Side::Left => iota.kron(&idn),
        };
        Module::new(self.side, k.clone(), self.action.compose(&lift), self.labels.clone())
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if self.side != other.side || self.algebra != other.algebra {
            return Err(Error::violation("direct sum of modules over different algebras"));
        }
        let f = self.field();
        let (a, b) = (self.dim(), other.dim());
        let ia = inclusion(f, a + b, 0, a);
        let ib = inclusion(f, a + b, a, b);
        let family: Vec<LinMap> = self
            .family()
            .iter()
            .zip(other.family())
            .map(|(x, y)| {
                let pa = ia.transpose();
                let pb = ib.transpose();
                ia.compose(x).compose(&pa).add(&ib.compose(&y).compose(&pb))
            })
            .collect();
        let mut m = Module::from_family(self.side, self.algebra.clone(), &family)?;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        m.labels = labels;
        Ok(m)
    }

    /// The submodule on an invariant subspace, in its canonical basis.
    pub fn submodule(&self, s: &Subspace) -> Result<Module> {
        let family = self
            .family()
            .iter()
            .map(|m| crate::linalg::restrict(m, s, s))
            .collect::<Result<Vec<_>>>()?;
        if s.is_zero() {
            return Module::new(self.side, self.algebra.clone(), LinMap::zero(self.field(), 0, 0), Vec::new());
        }
        Module::from_family(self.side, self.algebra.clone(), &family)
    }

    /// The quotient by an invariant subspace, in the non-pivot coordinates.
    pub fn quotient(&self, s: &Subspace) -> Result<Module> {
        let q = s.quotient_map();
        let sec = crate::hopf::section_of_quotient(s);
        let family: Vec<LinMap> = self.family().iter().map(|m| q.compose(m).compose(&sec)).collect();
        for (a, m) in self.family().iter().enumerate() {
            if !q.compose(m).compose(&s.inclusion()).is_zero() {
                return Err(Error::NotContained(format!("subspace is not stable under basis element {a}")));
            }
        }
        if q.rows() == 0 {
            return Module::new(self.side, self.algebra.clone(), LinMap::zero(self.field(), 0, 0), Vec::new());
        }
        Module::from_family(self.side, self.algebra.clone(), &family)
    }

    /// Submodule generated by a family of vectors.
    pub fn spin(&self, vectors: Vec<SVec>) -> Subspace {
        spin(self.field(), self.dim(), &self.family(), vectors)
    }
}

/// The smallest subspace containing `vectors` and stable under every matrix.
pub fn spin(field: Field, dim: usize, family: &[LinMap], vectors: Vec<SVec>) -> Subspace {
    let mut space = Subspace::span(field, dim, vectors);
    loop {
        let mut new = space.basis().to_vec();
        for m in family {
            for v in space.basis() {
                new.push(m.apply(v));
            }
        }
        let next = Subspace::span(field, dim, new);
        if next.dim() == space.dim() {
            return space;
        }
        space = next;
    }
}

/// Maps `s` with `s∘x_a = y_a∘s` for all `a`, vectorised.
pub fn hom_between_families(field: Field, xs: &[LinMap], ys: &[LinMap], dx: usize, dy: usize) -> Subspace {
    let mut rows: Vec<SVec> = Vec::new();
    for (x, y) in xs.iter().zip(ys) {
        rows.extend(solve::commutation_constraint(x, y).row_vectors());
    }
    if rows.is_empty() {
        return Subspace::full(field, dx * dy);
    }
    crate::linalg::kernel_of(&LinMap::from_rows(field, dx * dy, &rows))
}

/// `M ⊗_A N` for a right module `M` and a left module `N`: the relation
/// subspace `span{ma⊗n − m⊗an}` of `M⊗N` and the dimension of the quotient.
pub fn tensor_over(m: &Module, n: &Module) -> Result<(Subspace, usize)> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(Error::violation("tensor over an algebra needs a right and a left module"));
    }
    if m.algebra != n.algebra {
        return Err(Error::violation("tensor over different algebras"));
    }
    let f = m.field();
    let lhs = m.action.kron(&LinMap::identity(f, n.dim()));
    let rhs = LinMap::identity(f, m.dim()).kron(&n.action);
    let rel = image_of(&lhs.sub(&rhs));
    let dim = m.dim() * n.dim() - rel.dim();
    Ok((rel, dim))
}
