use crate::cert::{tensor_label, CheckReport};
use crate::correspondence::CoidealSubalgebra;
use crate::error::{ensure_dim, Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{LinMap, Subspace};

use super::{Comodule, Module, Side};

/// An object of `ℳᴴ_A`: a right `H`-comodule with a colinear right `A`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelHopfModule {
    sub: CoidealSubalgebra,
    comodule: Comodule,
    module: Module,
}

impl RelHopfModule {
    pub fn new(sub: &CoidealSubalgebra, comodule: Comodule, module: Module) -> Result<RelHopfModule> {
        ensure_dim("relative Hopf module carriers", comodule.dim(), module.dim())?;
        if comodule.side() != Side::Right || module.side() != Side::Right {
            return Err(Error::violation("relative Hopf modules are right-right"));
        }
        if comodule.coalgebra() != sub.hopf().coalgebra() || module.algebra() != sub.algebra() {
            return Err(Error::violation("structures over the wrong (co)algebra"));
        }
        Ok(RelHopfModule {
            sub: sub.clone(),
            comodule,
            module,
        })
    }

    /// `H` with `Δ` and right multiplication by `A`.
    pub fn hopf_regular(sub: &CoidealSubalgebra) -> RelHopfModule {
        let h = sub.hopf();
        let action = h
            .mult()
            .compose(&LinMap::identity(h.field(), h.dim()).kron(&sub.inclusion()));
        RelHopfModule {
            sub: sub.clone(),
            comodule: Comodule::regular(Side::Right, h.coalgebra()),
            module: Module::new(Side::Right, sub.algebra().clone(), action, h.labels().to_vec())
                .expect("shapes agree"),
        }
    }

    /// `A` with `Δ_A` and its own multiplication.
    pub fn subalgebra_regular(sub: &CoidealSubalgebra) -> RelHopfModule {
        let comodule = Comodule::new(
            Side::Right,
            sub.hopf().coalgebra().clone(),
            sub.coaction().clone(),
            sub.algebra().labels().to_vec(),
        )
        .expect("shapes agree");
        RelHopfModule {
            sub: sub.clone(),
            comodule,
            module: Module::regular(Side::Right, sub.algebra()),
        }
    }

    pub fn sub(&self) -> &CoidealSubalgebra {
        &self.sub
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.sub.hopf()
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.comodule.labels()
    }

    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.checks.extend(self.comodule.check().checks);
        r.checks.extend(self.module.check().checks);
        let h = self.hopf();
        let f = h.field();
        let (n, da, dh) = (self.dim(), self.sub.dim(), h.dim());
        let lhs = self.comodule.coaction().compose(self.module.action());
        let rhs = self
            .module
            .action()
            .kron(h.mult())
            .compose(&LinMap::permute_legs(f, &[n, dh, da, dh], &[0, 2, 1, 3]))
            .compose(&self.comodule.coaction().kron(self.sub.coaction()));
        let la = self.sub.algebra().labels();
        r.compare("action colinear", &lhs, &rhs, &|j| {
            tensor_label(j, &[self.labels(), la])
        });
        r
    }

    pub fn is_valid(&self) -> bool {
        self.check().all_hold()
    }

    /// Whether `f` is colinear and `A`-linear.
    pub fn is_morphism(&self, other: &RelHopfModule, f: &LinMap) -> bool {
        self.comodule.is_colinear(&other.comodule, f) && self.module.is_linear(&other.module, f)
    }

    /// Submodule on a subspace stable under both structures.
    pub fn restrict_to(&self, s: &Subspace) -> Result<RelHopfModule> {
        RelHopfModule::new(&self.sub, self.comodule.subcomodule(s)?, self.module.submodule(s)?)
    }
}
