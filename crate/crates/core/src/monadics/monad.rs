use crate::cert::{tensor_label, CheckReport};
use crate::correspondence::{CoidealSubalgebra, QuotientModuleCoalgebra};
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, HopfAlgebra};
use crate::linalg::{restrict, LinMap, Subspace};
use crate::rep::{cotensor, cotensor_map, Comodule, Module, RelHopfModule, Side};

/// An adjunction `F ⊣ G` out of right `H`-comodules, given by its action on
/// objects and maps together with unit and counit components.
pub trait Adjunction {
    type Target;

    fn name(&self) -> String;
    fn hopf(&self) -> &HopfAlgebra;
    fn left(&self, v: &Comodule) -> Result<Self::Target>;
    fn left_map(&self, v: &Comodule, w: &Comodule, f: &LinMap) -> Result<LinMap>;
    fn right(&self, x: &Self::Target) -> Result<Comodule>;
    fn right_map(&self, x: &Self::Target, y: &Self::Target, f: &LinMap) -> Result<LinMap>;
    /// `η_V : V → GF(V)`.
    fn unit(&self, v: &Comodule) -> Result<LinMap>;
    /// `ε_X : FG(X) → X`.
    fn counit(&self, x: &Self::Target) -> Result<LinMap>;
    /// `w_V : V⊗T(I) → T(V)`, if the adjunction supplies one.
    fn tensor_witness(&self, v: &Comodule) -> Result<Option<LinMap>>;
}

/// `T = GF` on objects.
pub fn t_object<F: Adjunction>(adj: &F, v: &Comodule) -> Result<Comodule> {
    adj.right(&adj.left(v)?)
}

/// `T = GF` on a map `f : V → W`.
pub fn t_map<F: Adjunction>(adj: &F, v: &Comodule, w: &Comodule, f: &LinMap) -> Result<LinMap> {
    let (fv, fw) = (adj.left(v)?, adj.left(w)?);
    adj.right_map(&fv, &fw, &adj.left_map(v, w, f)?)
}

/// `μ_V = G(ε_{FV}) : TT(V) → T(V)`.
pub fn t_mult<F: Adjunction>(adj: &F, v: &Comodule) -> Result<LinMap> {
    let fv = adj.left(v)?;
    let fgfv = adj.left(&adj.right(&fv)?)?;
    adj.right_map(&fgfv, &fv, &adj.counit(&fv)?)
}

/// The identity adjunction on `ℳᴴ`.
pub struct IdentityAdjunction {
    hopf: HopfAlgebra,
}

impl IdentityAdjunction {
    pub fn new(hopf: &HopfAlgebra) -> IdentityAdjunction {
        IdentityAdjunction { hopf: hopf.clone() }
    }
}

impl Adjunction for IdentityAdjunction {
    type Target = Comodule;

    fn name(&self) -> String {
        "identity".into()
    }

    fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    fn left(&self, v: &Comodule) -> Result<Comodule> {
        Ok(v.clone())
    }

    fn left_map(&self, _: &Comodule, _: &Comodule, f: &LinMap) -> Result<LinMap> {
        Ok(f.clone())
    }

    fn right(&self, x: &Comodule) -> Result<Comodule> {
        Ok(x.clone())
    }

    fn right_map(&self, _: &Comodule, _: &Comodule, f: &LinMap) -> Result<LinMap> {
        Ok(f.clone())
    }

    fn unit(&self, v: &Comodule) -> Result<LinMap> {
        Ok(LinMap::identity(v.field(), v.dim()))
    }

    fn counit(&self, x: &Comodule) -> Result<LinMap> {
        Ok(LinMap::identity(x.field(), x.dim()))
    }

    fn tensor_witness(&self, v: &Comodule) -> Result<Option<LinMap>> {
        Ok(Some(LinMap::identity(v.field(), v.dim())))
    }
}

/// `Res = −⊗A : ℳᴴ → ℳᴴ_A` left adjoint to the forgetful functor.
pub struct InductionAdjunction {
    sub: CoidealSubalgebra,
    a: Comodule,
}

impl InductionAdjunction {
    pub fn new(sub: &CoidealSubalgebra) -> InductionAdjunction {
        InductionAdjunction {
            sub: sub.clone(),
            a: RelHopfModule::subalgebra_regular(sub).comodule().clone(),
        }
    }

    pub fn sub(&self) -> &CoidealSubalgebra {
        &self.sub
    }
}

impl Adjunction for InductionAdjunction {
    type Target = RelHopfModule;

    fn name(&self) -> String {
        "free module over A".into()
    }

    fn hopf(&self) -> &HopfAlgebra {
        self.sub.hopf()
    }

    fn left(&self, v: &Comodule) -> Result<RelHopfModule> {
        let comodule = v.tensor(&self.a, self.hopf())?;
        let action = LinMap::identity(v.field(), v.dim()).kron(self.sub.algebra().mult());
        let module = Module::new(Side::Right, self.sub.algebra().clone(), action, comodule.labels().to_vec())?;
        RelHopfModule::new(&self.sub, comodule, module)
    }

    fn left_map(&self, _: &Comodule, _: &Comodule, f: &LinMap) -> Result<LinMap> {
        Ok(f.kron(&LinMap::identity(f.field(), self.sub.dim())))
    }

    fn right(&self, x: &RelHopfModule) -> Result<Comodule> {
        Ok(x.comodule().clone())
    }

    fn right_map(&self, _: &RelHopfModule, _: &RelHopfModule, f: &LinMap) -> Result<LinMap> {
        Ok(f.clone())
    }

    fn unit(&self, v: &Comodule) -> Result<LinMap> {
        Ok(LinMap::identity(v.field(), v.dim()).kron(self.sub.algebra().unit()))
    }

    fn counit(&self, x: &RelHopfModule) -> Result<LinMap> {
        Ok(x.module().action().clone())
    }

    fn tensor_witness(&self, v: &Comodule) -> Result<Option<LinMap>> {
        Ok(Some(LinMap::identity(v.field(), v.dim() * self.sub.dim())))
    }
}

/// Corestriction `ψ* : ℳᴴ → ℳᴮ` left adjoint to `−□_B H`.
pub struct CotensorAdjunction {
    q: QuotientModuleCoalgebra,
    h_left: Comodule,
}

impl CotensorAdjunction {
    pub fn new(q: &QuotientModuleCoalgebra) -> CotensorAdjunction {
        CotensorAdjunction {
            q: q.clone(),
            h_left: q.hopf_as_left_comodule(),
        }
    }

    pub fn quotient(&self) -> &QuotientModuleCoalgebra {
        &self.q
    }

    /// `N □_B H ⊆ N⊗H`.
    pub fn carrier(&self, n: &Comodule) -> Result<Subspace> {
        cotensor(n, &self.h_left)
    }
}

impl Adjunction for CotensorAdjunction {
    type Target = Comodule;

    fn name(&self) -> String {
        "corestriction to B".into()
    }

    fn hopf(&self) -> &HopfAlgebra {
        self.q.hopf()
    }

    fn left(&self, v: &Comodule) -> Result<Comodule> {
        if v.coalgebra() != self.hopf().coalgebra() || v.side() != Side::Right {
            return Err(Error::violation("corestriction needs a right H-comodule"));
        }
        Ok(v.corestrict_unchecked(self.q.b(), self.q.pi()))
    }

    fn left_map(&self, _: &Comodule, _: &Comodule, f: &LinMap) -> Result<LinMap> {
        Ok(f.clone())
    }

    fn right(&self, n: &Comodule) -> Result<Comodule> {
        let h = self.hopf();
        let big = Comodule::unlabelled(
            Side::Right,
            h.coalgebra().clone(),
            LinMap::identity(h.field(), n.dim()).kron(h.comult()),
        )?;
        big.subcomodule(&self.carrier(n)?)
    }

    fn right_map(&self, x: &Comodule, y: &Comodule, f: &LinMap) -> Result<LinMap> {
        let idh = LinMap::identity(f.field(), self.hopf().dim());
        cotensor_map(f, &idh, &self.carrier(x)?, &self.carrier(y)?)
    }

    fn unit(&self, v: &Comodule) -> Result<LinMap> {
        let target = self.carrier(&self.left(v)?)?;
        restrict(v.coaction(), &Subspace::full(v.field(), v.dim()), &target)
    }

    fn counit(&self, n: &Comodule) -> Result<LinMap> {
        let carrier = self.carrier(n)?;
        Ok(LinMap::identity(n.field(), n.dim())
            .kron(self.hopf().counit())
            .compose(&carrier.inclusion()))
    }

    fn tensor_witness(&self, v: &Comodule) -> Result<Option<LinMap>> {
        let h = self.hopf();
        let f = h.field();
        let unit = Comodule::trivial_hopf(Side::Right, h, 1);
        let ti = self.carrier(&self.left(&unit)?)?;
        let tv = self.carrier(&self.left(v)?)?;
        // v⊗a ↦ v₀⊗v₁a
        let raw = LinMap::identity(f, v.dim())
            .kron(h.mult())
            .compose(&v.coaction().kron(&LinMap::identity(f, h.dim())))
            .compose(&LinMap::identity(f, v.dim()).kron(&ti.inclusion()));
        Ok(Some(restrict(&raw, &Subspace::full(f, raw.cols()), &tv)?))
    }
}

/// One sampled object with its monad data.
#[derive(Clone, Debug)]
pub struct MonadObject {
    pub name: String,
    pub object: Comodule,
    pub t: Comodule,
    /// `η_V : V → T(V)`.
    pub eta: LinMap,
    /// `μ_V : TT(V) → T(V)`.
    pub mu: LinMap,
}

/// The monad `T = GF` sampled on a finite list of comodules. The unit
/// object `I` is always the first sample.
#[derive(Clone, Debug)]
pub struct MonadSample {
    pub adjunction: String,
    pub objects: Vec<MonadObject>,
    pub certificates: CheckReport,
}

impl MonadSample {
    pub fn unit_object(&self) -> &MonadObject {
        &self.objects[0]
    }

    pub fn get(&self, name: &str) -> Option<&MonadObject> {
        self.objects.iter().find(|o| o.name == name)
    }
}

/// Builds the monad of an adjunction on the given samples, checking the
/// triangle identities first and then the monad laws and naturality.
pub fn monad_from_adjunction<F: Adjunction>(adj: &F, samples: &[(String, Comodule)]) -> Result<MonadSample> {
    let mut all = vec![("I".to_string(), Comodule::trivial_hopf(Side::Right, adj.hopf(), 1))];
    all.extend(samples.iter().filter(|(n, _)| n != "I").cloned());

    let mut r = CheckReport::new();
    let mut objects = Vec::with_capacity(all.len());
    for (name, v) in &all {
        let fv = adj.left(v)?;
        let tv = adj.right(&fv)?;
        let eta = adj.unit(v)?;
        let eps = adj.counit(&fv)?;
        let f_eta = adj.left_map(v, &tv, &eta)?;
        if !eps.compose(&f_eta).is_identity() {
            return Err(Error::violation(format!("triangle identity εF∘Fη = id fails on {name}")));
        }
        let fgfv = adj.left(&tv)?;
        let g_eps = adj.right_map(&fgfv, &fv, &eps)?;
        let eta_t = adj.unit(&tv)?;
        if !g_eps.compose(&eta_t).is_identity() {
            return Err(Error::violation(format!("triangle identity Gε∘ηG = id fails on {name}")));
        }

        let mu = g_eps;
        let ttv = adj.right(&fgfv)?;
        let mu_t = t_mult(adj, &tv)?;
        let t_mu = t_map(adj, &ttv, &tv, &mu)?;
        let t_eta = t_map(adj, v, &tv, &eta)?;
        let id = |j: usize| format!("{name}: basis {j}");
        r.compare(&format!("associativity on {name}"), &mu.compose(&t_mu), &mu.compose(&mu_t), &id);
        r.compare(
            &format!("left unit on {name}"),
            &mu.compose(&t_eta),
            &LinMap::identity(v.field(), tv.dim()),
            &id,
        );
        r.compare(
            &format!("right unit on {name}"),
            &mu.compose(&eta_t),
            &LinMap::identity(v.field(), tv.dim()),
            &id,
        );
        r.push(format!("unit colinear on {name}"), v.is_colinear(&tv, &eta), Some(name.clone()));
        r.push(format!("multiplication colinear on {name}"), ttv.is_colinear(&tv, &mu), Some(name.clone()));
        objects.push(MonadObject {
            name: name.clone(),
            object: v.clone(),
            t: tv,
            eta,
            mu,
        });
    }

    for src in &objects {
        for dst in &objects {
            for f in src.object.hom_basis(&dst.object)? {
                let tf = t_map(adj, &src.object, &dst.object, &f)?;
                let ttf = t_map(adj, &src.t, &dst.t, &tf)?;
                let label = format!("{} → {}", src.name, dst.name);
                let ok_eta = tf.compose(&src.eta) == dst.eta.compose(&f);
                let ok_mu = tf.compose(&src.mu) == dst.mu.compose(&ttf);
                r.push(format!("η natural on {label}"), ok_eta, Some(label.clone()));
                r.push(format!("μ natural on {label}"), ok_mu, Some(label));
            }
        }
    }

    if let Some(c) = r.first_failure() {
        return Err(Error::violation(format!(
            "monad law `{}` fails: {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        )));
    }
    Ok(MonadSample {
        adjunction: adj.name(),
        objects,
        certificates: r,
    })
}

/// The algebra `T(I)` with the witnesses `w_V : V⊗T(I) ≅ T(V)`.
#[derive(Clone, Debug)]
pub struct UnitObjectAlgebra {
    pub algebra: AlgebraData,
    pub t_unit: Comodule,
    pub witnesses: Vec<(String, LinMap)>,
    pub certificates: CheckReport,
}

impl UnitObjectAlgebra {
    pub fn witness(&self, name: &str) -> Option<&LinMap> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }
}

fn witness<F: Adjunction>(adj: &F, v: &Comodule, name: &str) -> Result<LinMap> {
    adj.tensor_witness(v)?
        .ok_or_else(|| Error::Unsupported(format!("no witness T(V) ≅ V⊗T(I) for {name}")))
}

/// `(T(I), μ_I∘w_{T(I)}, η_I)`, with `μ = id⊗μ_I` and `η = id⊗η_I` checked on
/// every sample.
pub fn unit_object_algebra<F: Adjunction>(adj: &F, monad: &MonadSample) -> Result<UnitObjectAlgebra> {
    let unit = monad.unit_object();
    let ti = unit.t.clone();
    let field = ti.field();
    let w_ti = witness(adj, &ti, "T(I)")?;
    let mult = unit.mu.compose(&w_ti);
    let labels = ti.labels().to_vec();
    let algebra = AlgebraData::new(labels.clone(), mult.clone(), unit.eta.clone())?;

    let mut r = CheckReport::new();
    r.absorb("", algebra.check());
    let ti2 = ti.tensor(&ti, adj.hopf())?;
    r.push("multiplication colinear", ti2.is_colinear(&ti, &mult), None);
    r.push("unit colinear", unit.object.is_colinear(&ti, &unit.eta), None);

    let id_ti = LinMap::identity(field, ti.dim());
    let mut witnesses = Vec::with_capacity(monad.objects.len());
    for obj in &monad.objects {
        let name = &obj.name;
        let w = witness(adj, &obj.object, name)?;
        let dom = obj.object.tensor(&ti, adj.hopf())?;
        r.push(format!("witness invertible on {name}"), w.is_invertible(), Some(name.clone()));
        r.push(format!("witness colinear on {name}"), dom.is_colinear(&obj.t, &w), Some(name.clone()));
        let w_t = witness(adj, &obj.t, name)?;
        let idv = LinMap::identity(field, obj.object.dim());
        let lhs = obj.mu.compose(&w_t).compose(&w.kron(&id_ti));
        let rhs = w.compose(&idv.kron(&mult));
        r.compare(&format!("μ = id⊗μ_I on {name}"), &lhs, &rhs, &|j| {
            tensor_label(j, &[obj.object.labels(), &labels, &labels])
        });
        let rhs_eta = w.compose(&idv.kron(&unit.eta));
        r.compare(&format!("η = id⊗η_I on {name}"), &obj.eta, &rhs_eta, &|j| {
            obj.object.labels()[j].clone()
        });
        witnesses.push((name.clone(), w));
    }
    if let Some(c) = r.checks.iter().find(|c| !c.holds && c.name.contains(" on ")) {
        return Err(Error::violation(format!(
            "module-functor hypothesis violated: `{}` at {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        )));
    }
    Ok(UnitObjectAlgebra {
        algebra,
        t_unit: ti,
        witnesses,
        certificates: r,
    })
}

/// A `T`-algebra `(N, λ : T(N) → N)`.
#[derive(Clone, Debug)]
pub struct TAlgebra {
    pub name: String,
    pub carrier: Comodule,
    pub lambda: LinMap,
}

/// A `T(I)`-module in `ℳᴴ`: a comodule with a colinear action `N⊗T(I) → N`.
#[derive(Clone, Debug)]
pub struct ModuleInCategory {
    pub name: String,
    pub carrier: Comodule,
    pub action: LinMap,
}

impl ModuleInCategory {
    pub fn from_relhopf(name: &str, m: &RelHopfModule) -> ModuleInCategory {
        ModuleInCategory {
            name: name.into(),
            carrier: m.comodule().clone(),
            action: m.module().action().clone(),
        }
    }
}

/// The free `T`-algebras `(T(V), μ_V)` of a monad sample.
pub fn free_talgebras(monad: &MonadSample) -> Vec<TAlgebra> {
    monad
        .objects
        .iter()
        .map(|o| TAlgebra {
            name: format!("T({})", o.name),
            carrier: o.t.clone(),
            lambda: o.mu.clone(),
        })
        .collect()
}

/// The `T`-algebra laws for `(N, λ)`.
pub fn talgebra_report<F: Adjunction>(adj: &F, alg: &TAlgebra) -> Result<CheckReport> {
    let n = &alg.carrier;
    let tn = t_object(adj, n)?;
    let mut r = CheckReport::new();
    r.push("structure map colinear", tn.is_colinear(n, &alg.lambda), None);
    let id = LinMap::identity(n.field(), n.dim());
    r.compare("unit square", &alg.lambda.compose(&adj.unit(n)?), &id, &|j| n.labels()[j].clone());
    let t_lambda = t_map(adj, &tn, n, &alg.lambda)?;
    let lhs = alg.lambda.compose(&t_lambda);
    let rhs = alg.lambda.compose(&t_mult(adj, n)?);
    r.compare("multiplication square", &lhs, &rhs, &|j| format!("basis {j} of TT(N)"));
    Ok(r)
}

fn module_report(alg: &UnitObjectAlgebra, hopf: &HopfAlgebra, n: &Comodule, action: &LinMap) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let module = Module::unlabelled(Side::Right, alg.algebra.clone(), action.clone())?;
    r.absorb("", module.check());
    let dom = n.tensor(&alg.t_unit, hopf)?;
    r.push("action colinear", dom.is_colinear(n, action), None);
    Ok(r)
}

/// One direction of the comparison for one object.
#[derive(Clone, Debug)]
pub struct ComparisonEntry {
    pub name: String,
    pub direction: String,
    pub certificates: CheckReport,
    pub round_trip: bool,
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub entries: Vec<ComparisonEntry>,
    /// Hypotheses taken on trust rather than checked.
    pub assumed: Vec<String>,
}

impl Comparison {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.round_trip && e.certificates.all_hold())
    }
}

/// Rewrites `T`-algebras as `T(I)`-modules via `a = λ∘w_N` and back via
/// `λ = a∘w_N⁻¹`, checking both sides' axioms and that the round trips are
/// the identity.
pub fn compare_talgebras_to_modules<F: Adjunction>(
    adj: &F,
    alg: &UnitObjectAlgebra,
    talgebras: &[TAlgebra],
    modules: &[ModuleInCategory],
) -> Result<Comparison> {
    let mut entries = Vec::new();
    for t in talgebras {
        let w = witness(adj, &t.carrier, &t.name)?;
        let w_inv = w
            .inverse()
            .ok_or_else(|| Error::violation(format!("witness not invertible on {}", t.name)))?;
        let mut r = CheckReport::new();
        r.absorb("T-algebra ", talgebra_report(adj, t)?);
        let action = t.lambda.compose(&w);
        r.absorb("module ", module_report(alg, adj.hopf(), &t.carrier, &action)?);
        let back = action.compose(&w_inv);
        entries.push(ComparisonEntry {
            name: t.name.clone(),
            direction: "T-algebra to module".into(),
            certificates: r,
            round_trip: back == t.lambda,
        });
    }
    for m in modules {
        let w = witness(adj, &m.carrier, &m.name)?;
        let w_inv = w
            .inverse()
            .ok_or_else(|| Error::violation(format!("witness not invertible on {}", m.name)))?;
        let mut r = CheckReport::new();
        r.absorb("module ", module_report(alg, adj.hopf(), &m.carrier, &m.action)?);
        let lambda = m.action.compose(&w_inv);
        let t = TAlgebra {
            name: m.name.clone(),
            carrier: m.carrier.clone(),
            lambda,
        };
        r.absorb("T-algebra ", talgebra_report(adj, &t)?);
        entries.push(ComparisonEntry {
            name: m.name.clone(),
            direction: "module to T-algebra".into(),
            certificates: r,
            round_trip: t.lambda.compose(&w) == m.action,
        });
    }
    Ok(Comparison {
        entries,
        assumed: vec!["the right adjoint is faithful (Barr–Beck hypothesis)".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{subgroup_data, sweedler4, FiniteGroupTable};
    use crate::correspondence::{coinvariants, quotient_module_coalgebra};
    use crate::linalg::Field;

    fn regular_sample(h: &HopfAlgebra) -> Vec<(String, Comodule)> {
        vec![("H".to_string(), Comodule::regular(Side::Right, h.coalgebra()))]
    }

    #[test]
    fn identity_adjunction_gives_the_ground_field() {
        let h = sweedler4();
        let adj = IdentityAdjunction::new(&h);
        let monad = monad_from_adjunction(&adj, &regular_sample(&h)).unwrap();
        assert!(monad.certificates.all_hold());
        assert!(monad.get("H").unwrap().eta.is_identity());
        let alg = unit_object_algebra(&adj, &monad).unwrap();
        assert_eq!(alg.algebra.dim(), 1);
    }

    #[test]
    fn induction_monad_recovers_the_subalgebra() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let adj = InductionAdjunction::new(&a);
        let monad = monad_from_adjunction(&adj, &regular_sample(&h)).unwrap();
        assert_eq!(monad.unit_object().name, "I");
        let alg = unit_object_algebra(&adj, &monad).unwrap();
        assert_eq!(alg.algebra.mult(), a.algebra().mult());
        assert!(alg.certificates.all_hold());
        for t in free_talgebras(&monad) {
            assert!(talgebra_report(&adj, &t).unwrap().all_hold(), "{}", t.name);
        }
        let modules = vec![ModuleInCategory::from_relhopf("H", &RelHopfModule::hopf_regular(&a))];
        let cmp = compare_talgebras_to_modules(&adj, &alg, &free_talgebras(&monad), &modules).unwrap();
        assert!(cmp.all_hold());
    }

    #[test]
    fn broken_talgebra_fails_the_unit_square() {
        let h = sweedler4();
        let a = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let adj = InductionAdjunction::new(&a);
        let monad = monad_from_adjunction(&adj, &regular_sample(&h)).unwrap();
        let mut t = free_talgebras(&monad).remove(1);
        t.lambda = LinMap::zero(h.field(), t.carrier.dim(), t.lambda.cols());
        assert!(!talgebra_report(&adj, &t).unwrap().holds("unit square"));
    }

    #[test]
    fn cotensor_monad_algebra_is_the_coinvariants() {
        let s3 = FiniteGroupTable::symmetric3();
        let (_, q) = subgroup_data(Field::Rational, &s3, &[0, 3, 4]).unwrap();
        let adj = CotensorAdjunction::new(&q);
        let monad = monad_from_adjunction(&adj, &regular_sample(q.hopf())).unwrap();
        assert!(monad.certificates.all_hold());
        let alg = unit_object_algebra(&adj, &monad).unwrap();
        let a = coinvariants(&q).unwrap();
        assert_eq!(alg.algebra.dim(), a.dim());
        assert_eq!(alg.algebra.mult(), a.algebra().mult());

        let h = sweedler4();
        let b = CoidealSubalgebra::from_labels(&h, &["1", "g"]).unwrap();
        let q = quotient_module_coalgebra(&b).unwrap();
        let adj = CotensorAdjunction::new(&q);
        let i = Comodule::trivial_hopf(Side::Right, &h, 1);
        assert_eq!(adj.carrier(&adj.left(&i).unwrap()).unwrap(), *b.space());
    }
}
