use crate::cert::{tensor_label, CheckReport};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{LinMap, Scalar, SVec};
use crate::rep::{Module, Side};

use super::HopfAlgebra;

/// A bialgebra pairing `⟨·,·⟩ : U ⊗ H → k`; `form` is `1 × dim_U·dim_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    u: HopfAlgebra,
    h: HopfAlgebra,
    form: LinMap,
}

impl Pairing {
    /// Validates the pairing laws; incompatible forms are rejected.
    pub fn new(u: HopfAlgebra, h: HopfAlgebra, form: LinMap) -> Result<Pairing> {
        ensure_dim("pairing rows", 1, form.rows())?;
        ensure_dim("pairing columns", u.dim() * h.dim(), form.cols())?;
        let p = Pairing { u, h, form };
        let report = p.check();
        if let Some(c) = report.first_failure() {
            return Err(Error::violation(format!(
                "pairing law `{}` fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(p)
    }

    /// `H*` paired with `H` by evaluation.
    pub fn canonical(h: &HopfAlgebra) -> Pairing {
        let d = h.dim();
        let f = h.field();
        let form = LinMap::from_entries(f, 1, d * d, (0..d).map(|i| (0, i * d + i, f.one())))
            .expect("diagonal entries in range");
        Pairing {
            u: h.dual(),
            h: h.clone(),
            form,
        }
    }

    /// `⟨z, h⟩ = ε_U(z) ε_H(h)`.
    pub fn trivial(u: &HopfAlgebra, h: &HopfAlgebra) -> Pairing {
        Pairing {
            form: u.counit().kron(h.counit()),
            u: u.clone(),
            h: h.clone(),
        }
    }

    pub fn u(&self) -> &HopfAlgebra {
        &self.u
    }

    pub fn h(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn form(&self) -> &LinMap {
        &self.form
    }

    pub fn value(&self, z: &SVec, h: &SVec) -> Scalar {
        self.form
            .apply(&z.tensor(h, self.h.dim()))
            .coeff(self.h.field(), 0)
    }

    pub fn check(&self) -> CheckReport {
        let f = self.h.field();
        let (du, dh) = (self.u.dim(), self.h.dim());
        let (iu, ih) = (LinMap::identity(f, du), LinMap::identity(f, dh));
        let (lu, lh) = (self.u.labels(), self.h.labels());
        let ff = self.form.kron(&self.form);
        let mut r = CheckReport::new();

        // ⟨uv, h⟩ = ⟨u, h₁⟩⟨v, h₂⟩
        let lhs = self.form.compose(&self.u.mult().kron(&ih));
        let rhs = ff
            .compose(&LinMap::permute_legs(f, &[du, du, dh, dh], &[0, 2, 1, 3]))
            .compose(&iu.kron(&iu).kron(self.h.comult()));
        r.compare("product against coproduct", &lhs, &rhs, &|j| {
            tensor_label(j, &[lu, lu, lh])
        });

        // ⟨u, hg⟩ = ⟨u₁, h⟩⟨u₂, g⟩
        let lhs = self.form.compose(&iu.kron(self.h.mult()));
        let rhs = ff
            .compose(&LinMap::permute_legs(f, &[du, du, dh, dh], &[0, 2, 1, 3]))
            .compose(&self.u.comult().kron(&ih).kron(&ih));
        r.compare("coproduct against product", &lhs, &rhs, &|j| {
            tensor_label(j, &[lu, lh, lh])
        });

        r.compare(
            "unit of U",
            &self.form.compose(&self.u.unit().kron(&ih)),
            self.h.counit(),
            &|j| lh[j].clone(),
        );
        r.compare(
            "unit of H",
            &self.form.compose(&iu.kron(self.h.unit())),
            self.u.counit(),
            &|j| lu[j].clone(),
        );
        r
    }

    /// The hit action of `U` on `H`.
    ///
    /// Right: `h ↼ z = ⟨z, h₁⟩ h₂`. Left: `z ⇀ h = h₁ ⟨z, h₂⟩`.
    pub fn hit_action(&self, side: Side) -> Result<Module> {
        let f = self.h.field();
        let (du, dh) = (self.u.dim(), self.h.dim());
        let ih = LinMap::identity(f, dh);
        let iu = LinMap::identity(f, du);
        let action = match side {
            // H⊗U → H⊗H⊗U → U⊗H⊗H → H
            Side::Right => self
                .form
                .kron(&ih)
                .compose(&LinMap::permute_legs(f, &[dh, dh, du], &[2, 0, 1]))
                .compose(&self.h.comult().kron(&iu)),
            // U⊗H → U⊗H⊗H → H⊗U⊗H → H
            Side::Left => ih
                .kron(&self.form)
                .compose(&LinMap::permute_legs(f, &[du, dh, dh], &[1, 0, 2]))
                .compose(&iu.kron(self.h.comult())),
        };
        let m = Module::new(side, self.u.algebra().clone(), action, self.h.labels().to_vec())?;
        let report = m.check();
        if let Some(c) = report.first_failure() {
            return Err(Error::violation(format!(
                "hit action is not a module: `{}` fails at {}",
                c.name,
                c.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, group_algebra, sweedler4, FiniteGroupTable};
    use crate::linalg::Field;

    #[test]
    fn canonical_pairings_hold() {
        for h in [sweedler4(), group_algebra(Field::Rational, &FiniteGroupTable::symmetric3())] {
            let p = Pairing::canonical(&h);
            assert!(p.check().all_hold());
            for side in [Side::Left, Side::Right] {
                assert!(p.hit_action(side).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn trivial_pairing_acts_by_counit() {
        let h = sweedler4();
        let u = group_algebra(Field::Rational, &FiniteGroupTable::cyclic(2));
        let p = Pairing::trivial(&u, &h);
        assert!(p.check().all_hold());
        let m = p.hit_action(Side::Right).unwrap();
        for z in 0..u.dim() {
            assert!(m.act_by(z).is_identity());
        }
    }

    #[test]
    fn right_hit_of_delta_functions_projects() {
        let c2 = FiniteGroupTable::cyclic(2);
        let h = group_algebra(Field::Rational, &c2);
        let p = Pairing::new(function_algebra(Field::Rational, &c2), h.clone(), Pairing::canonical(&h).form().clone())
            .unwrap();
        let m = p.hit_action(Side::Right).unwrap();
        // g ↼ δ_a = ⟨δ_a, g⟩ g
        for a in 0..2 {
            for g in 0..2 {
                let expect = if a == g { h.basis(g) } else { SVec::new() };
                assert_eq!(m.act_by(a).apply(&h.basis(g)), expect);
            }
        }
    }

    #[test]
    fn perturbed_form_is_rejected() {
        let h = sweedler4();
        let f = h.field();
        let form = Pairing::canonical(&h).form().add(
            &LinMap::from_entries(f, 1, 16, [(0, 1, f.one())]).unwrap(),
        );
        assert!(matches!(Pairing::new(h.dual(), h, form), Err(Error::Violation(_))));
    }
}
