//! Univariate polynomials over the runtime field and their factorisation.
//!
//! Only the set of distinct monic irreducible factors is ever needed (the
//! module-decomposition code uses them to build kernels `ker p(θ)`), so
//! multiplicities are discarded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{is_prime, Field, Scalar};
use super::linmap::LinMap;
use super::solve::kernel_of;
use super::vector::SVec;

/// Polynomial with coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// `x`
    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let lead_inv = d.leading().expect("division by zero polynomial").inv().unwrap();
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| &self.field.from_i64(i as i64) * c)
                .collect(),
        )
    }

    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(θ)` for a square matrix θ.
    pub fn eval_matrix(&self, theta: &LinMap) -> LinMap {
        let n = theta.rows();
        let mut acc = LinMap::zero(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = theta.compose(&acc).add(&LinMap::identity(self.field, n).scale(c));
        }
        acc
    }
}

/// Minimal polynomial of a square matrix, by a Krylov search over its powers.
pub fn minimal_polynomial(theta: &LinMap) -> Poly {
    let field = theta.field();
    let n = theta.rows();
    let mut powers = vec![LinMap::identity(field, n)];
    loop {
        let next = theta.compose(powers.last().unwrap());
        let cols: Vec<SVec> = powers.iter().map(super::solve::vectorize).collect();
        let a = LinMap::from_columns(field, n * n, cols);
        if let Some(x) = super::solve::solve_affine(&a, &super::solve::vectorize(&next)) {
            let mut coeffs: Vec<Scalar> = (0..powers.len()).map(|i| -&x.coeff(field, i)).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(next);
    }
}

/// Distinct monic irreducible factors, sorted by degree then coefficients.
pub fn irreducible_factors(f: &Poly) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    collect_factors(&f.monic(), &mut out);
    out.sort_by(|a, b| {
        a.deg().cmp(&b.deg()).then_with(|| {
            let ka: Vec<_> = a.coeffs.iter().map(Scalar::sort_key).collect();
            let kb: Vec<_> = b.coeffs.iter().map(Scalar::sort_key).collect();
            ka.cmp(&kb)
        })
    });
    out.dedup();
    out
}

fn collect_factors(f: &Poly, out: &mut Vec<Poly>) {
    if f.deg() == 0 {
        return;
    }
    let df = f.derivative();
    if df.is_zero() {
        // char p and f = h(x^p) = h(x)^p over 𝔽_p
        let p = f.field.characteristic() as usize;
        let h = Poly::new(f.field, f.coeffs.iter().step_by(p).cloned().collect());
        collect_factors(&h, out);
        return;
    }
    let g = f.gcd(&df);
    let squarefree = f.divrem(&g).0.monic();
    let parts = match f.field {
        Field::Rational => factor_squarefree_rational(&squarefree),
        Field::Prime(_) => factor_squarefree_mod_p(&squarefree),
    };
    for p in parts {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    if g.deg() > 0 {
        collect_factors(&g, out);
    }
}

/// Berlekamp factorisation of a monic squarefree polynomial over 𝔽_p.
fn factor_squarefree_mod_p(f: &Poly) -> Vec<Poly> {
    let field = f.field;
    let p = field.characteristic();
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    // columns: x^{p·i} mod f − x^i
    let xp = Poly::x(field).pow_mod(p as u128, f);
    let mut cur = Poly::one(field);
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = SVec::from_dense(&(0..n).map(|k| cur.coeff(k)).collect::<Vec<_>>());
        c.add_term(i, &-&field.one());
        cols.push(c);
        cur = cur.mul(&xp).rem(f);
    }
    let berlekamp = kernel_of(&LinMap::from_columns(field, n, cols));
    let r = berlekamp.dim();
    if r == 1 {
        return vec![f.clone()];
    }
    let to_poly = |v: &SVec| Poly::new(field, v.to_dense(field, n));
    let mut factors = vec![f.clone()];
    let basis: Vec<Poly> = berlekamp.basis().iter().map(to_poly).filter(|q| q.deg() > 0).collect();
    if p <= 2000 {
        for v in &basis {
            if factors.len() == r {
                break;
            }
            let mut next = Vec::new();
            for h in factors {
                let mut pending = vec![h];
                for s in 0..p {
                    let shifted = v.sub(&Poly::constant(field.from_i64(s as i64)));
                    let mut still = Vec::new();
                    for h in pending {
                        let g = h.gcd(&shifted);
                        if g.deg() > 0 && g.deg() < h.deg() {
                            let q = h.divrem(&g).0.monic();
                            still.push(g);
                            still.push(q);
                        } else {
                            still.push(h);
                        }
                    }
                    pending = still;
                }
                next.extend(pending);
            }
            factors = next;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let e = ((p - 1) / 2) as u128;
        while factors.len() < r {
            let mut v = Poly::zero(field);
            for b in &basis {
                v = v.add(&b.scale(&field.from_i64(rng.gen_range(0..p as i64))));
            }
            let mut next = Vec::new();
            for h in factors {
                if h.deg() <= 1 {
                    next.push(h);
                    continue;
                }
                let w = v.pow_mod(e, &h).sub(&Poly::one(field));
                let g = h.gcd(&w);
                if g.deg() > 0 && g.deg() < h.deg() {
                    next.push(h.divrem(&g).0.monic());
                    next.push(g);
                } else {
                    next.push(h);
                }
            }
            factors = next;
        }
    }
    factors.into_iter().map(|h| h.monic()).collect()
}

// ---- integer polynomials for the rational case ----

type ZPoly = Vec<BigInt>;

fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zmod(p: &ZPoly, m: &BigInt) -> ZPoly {
    ztrim(p.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsymmetric(p: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        p.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zcontent(p: &ZPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zprimitive(p: &ZPoly) -> ZPoly {
    let c = zcontent(p);
    if c.is_zero() {
        return p.clone();
    }
    let mut q: ZPoly = p.iter().map(|x| x / &c).collect();
    if q.last().is_some_and(|l| l.is_negative()) {
        q = q.into_iter().map(|x| -x).collect();
    }
    q
}

fn to_fp(p: &ZPoly, field: Field) -> Poly {
    let m = BigInt::from(field.characteristic());
    Poly::new(
        field,
        p.iter()
            .map(|c| field.from_i64(c.mod_floor(&m).to_i64().unwrap()))
            .collect(),
    )
}

fn from_fp(p: &Poly) -> ZPoly {
    p.coeffs
        .iter()
        .map(|c| BigInt::from(c.as_residue().unwrap()))
        .collect()
}

/// Exact division over ℤ; `None` if `d` does not divide `n`.
fn zdivide(n: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    let q = to_rational_poly(n).divrem(&to_rational_poly(d));
    if !q.1.is_zero() {
        return None;
    }
    q.0.coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.is_integer().then(|| r.to_integer())
        })
        .collect()
}

fn to_rational_poly(p: &ZPoly) -> Poly {
    Poly::new(
        Field::Rational,
        p.iter()
            .map(|c| Scalar::Q(BigRational::from_integer(c.clone())))
            .collect(),
    )
}

/// Lifts `t ≡ g·h (mod p)` with `g` monic to a factorisation modulo `p^k`.
fn hensel_lift(t: &ZPoly, g: &Poly, h: &Poly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let field = g.field;
    let (s, tt) = bezout(g, h);
    let pb = BigInt::from(p);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod = zmul(&big_g, &big_h);
        let n = t.len().max(prod.len());
        let diff: ZPoly = (0..n)
            .map(|i| {
                let a = t.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b) / &pj
            })
            .collect();
        let e = to_fp(&ztrim(diff), field);
        let sigma = tt.mul(&e);
        let (q, r) = sigma.divrem(g);
        let dh = s.mul(&e).add(&q.mul(h));
        let lift = |base: &mut ZPoly, delta: &Poly| {
            let d = from_fp(delta);
            if base.len() < d.len() {
                base.resize(d.len(), BigInt::zero());
            }
            for (i, c) in d.iter().enumerate() {
                base[i] += c * &pj;
            }
        };
        lift(&mut big_g, &r);
        lift(&mut big_h, &dh);
        pj *= &pb;
        big_g = zmod(&big_g, &pj);
        big_h = zmod(&big_h, &pj);
    }
    (big_g, big_h)
}

/// `(s, t)` with `s·a + t·b = 1` over 𝔽_p, for coprime `a`, `b`.
fn bezout(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let field = a.field;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
    let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        r0 = r1;
        r1 = r;
        let s2 = s0.sub(&q.mul(&s1));
        s0 = s1;
        s1 = s2;
        let t2 = t0.sub(&q.mul(&t1));
        t0 = t1;
        t1 = t2;
    }
    let inv = r0.leading().unwrap().inv().unwrap();
    (s0.scale(&inv), t0.scale(&inv))
}

/// Zassenhaus factorisation of a monic squarefree rational polynomial.
fn factor_squarefree_rational(f: &Poly) -> Vec<Poly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    // clear denominators
    let lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.as_rational().unwrap().denom())
    });
    let big_f: ZPoly = zprimitive(
        &f.coeffs
            .iter()
            .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    );
    let n = big_f.len() - 1;
    let lc = big_f[n].clone();

    let mut prime = 3u64;
    let field = loop {
        if is_prime(prime) && !(&lc % prime).is_zero() {
            let field = Field::Prime(prime);
            let fp = to_fp(&big_f, field);
            if fp.deg() == n && fp.gcd(&fp.derivative()).deg() == 0 {
                break field;
            }
        }
        prime += 2;
    };
    let modular: Vec<Poly> = factor_squarefree_mod_p(&to_fp(&big_f, field).monic());
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // coefficient bound for factors of lc·f
    let max_coeff = big_f.iter().map(|c| c.abs()).max().unwrap();
    let sqrt_bound = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64);
    let bound = (BigInt::one() << n) * sqrt_bound * max_coeff * lc.abs() * 2;
    let mut k = 1u32;
    let mut modulus = BigInt::from(prime);
    while modulus <= bound {
        modulus *= prime;
        k += 1;
    }

    // sequential two-factor lifting
    let mut lifted: Vec<ZPoly> = Vec::new();
    let mut target = zmod(&big_f, &modulus);
    let lc_fp = field.from_i64(lc.mod_floor(&BigInt::from(prime)).to_i64().unwrap());
    for i in 0..modular.len() - 1 {
        let g = &modular[i];
        let mut h = Poly::constant(lc_fp.clone());
        for m in &modular[i + 1..] {
            h = h.mul(m);
        }
        let (big_g, big_h) = hensel_lift(&target, g, &h, prime, k);
        lifted.push(big_g);
        target = big_h;
    }
    // the last cofactor carries the leading coefficient; make it monic mod p^k
    let lead = target.last().unwrap().clone();
    let inv = mod_inverse(&lead, &modulus);
    lifted.push(zmod(&target.iter().map(|c| c * &inv).collect(), &modulus));

    // recombination
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = big_f.clone();
    let mut found: Vec<ZPoly> = Vec::new();
    let mut d = 1;
    while 2 * d <= remaining.len() {
        let mut hit = None;
        for subset in combinations(&remaining, d) {
            let lc_cur = current.last().unwrap().clone();
            let mut g: ZPoly = vec![lc_cur];
            for &i in &subset {
                g = zmod(&zmul(&g, &lifted[i]), &modulus);
            }
            let g = zprimitive(&zsymmetric(&g, &modulus));
            if let Some(q) = zdivide(&current, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                remaining.retain(|i| !subset.contains(i));
                found.push(g);
                current = q;
            }
            None => d += 1,
        }
    }
    if current.len() > 1 {
        found.push(current);
    }
    found.iter().map(|g| to_rational_poly(g).monic()).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == k {
            out.push(stack.clone());
            return;
        }
        for i in start..items.len() {
            stack.push(items[i]);
            rec(items, k, i + 1, stack, out);
            stack.pop();
        }
    }
    rec(items, k, 0, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_i64(Field::Rational, c)
    }

    fn product(ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::one(ps[0].field()), |a, b| a.mul(b))
    }

    #[test]
    fn cyclotomic_split_over_rationals() {
        // x³ − 1 = (x − 1)(x² + x + 1)
        let f = irreducible_factors(&q(&[-1, 0, 0, 1]));
        assert_eq!(f, vec![q(&[-1, 1]), q(&[1, 1, 1])]);
    }

    #[test]
    fn x4_plus_1_is_irreducible_over_rationals() {
        // reducible modulo every prime, so recombination must reject all splits
        let f = irreducible_factors(&q(&[1, 0, 0, 0, 1]));
        assert_eq!(f, vec![q(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn product_of_quadratics_found() {
        let a = q(&[1, 0, 1]);
        let b = q(&[2, 0, 1]);
        let f = irreducible_factors(&a.mul(&b));
        assert_eq!(f, vec![a, b]);
    }

    #[test]
    fn repeated_and_non_monic_factors() {
        // (2x − 1)²(x + 3)
        let f = q(&[-1, 2]).mul(&q(&[-1, 2])).mul(&q(&[3, 1]));
        let fs = irreducible_factors(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&q(&[-1, 2]).monic()));
        assert!(fs.contains(&q(&[3, 1])));
    }

    #[test]
    fn berlekamp_mod_seven() {
        let field = Field::Prime(7);
        // x³ − 1 splits completely over 𝔽₇ (7 ≡ 1 mod 3)
        let f = Poly::from_i64(field, &[-1, 0, 0, 1]);
        let fs = irreducible_factors(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), f);
        // x² + 1 is irreducible over 𝔽₇
        let g = Poly::from_i64(field, &[1, 0, 1]);
        assert_eq!(irreducible_factors(&g), vec![g]);
    }

    #[test]
    fn pth_power_handled() {
        let field = Field::Prime(3);
        // (x + 1)³ = x³ + 1 over 𝔽₃, derivative vanishes
        let f = Poly::from_i64(field, &[1, 0, 0, 1]);
        assert_eq!(irreducible_factors(&f), vec![Poly::from_i64(field, &[1, 1])]);
    }

    #[test]
    fn large_prime_random_splitting() {
        let field = Field::Prime(10007);
        let f = Poly::from_i64(field, &[-1, 1])
            .mul(&Poly::from_i64(field, &[-2, 1]))
            .mul(&Poly::from_i64(field, &[5, 0, 1]));
        let fs = irreducible_factors(&f);
        assert_eq!(product(&fs), f.monic());
    }

    #[test]
    fn minimal_polynomial_of_rotation() {
        let field = Field::Rational;
        let r = LinMap::from_i64_rows(field, &[&[0, -1], &[1, 0]]);
        assert_eq!(minimal_polynomial(&r), q(&[1, 0, 1]));
        let id = LinMap::identity(field, 3);
        assert_eq!(minimal_polynomial(&id), q(&[-1, 1]));
    }
}
