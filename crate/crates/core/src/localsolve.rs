//! Local solvability of `ax² + bxy + cy² + g = 0` over every `ℤ_p` and `ℝ`.
//!
//! The `ℤ_p` decider works on the original variables `(x, y)`. It refines
//! p-adic balls `x ≡ x₀, y ≡ y₀ (mod p^k)`: on each ball the equation is
//! rewritten as a quadratic in the ball coordinates, its p-content is split
//! off, and the zeros of the primitive part mod p are inspected. A zero with
//! a unit gradient is a Hensel certificate; a zero with vanishing gradient
//! spawns a smaller ball; a ball with no zeros is dead. The search is
//! breadth-first, so the certificate returned is a shallowest one.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{factorize, is_prime, is_square, mod_inverse, sqrt_mod_prime, valuation};
use crate::error::{Error, Result};
use crate::scalar::{checked_add, checked_mul, checked_pow, checked_sub, Scalar};

/// Coefficients of `ax² + bxy + cy² + g = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadForm<T: Scalar = BigInt> {
    a: T,
    b: T,
    c: T,
    g: T,
}

impl<T: Scalar> QuadForm<T> {
    /// Validates `a ≠ 0`, `g ≠ 0`, `d = 4ac − b² ≠ 0` and `−d` not a square.
    pub fn new(a: T, b: T, c: T, g: T) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Zero("coefficient a"));
        }
        if g.is_zero() {
            return Err(Error::Zero("constant term g"));
        }
        let form = QuadForm { a, b, c, g };
        let d = form.discriminant();
        if d.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        let minus_d = -d;
        if is_square(&minus_d) {
            return Err(Error::SquareDiscriminant(minus_d.to_string()));
        }
        Ok(form)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, g: i64) -> Result<Self> {
        Self::new(T::int(a), T::int(b), T::int(c), T::int(g))
    }

    /// Same `a, b, c` with a different constant term.
    pub fn with_g(&self, g: T) -> Result<Self> {
        Self::new(self.a.clone(), self.b.clone(), self.c.clone(), g)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn g(&self) -> &T {
        &self.g
    }

    /// `d = 4ac − b²`.
    pub fn discriminant(&self) -> T {
        T::int(4) * self.a.clone() * self.c.clone() - self.b.clone() * self.b.clone()
    }

    pub fn is_definite(&self) -> bool {
        self.discriminant().is_positive()
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.a.clone() * x.clone() * x.clone()
            + self.b.clone() * x.clone() * y.clone()
            + self.c.clone() * y.clone() * y.clone()
            + self.g.clone()
    }

    /// `(2ax + by, bx + 2cy)`.
    pub fn gradient(&self, x: &T, y: &T) -> (T, T) {
        let two = T::int(2);
        (
            two.clone() * self.a.clone() * x.clone() + self.b.clone() * y.clone(),
            self.b.clone() * x.clone() + two * self.c.clone() * y.clone(),
        )
    }

    pub fn reduce(&self) -> PellForm<T> {
        reduce(self)
    }

    pub fn to_big(&self) -> QuadForm<BigInt> {
        QuadForm { a: self.a.big(), b: self.b.big(), c: self.c.big(), g: self.g.big() }
    }
}

/// Writes `c·var` as a signed term; `first` suppresses the leading ` + `.
pub(crate) fn write_term<T: Scalar>(f: &mut fmt::Formatter<'_>, c: &T, var: &str, first: bool) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    let sign = match (first, c.is_negative()) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    let mag = c.abs();
    if mag.is_one() && !var.is_empty() {
        write!(f, "{sign}{var}")
    } else {
        write!(f, "{sign}{mag}{var}")
    }
}

impl<T: Scalar> fmt::Display for QuadForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, &self.a, "x²", true)?;
        write_term(f, &self.b, "xy", false)?;
        write_term(f, &self.c, "y²", false)?;
        write_term(f, &self.g, "", false)?;
        write!(f, " = 0")
    }
}

impl<T: Scalar> fmt::Display for PellForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x̃²")?;
        write_term(f, &self.d_hat, "ỹ²", false)?;
        write!(f, " = {}, x̃ = ", self.n_hat)?;
        write_term(f, &self.divisor, "x", true)?;
        write_term(f, &self.back_coeff, "y", false)?;
        write!(f, ", ỹ = y")
    }
}

/// The norm-form equation `x̃² + d̂·ỹ² = n̂` with `ỹ = y` and
/// `x̃ = divisor·x + back_coeff·y`.
///
/// An `(x̃, ỹ)` solution comes from an integral `(x, y)` exactly when
/// `x̃ ≡ back_coeff·ỹ (mod back_modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellForm<T: Scalar = BigInt> {
    pub d_hat: T,
    pub n_hat: T,
    pub back_coeff: T,
    pub back_modulus: T,
    /// `a` when `b` is even, `2a` otherwise.
    pub divisor: T,
}

impl<T: Scalar> PellForm<T> {
    pub fn forward(&self, x: &T, y: &T) -> (T, T) {
        (self.divisor.clone() * x.clone() + self.back_coeff.clone() * y.clone(), y.clone())
    }

    pub fn satisfies_congruence(&self, xt: &T, yt: &T) -> bool {
        (xt.clone() - self.back_coeff.clone() * yt.clone()).mod_floor(&self.back_modulus).is_zero()
    }

    /// Recovers `(x, y)` when the back-congruence holds.
    pub fn back_substitute(&self, xt: &T, yt: &T) -> Option<(T, T)> {
        let num = xt.clone() - self.back_coeff.clone() * yt.clone();
        let (q, r) = num.div_rem(&self.divisor);
        r.is_zero().then(|| (q, yt.clone()))
    }

    pub fn norm(&self, xt: &T, yt: &T) -> T {
        xt.clone() * xt.clone() + self.d_hat.clone() * yt.clone() * yt.clone()
    }
}

/// Rewrites the equation as `x̃² + d̂ỹ² = n̂`, cancelling the common 4 when
/// `b` is even.
pub fn reduce<T: Scalar>(form: &QuadForm<T>) -> PellForm<T> {
    let two = T::int(2);
    let four = T::int(4);
    let (a, b, c, g) = (&form.a, &form.b, &form.c, &form.g);
    if b.is_even() {
        let half = b.clone() / two;
        PellForm {
            d_hat: a.clone() * c.clone() - half.clone() * half.clone(),
            n_hat: -(a.clone() * g.clone()),
            back_coeff: half,
            back_modulus: a.abs(),
            divisor: a.clone(),
        }
    } else {
        PellForm {
            d_hat: form.discriminant(),
            n_hat: -(four * a.clone() * g.clone()),
            back_coeff: b.clone(),
            back_modulus: (two.clone() * a.clone()).abs(),
            divisor: two * a.clone(),
        }
    }
}

/// A completion of ℚ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place<T: Scalar = BigInt> {
    Prime(T),
    Infinity,
}

impl<T: Scalar> fmt::Display for Place<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "∞"),
        }
    }
}

/// Point mod `p^precision` with `f ≡ 0 (mod p^depth)`, where
/// `depth ≥ 2m + 1` and `m = min(v_p(2ax+by), v_p(bx+2cy))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HenselWitness<T: Scalar = BigInt> {
    pub x: T,
    pub y: T,
    pub precision: u32,
    pub gradient_valuation: u32,
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence<T: Scalar = BigInt> {
    Hensel(HenselWitness<T>),
    /// No `(x, y)` satisfies `f ≡ 0 (mod p^depth)`.
    Exhausted {
        depth: u32,
    },
    /// `p ∤ 2·d̂·n̂`: the conic is smooth mod p and has an affine point.
    SmoothReduction,
    Real(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalVerdict<T: Scalar = BigInt> {
    pub place: Place<T>,
    pub solvable: bool,
    pub evidence: Evidence<T>,
}

impl<T: Scalar> fmt::Display for LocalVerdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.solvable { "solvable" } else { "UNSOLVABLE" };
        write!(f, "p = {}: {status}", self.place)?;
        match &self.evidence {
            Evidence::Hensel(w) => write!(
                f,
                " (witness ({}, {}) mod p^{}, gradient valuation {}, f ≡ 0 mod p^{})",
                w.x, w.y, w.precision, w.gradient_valuation, w.depth
            ),
            Evidence::Exhausted { depth } => write!(f, " (no zero mod p^{depth})"),
            Evidence::SmoothReduction => write!(f, " (smooth reduction)"),
            Evidence::Real(reason) => write!(f, " ({reason})"),
        }
    }
}

/// Primitive part of the equation restricted to a ball:
/// `A s² + B st + C t² + D s + E t + F`.
#[derive(Debug, Clone)]
struct BallQuad<T> {
    coeffs: [T; 6],
}

impl<T: Scalar> BallQuad<T> {
    fn eval(&self, s: &T, t: &T) -> Result<T> {
        let [a, b, c, d, e, f] = &self.coeffs;
        let terms = [
            checked_mul(a, &checked_mul(s, s)?)?,
            checked_mul(b, &checked_mul(s, t)?)?,
            checked_mul(c, &checked_mul(t, t)?)?,
            checked_mul(d, s)?,
            checked_mul(e, t)?,
        ];
        terms.iter().try_fold(f.clone(), |acc, x| checked_add(&acc, x))
    }

    fn partials(&self, s: &T, t: &T) -> Result<(T, T)> {
        let [a, b, c, d, e, _] = &self.coeffs;
        let two = T::int(2);
        let ds = checked_add(&checked_add(&checked_mul(&checked_mul(&two, a)?, s)?, &checked_mul(b, t)?)?, d)?;
        let dt = checked_add(&checked_add(&checked_mul(b, s)?, &checked_mul(&checked_mul(&two, c)?, t)?)?, e)?;
        Ok((ds, dt))
    }

    // Splits off the p-content; returns the exponent removed.
    fn normalize(&mut self, p: &T) -> u32 {
        let e = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| valuation(c, p).expect("nonzero"))
            .min()
            .expect("A is never zero");
        for c in self.coeffs.iter_mut() {
            for _ in 0..e {
                *c = c.clone() / p.clone();
            }
        }
        e
    }

    /// Sub-ball `s = s₀ + p·u`, `t = t₀ + p·v`.
    fn recentre(&self, s0: &T, t0: &T, p: &T) -> Result<Self> {
        let p2 = checked_mul(p, p)?;
        let (ds, dt) = self.partials(s0, t0)?;
        let [a, b, c, ..] = &self.coeffs;
        Ok(BallQuad {
            coeffs: [
                checked_mul(a, &p2)?,
                checked_mul(b, &p2)?,
                checked_mul(c, &p2)?,
                checked_mul(&ds, p)?,
                checked_mul(&dt, p)?,
                self.eval(s0, t0)?,
            ],
        })
    }

    // Zeros mod p, sorted.
    fn zeros_mod_p(&self, p: &T) -> Vec<(T, T)> {
        let r: Vec<T> = self.coeffs.iter().map(|c| c.mod_floor(p)).collect();
        let reduced =
            BallQuad { coeffs: [r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone(), r[4].clone(), r[5].clone()] };
        let mut zeros = Vec::new();
        let small = p.to_u64().is_some_and(|v| v < 64);
        if small {
            let mut s = T::zero();
            while s < *p {
                let mut t = T::zero();
                while t < *p {
                    // reduced coefficients and s, t < 64: no overflow possible
                    if reduced.eval(&s, &t).expect("small").mod_floor(p).is_zero() {
                        zeros.push((s.clone(), t.clone()));
                    }
                    t = t + T::one();
                }
                s = s + T::one();
            }
            return zeros;
        }
        // odd p: solve the quadratic in s for each t
        let [a, b, c, d, e, f] = &reduced.coeffs;
        let m = |v: T| v.mod_floor(p);
        let two = T::int(2);
        let four = T::int(4);
        let mut t = T::zero();
        while t < *p {
            let beta = m(b.clone() * t.clone() + d.clone());
            let gamma = m(m(c.clone() * t.clone()) * t.clone() + e.clone() * t.clone() + f.clone());
            if !a.is_zero() {
                let disc = m(beta.clone() * beta.clone() - m(four.clone() * a.clone()) * gamma);
                if let Some(root) = sqrt_mod_prime(&disc, p) {
                    let inv = mod_inverse(&(two.clone() * a.clone()), p).expect("p odd, a unit");
                    let s1 = m((root.clone() - beta.clone()) * inv.clone());
                    zeros.push((s1.clone(), t.clone()));
                    if !root.is_zero() {
                        let s2 = m((-root - beta) * inv);
                        zeros.push((s2, t.clone()));
                    }
                }
            } else if !beta.is_zero() {
                let inv = mod_inverse(&beta, p).expect("p prime");
                zeros.push((m(-gamma * inv), t.clone()));
            } else if gamma.is_zero() {
                let mut s = T::zero();
                while s < *p {
                    zeros.push((s.clone(), t.clone()));
                    s = s + T::one();
                }
            }
            t = t + T::one();
        }
        zeros.sort();
        zeros
    }
}

struct Ball<T> {
    x0: T,
    y0: T,
    radius: u32,
    scale: T,
    content: u32,
    quad: BallQuad<T>,
}

/// Depth cap `v_p(16·|a·d·g|) + 8`. Reaching it means an invariant broke.
pub fn depth_cap<T: Scalar>(form: &QuadForm<T>, p: &T) -> Result<u32> {
    let d = form.discriminant();
    Ok(valuation(&T::int(16), p)? + valuation(&form.a, p)? + valuation(&d, p)? + valuation(&form.g, p)? + 8)
}

/// Decides whether the equation has a solution in `ℤ_p²`.
pub fn solvable_in_zp<T: Scalar>(form: &QuadForm<T>, p: &T) -> Result<LocalVerdict<T>> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let cap = depth_cap(form, p)?;
    let mut root =
        BallQuad { coeffs: [form.a.clone(), form.b.clone(), form.c.clone(), T::zero(), T::zero(), form.g.clone()] };
    let content = root.normalize(p);
    let mut live = vec![Ball { x0: T::zero(), y0: T::zero(), radius: 0, scale: T::one(), content, quad: root }];
    let mut deepest = 0u32;
    while !live.is_empty() {
        let mut next = Vec::new();
        for ball in &live {
            deepest = deepest.max(ball.content + 1);
            for (s, t) in ball.quad.zeros_mod_p(p) {
                let (ds, dt) = ball.quad.partials(&s, &t)?;
                if !ds.mod_floor(p).is_zero() || !dt.mod_floor(p).is_zero() {
                    let witness = certify(ball, &s, &t, p)?;
                    return Ok(LocalVerdict {
                        place: Place::Prime(p.clone()),
                        solvable: true,
                        evidence: Evidence::Hensel(witness),
                    });
                }
                let mut quad = ball.quad.recentre(&s, &t, p)?;
                let content = ball.content + quad.normalize(p);
                if content > cap {
                    return Err(Error::DepthCapExceeded { p: p.to_string(), cap });
                }
                next.push(Ball {
                    x0: checked_add(&ball.x0, &checked_mul(&ball.scale, &s)?)?,
                    y0: checked_add(&ball.y0, &checked_mul(&ball.scale, &t)?)?,
                    radius: ball.radius + 1,
                    scale: checked_mul(&ball.scale, p)?,
                    content,
                    quad,
                });
            }
        }
        live = next;
    }
    Ok(LocalVerdict {
        place: Place::Prime(p.clone()),
        solvable: false,
        evidence: Evidence::Exhausted { depth: deepest },
    })
}

// Newton-lifts a nonsingular zero of the ball's primitive part far enough
// that the point itself satisfies f ≡ 0 mod p^(2m+1).
fn certify<T: Scalar>(ball: &Ball<T>, s: &T, t: &T, p: &T) -> Result<HenselWitness<T>> {
    let m = ball.content - ball.radius;
    let lift = (ball.content + 1).max(2 * m + 1) - ball.content;
    let modulus = checked_pow(p, lift)?;
    let (mut s, mut t) = (s.clone(), t.clone());
    let (ds, _) = ball.quad.partials(&s, &t)?;
    let along_s = !ds.mod_floor(p).is_zero();
    for _ in 0..=lift {
        let val = ball.quad.eval(&s, &t)?.mod_floor(&modulus);
        if val.is_zero() {
            break;
        }
        let (ds, dt) = ball.quad.partials(&s, &t)?;
        let slope = if along_s { ds } else { dt };
        let inv = mod_inverse(&slope, &modulus).expect("unit partial derivative");
        let step = checked_mul(&val, &inv)?.mod_floor(&modulus);
        if along_s {
            s = checked_sub(&s, &step)?.mod_floor(&modulus);
        } else {
            t = checked_sub(&t, &step)?.mod_floor(&modulus);
        }
    }
    debug_assert!(ball.quad.eval(&s, &t)?.mod_floor(&modulus).is_zero());
    let precision = ball.radius + lift;
    let outer = checked_pow(p, precision)?;
    let x = checked_add(&ball.x0, &checked_mul(&ball.scale, &s)?)?.mod_floor(&outer);
    let y = checked_add(&ball.y0, &checked_mul(&ball.scale, &t)?)?.mod_floor(&outer);
    Ok(HenselWitness { x, y, precision, gradient_valuation: m, depth: ball.content + lift })
}

/// Real solvability: a definite form only takes the sign of `a`.
pub fn solvable_in_r<T: Scalar>(form: &QuadForm<T>) -> LocalVerdict<T> {
    let (solvable, reason) = if form.discriminant().is_positive() {
        if (form.a.clone() * form.g.clone()).is_negative() {
            (true, "definite form, a·g < 0")
        } else {
            (false, "definite form cannot reach -g")
        }
    } else {
        (true, "indefinite form")
    };
    LocalVerdict { place: Place::Infinity, solvable, evidence: Evidence::Real(reason) }
}

/// Verdicts at every place where solvability is not automatic.
#[derive(Debug, Clone)]
pub struct LocalProfile<T: Scalar = BigInt> {
    entries: BTreeMap<Place<T>, LocalVerdict<T>>,
}

impl<T: Scalar> LocalProfile<T> {
    pub fn solvable(&self) -> bool {
        self.entries.values().all(|v| v.solvable)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Place<T>> {
        self.entries.values().filter(|v| !v.solvable).map(|v| &v.place)
    }

    /// Recorded verdict, or the smooth-reduction verdict for primes not
    /// dividing `2·d̂·n̂`.
    pub fn verdict_at(&self, place: &Place<T>) -> LocalVerdict<T> {
        self.entries.get(place).cloned().unwrap_or_else(|| LocalVerdict {
            place: place.clone(),
            solvable: true,
            evidence: Evidence::SmoothReduction,
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = &LocalVerdict<T>> {
        self.entries.values()
    }
}

/// Runs the `ℤ_p` decider for every `p | 2·d̂·n̂` and the real test.
pub fn local_profile<T: Scalar>(form: &QuadForm<T>) -> Result<LocalProfile<T>> {
    let pell = reduce(form);
    let mut primes = std::collections::BTreeSet::new();
    primes.insert(BigInt::from(2));
    for n in [&pell.d_hat, &form.a, &form.g] {
        primes.extend(factorize(n)?.primes().cloned());
    }
    let mut entries = BTreeMap::new();
    for p in primes {
        let p = T::from_bigint(&p).ok_or(Error::Overflow)?;
        let verdict = solvable_in_zp(form, &p)?;
        entries.insert(verdict.place.clone(), verdict);
    }
    entries.insert(Place::Infinity, solvable_in_r(form));
    Ok(LocalProfile { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64, g: i64) -> QuadForm<i128> {
        QuadForm::from_i64(a, b, c, g).unwrap()
    }

    fn check_witness(f: &QuadForm<i128>, p: i128, w: &HenselWitness<i128>) {
        let (fx, fy) = f.gradient(&w.x, &w.y);
        let vx = if fx == 0 { u32::MAX } else { valuation(&fx, &p).unwrap() };
        let vy = if fy == 0 { u32::MAX } else { valuation(&fy, &p).unwrap() };
        let m = vx.min(vy);
        assert_eq!(m, w.gradient_valuation);
        assert!(w.depth > 2 * m);
        assert_eq!(f.eval(&w.x, &w.y).rem_euclid(p.pow(w.depth)), 0);
    }

    #[test]
    fn validation() {
        assert_eq!(QuadForm::<i64>::from_i64(1, 2, 1, -1), Err(Error::ZeroDiscriminant));
        assert!(matches!(QuadForm::<i64>::from_i64(1, 0, -4, 1), Err(Error::SquareDiscriminant(_))));
        assert!(QuadForm::<i64>::from_i64(0, 1, 1, 1).is_err());
        assert!(QuadForm::<i64>::from_i64(1, 1, 1, 0).is_err());
    }

    #[test]
    fn reduce_examples() {
        let r = form(3, 2, 5, 7).reduce();
        assert_eq!((r.d_hat, r.n_hat), (14, -21));
        assert_eq!(r.forward(&2, &5), (11, 5));
        let r = form(5, 14, -6, 3).reduce();
        assert_eq!((r.d_hat, r.n_hat), (-79, -15));
        assert_eq!(r.forward(&1, &1), (12, 1));
        let r = form(1, 1, 1, -1).reduce();
        assert_eq!((r.d_hat, r.n_hat, r.back_modulus), (3, 4, 2));
        assert_eq!(r.forward(&1, &0), (2, 0));
    }

    #[test]
    fn reduce_round_trip() {
        let f = form(5, 14, -6, -5);
        let r = f.reduce();
        let (xt, yt) = r.forward(&1, &0);
        assert_eq!(r.norm(&xt, &yt), r.n_hat);
        assert!(r.satisfies_congruence(&xt, &yt));
        assert_eq!(r.back_substitute(&xt, &yt), Some((1, 0)));
    }

    #[test]
    fn zp_examples() {
        let f = form(3, 2, 5, -3);
        let v = solvable_in_zp(&f, &7).unwrap();
        assert!(v.solvable);
        let Evidence::Hensel(w) = &v.evidence else { panic!() };
        check_witness(&f, 7, w);

        let v = solvable_in_zp(&form(1, 0, 14, -11), &11).unwrap();
        assert!(!v.solvable);
        let v = solvable_in_zp(&form(5, 14, -6, 5), &79).unwrap();
        assert!(!v.solvable);
    }

    #[test]
    fn zp_needs_deep_certificate() {
        // x² + y² = 2·4^k needs a 2-adic witness with gradient valuation k+1
        let f = form(1, 0, 1, -32);
        let v = solvable_in_zp(&f, &2).unwrap();
        assert!(v.solvable);
        let Evidence::Hensel(w) = &v.evidence else { panic!() };
        check_witness(&f, 2, w);
        assert!(w.gradient_valuation >= 2);
        // x² + y² = 3·4: no 2-adic solution
        assert!(!solvable_in_zp(&form(1, 0, 1, -12), &2).unwrap().solvable);
    }

    #[test]
    fn zp_large_prime_uses_quadratic_solver() {
        // 10007 = 3 mod 4 is inert in Q(i): x² + y² = 10007 fails, 10007² works
        assert!(!solvable_in_zp(&form(1, 0, 1, -10007), &10007).unwrap().solvable);
        let f = form(1, 0, 1, -10007 * 10007);
        let v = solvable_in_zp(&f, &10007).unwrap();
        let Evidence::Hensel(w) = &v.evidence else { panic!() };
        check_witness(&f, 10007, w);
    }

    #[test]
    fn real_place() {
        assert!(!solvable_in_r(&form(3, 2, 5, 5)).solvable);
        assert!(solvable_in_r(&form(3, 2, 5, -3)).solvable);
        assert!(solvable_in_r(&form(5, 14, -6, 7)).solvable);
    }

    #[test]
    fn profiles() {
        assert!(local_profile(&form(3, 2, 5, -3)).unwrap().solvable());
        // also fails at 11, which is inert with v_11(n) = 1
        let p = local_profile(&form(3, 2, 5, 11)).unwrap();
        assert!(!p.verdict_at(&Place::Infinity).solvable);
        assert!(!p.verdict_at(&Place::Prime(11)).solvable);
        let p = local_profile(&form(3, 2, 5, -11)).unwrap();
        assert_eq!(p.failures().cloned().collect::<Vec<_>>(), vec![Place::Prime(7), Place::Prime(11)]);
        assert_eq!(p.verdict_at(&Place::Prime(101)).evidence, Evidence::SmoothReduction);
    }

    #[test]
    fn bigint_matches_i128() {
        let small = form(5, 14, -6, -237);
        let big = small.to_big();
        for p in [2i128, 3, 5, 79] {
            let a = solvable_in_zp(&small, &p).unwrap().solvable;
            let b = solvable_in_zp(&big, &BigInt::from(p)).unwrap().solvable;
            assert_eq!(a, b, "p = {p}");
        }
    }
}
