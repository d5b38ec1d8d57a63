//! Continued fractions of `√D`, Pell equations and the generalized equation
//! `x² − Dy² = N`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, is_square, jacobi};
use crate::error::{Error, Result};
use crate::Int;

/// `√D = [a0; period, period, …]` with the minimal period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub a0: Int,
    pub period: Vec<Int>,
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; ", self.a0)?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Positive solution of `t² − D·u² = rhs`, minimal in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub d: Int,
    pub t: Int,
    pub u: Int,
    pub rhs: i8,
}

impl PellSolution {
    /// `(x + y√D)(t + u√D)`.
    pub fn apply(&self, x: &Int, y: &Int) -> (Int, Int) {
        (&self.t * x + &self.d * &self.u * y, &self.u * x + &self.t * y)
    }

    /// `(x + y√D)(t − u√D)`; the inverse action when `rhs = 1`.
    pub fn apply_conjugate(&self, x: &Int, y: &Int) -> (Int, Int) {
        (&self.t * x - &self.d * &self.u * y, &self.t * y - &self.u * x)
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t, self.u)
    }
}

fn check_nonsquare(d: &Int) -> Result<()> {
    if *d < Int::from(2) {
        return Err(Error::domain(format!("D = {d} must be at least 2")));
    }
    if is_square(d) {
        return Err(Error::domain(format!("D = {d} is a perfect square")));
    }
    Ok(())
}

/// Expansion of `√D` by the `(P, Q)` recurrence.
pub fn cf_sqrt(d: &Int) -> Result<ContinuedFraction> {
    check_nonsquare(d)?;
    let a0 = d.sqrt();
    let two_a0 = &a0 * 2u32;
    let mut m = Int::zero();
    let mut q = Int::one();
    let mut a = a0.clone();
    let mut period = Vec::new();
    while a != two_a0 {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        period.push(a.clone());
    }
    Ok(ContinuedFraction { a0, period })
}

// Convergent h/k after consuming `count` partial quotients past a0.
fn convergent(cf: &ContinuedFraction, count: usize) -> (Int, Int) {
    let (mut h_prev, mut h) = (Int::one(), cf.a0.clone());
    let (mut k_prev, mut k) = (Int::zero(), Int::one());
    for a in cf.period.iter().cycle().take(count) {
        let h_next = a * &h + &h_prev;
        let k_next = a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    (h, k)
}

/// Minimal `(t, u)` with `t² − Du² = 1`.
pub fn pell_fundamental(d: &Int) -> Result<PellSolution> {
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    let count = if len % 2 == 0 { len - 1 } else { 2 * len - 1 };
    let (t, u) = convergent(&cf, count);
    debug_assert_eq!(&t * &t - d * &u * &u, Int::one());
    Ok(PellSolution { d: d.clone(), t, u, rhs: 1 })
}

/// Minimal solution of `x² − Dy² = −1`; exists iff the period is odd.
pub fn negative_pell(d: &Int) -> Result<Option<PellSolution>> {
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    if len % 2 == 0 {
        return Ok(None);
    }
    let (t, u) = convergent(&cf, len - 1);
    debug_assert_eq!(&t * &t - d * &u * &u, -Int::one());
    Ok(Some(PellSolution { d: d.clone(), t, u, rhs: -1 }))
}

/// Hypotheses of Newman's theorem on `x² − p₁⋯p_r·y² = −1`: `r = 2` or `r > 1`
/// odd, every `p_i ≡ 1 (mod 4)`, and `(p_i/p_j) = −1` for `i ≠ j`.
pub fn newman_hypothesis(primes: &[Int]) -> Result<bool> {
    if primes.is_empty() {
        return Err(Error::domain("prime list is empty"));
    }
    for (i, p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if primes[..i].contains(p) {
            return Err(Error::domain(format!("{p} is repeated")));
        }
    }
    let r = primes.len();
    if !(r == 2 || (r > 1 && r % 2 == 1)) {
        return Ok(false);
    }
    let four = Int::from(4);
    if !primes.iter().all(|p| p.mod_floor(&four).is_one()) {
        return Ok(false);
    }
    for p in primes {
        for q in primes {
            if p != q && jacobi(p, q)? != -1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// One step past each index of the PQa expansion of (p0 + √D)/q0, stopping
// at the first |Q_i| = 1 (i >= 1) or once a (P, Q) state repeats.
// Returns (G_{i-1}, B_{i-1}).
fn pqa_unit_hit(d: &Int, p0: &Int, q0: &Int) -> Option<(Int, Int)> {
    let s = d.sqrt();
    let (mut p, mut q) = (p0.clone(), q0.clone());
    let (mut b_prev, mut b) = (Int::one(), Int::zero());
    let (mut g_prev, mut g) = (-p0.clone(), q0.clone());
    let mut seen = std::collections::HashSet::new();
    loop {
        let a = if q.is_positive() { (&p + &s).div_floor(&q) } else { -((&p + &s).div_floor(&-&q) + 1u32) };
        let b_next = &a * &b + &b_prev;
        let g_next = &a * &g + &g_prev;
        b_prev = std::mem::replace(&mut b, b_next);
        g_prev = std::mem::replace(&mut g, g_next);
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
        if q.abs().is_one() {
            return Some((g, b));
        }
        if !seen.insert((p.clone(), q.clone())) {
            return None;
        }
    }
}

// Walks the orbit toward the member with smallest |y|, taking y >= 0.
fn smallest_in_class(mut x: Int, mut y: Int, eps: &PellSolution) -> (Int, Int) {
    for forward in [false, true] {
        loop {
            let (nx, ny) = if forward { eps.apply(&x, &y) } else { eps.apply_conjugate(&x, &y) };
            if ny.abs() >= y.abs() {
                break;
            }
            (x, y) = (nx, ny);
        }
    }
    if y.is_negative() || (y.is_zero() && x.is_negative()) {
        (-x, -y)
    } else {
        (x, y)
    }
}

/// One representative per class of solutions of `x² − Dy² = N` under
/// multiplication by norm-one units `±ε^k`.
///
/// Lagrange–Matthews–Mollin: for each `f² | N` and each `z` with
/// `z² ≡ D (mod |m|)`, `m = N/f²`, the continued fraction of `(z + √D)/|m|`
/// yields the primitive class attached to `z` if one exists. Each class is
/// reported by its member with smallest `|y|`, `y ≥ 0`.
pub fn solve_generalized_pell(d: &Int, n: &Int) -> Result<Vec<(Int, Int)>> {
    check_nonsquare(d)?;
    if n.is_zero() {
        return Err(Error::Zero("right-hand side N"));
    }
    let neg = negative_pell(d)?;
    let eps = pell_fundamental(d)?;
    let mut reps: Vec<(Int, Int)> = Vec::new();
    let mut f = Int::one();
    while &f * &f <= n.abs() {
        let f2 = &f * &f;
        if n.is_multiple_of(&f2) {
            let m = n / &f2;
            let am = m.abs();
            let half = &am / 2u32;
            let mut z = -((&am - 1u32) / 2u32);
            while z <= half {
                if (&z * &z - d).is_multiple_of(&am) {
                    if let Some((x, y)) = pqa_unit_hit(d, &z, &am) {
                        let norm = &x * &x - d * &y * &y;
                        let sol = if norm == m { Some((x, y)) } else { neg.as_ref().map(|e| e.apply(&x, &y)) };
                        if let Some((x, y)) = sol {
                            let cand = smallest_in_class(x * &f, y * &f, &eps);
                            if !reps.iter().any(|r| equivalent(r, &cand, d, n)) {
                                reps.push(cand);
                            }
                        }
                    }
                }
                z += 1u32;
            }
        }
        f += 1u32;
    }
    Ok(reps)
}

/// Whether two solutions of `x² − Dy² = N` differ by a norm-one unit.
pub fn equivalent(p: &(Int, Int), q: &(Int, Int), d: &Int, n: &Int) -> bool {
    let re = &p.0 * &q.0 - d * &p.1 * &q.1;
    let im = &p.1 * &q.0 - &p.0 * &q.1;
    re.is_multiple_of(n) && im.is_multiple_of(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn cf_examples() {
        assert_eq!(cf_sqrt(&int(2)).unwrap(), ContinuedFraction { a0: int(1), period: ints(&[2]) });
        assert_eq!(cf_sqrt(&int(14)).unwrap().period, ints(&[1, 2, 1, 6]));
        let cf = cf_sqrt(&int(79)).unwrap();
        assert_eq!(cf.a0, int(8));
        assert_eq!(cf.period.last(), Some(&int(16)));
        assert!(cf_sqrt(&int(49)).is_err());
        assert!(cf_sqrt(&int(1)).is_err());
    }

    #[test]
    fn fundamental_solutions() {
        let f = |d| {
            let s = pell_fundamental(&int(d)).unwrap();
            (s.t, s.u)
        };
        assert_eq!(f(14), (int(15), int(4)));
        assert_eq!(f(79), (int(80), int(9)));
        assert_eq!(f(2), (int(3), int(2)));
        // odd period: +1 solution is the square of the -1 solution
        assert_eq!(f(65), (int(129), int(16)));
        assert_eq!(f(61), (int(1766319049), int(226153980)));
    }

    #[test]
    fn negative_pell_examples() {
        let s = negative_pell(&int(65)).unwrap().unwrap();
        assert_eq!((s.t, s.u, s.rhs), (int(8), int(1), -1));
        assert!(negative_pell(&int(79)).unwrap().is_none());
        let s = negative_pell(&int(2)).unwrap().unwrap();
        assert_eq!((s.t, s.u), (int(1), int(1)));
    }

    #[test]
    fn newman_examples() {
        assert!(newman_hypothesis(&ints(&[5, 13])).unwrap());
        assert!(!newman_hypothesis(&ints(&[13, 17])).unwrap());
        assert!(!newman_hypothesis(&ints(&[5])).unwrap());
        assert!(newman_hypothesis(&ints(&[5, 5])).is_err());
        assert!(newman_hypothesis(&ints(&[5, 21])).is_err());
        assert!(newman_hypothesis(&[]).is_err());
    }

    #[test]
    fn generalized_examples() {
        assert!(solve_generalized_pell(&int(79), &int(25)).unwrap().contains(&(int(5), int(0))));
        assert!(solve_generalized_pell(&int(79), &int(5)).unwrap().is_empty());
        assert_eq!(solve_generalized_pell(&int(65), &int(-1)).unwrap(), vec![(int(8), int(1))]);
        assert!(solve_generalized_pell(&int(79), &int(0)).is_err());
    }

    #[test]
    fn automorph_preserves_norm() {
        let eps = pell_fundamental(&int(79)).unwrap();
        let (x, y) = eps.apply(&int(5), &int(0));
        assert_eq!(&x * &x - int(79) * &y * &y, int(25));
        assert_eq!(eps.apply_conjugate(&x, &y), (int(5), int(0)));
    }
}
