use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::residue::jacobi;

/// Signed prime factorization `sign · ∏ p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMap {
    sign: i8,
    factors: BTreeMap<BigInt, u32>,
}

impl FactorMap {
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &BTreeMap<BigInt, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.keys()
    }

    pub fn exponent(&self, p: &BigInt) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.exponent(&BigInt::from(p))
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= num_traits::pow(p.clone(), *e as usize);
        }
        v
    }

    fn insert(&mut self, p: BigInt, e: u32) {
        *self.factors.entry(p).or_insert(0) += e;
    }
}

impl fmt::Display for FactorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

const SMALL_PRIMES: [u64; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

// Miller–Rabin with the first 13 prime bases is exact below this bound.
const MR13_BOUND: &str = "3317044064679887385961981";

/// Exact factorization of a nonzero integer.
pub fn factorize<T: Scalar>(n: &T) -> Result<FactorMap> {
    if n.is_zero() {
        return Err(Error::Zero("cannot factor zero"));
    }
    let n = n.big();
    let mut map = FactorMap { sign: if n.is_negative() { -1 } else { 1 }, factors: BTreeMap::new() };
    let mut m = n.abs();

    // trial division up to 1000
    let mut d = 2u64;
    while d < 1000 {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            map.insert(bd, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        split_into(&mut map, m);
    }
    Ok(map)
}

fn split_into(map: &mut FactorMap, m: BigInt) {
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            map.insert(m, 1);
            continue;
        }
        let f = match m.to_u64() {
            Some(small) => BigInt::from(rho_u64(small)),
            None => rho_big(&m),
        };
        let other = &m / &f;
        stack.push(f);
        stack.push(other);
    }
}

/// Deterministic primality test.
///
/// Exact Miller–Rabin below 3.3·10^24; above that bound a strong Lucas test
/// is added (Baillie–PSW).
pub fn is_prime<T: Scalar>(n: &T) -> bool {
    let n = n.big();
    if n < BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (&n % p).is_zero() {
            return false;
        }
    }
    let bases = &SMALL_PRIMES[..13];
    if !bases.iter().all(|&b| strong_probable_prime_big(&n, &BigInt::from(b))) {
        return false;
    }
    let bound: BigInt = MR13_BOUND.parse().expect("constant");
    n < bound || strong_lucas(&n)
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES[..12] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &SMALL_PRIMES[..12] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime_big(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x: BigInt = if x.is_odd() { x + n } else { x };
    (x >> 1u32).mod_floor(n)
}

// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigInt) -> bool {
    let r = num_integer::Roots::sqrt(n);
    if &r * &r == *n {
        return false;
    }
    let mut dd = BigInt::from(5);
    loop {
        match jacobi(&dd, n) {
            Ok(-1) => break,
            Ok(0) if dd.abs() != *n => return false,
            _ => {}
        }
        dd = if dd.is_positive() { -(dd + 2u32) } else { -(dd - 2u32) };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &dd) / 4u32;
    let mut d: BigInt = n + 1u32;
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let bits = d.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if d.bit(i) {
            let nu = half_mod(&p * &u + &v, n);
            let nv = half_mod(&dd * &u + &p * &v, n);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
    }
    false
}

// Pollard rho with Brent cycle detection; `n` is composite.
fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    const BATCH: u64 = 128;
    for c in 1..n {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausted every constant for composite {n}")
}

fn rho_big(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    const BATCH: u32 = 128;
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = BigInt::one();
        let mut q = BigInt::one();
        let mut r = 1u32;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1;
    }
}
