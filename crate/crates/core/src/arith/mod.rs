//! Exact integer and prime-field primitives.
//!
//! Everything here is a pure function. Routines that only need ring
//! operations are generic over [`Scalar`]; factorization always works on
//! [`BigInt`](num_bigint::BigInt) internally and switches to `u64` arithmetic
//! once a cofactor fits.

mod factor;
mod poly;
mod residue;

pub use factor::{factorize, is_prime, FactorMap};
pub use poly::{poly_factor_degrees, PolyModP};
pub use residue::{jacobi, sqrt_mod_prime};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest `e` with `p^e | n`.
pub fn valuation<T: Scalar>(n: &T, p: &T) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Zero("valuation of zero is infinite"));
    }
    if p.abs() <= T::one() {
        return Err(Error::domain(format!("valuation base {p} must be at least 2")));
    }
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        n = q;
        e += 1;
    }
}

/// `n` with every factor of `p` removed, together with the number removed.
pub fn split_off<T: Scalar>(n: &T, p: &T) -> Result<(T, u32)> {
    let e = valuation(n, p)?;
    let mut m = n.clone();
    for _ in 0..e {
        m = m / p.clone();
    }
    Ok((m, e))
}

/// `(⌊√n⌋, n is a perfect square)`.
pub fn isqrt<T: Scalar>(n: &T) -> Result<(T, bool)> {
    if n.is_negative() {
        return Err(Error::domain(format!("isqrt of negative {n}")));
    }
    let r = n.sqrt();
    let exact = r.clone() * r.clone() == *n;
    Ok((r, exact))
}

pub fn is_square<T: Scalar>(n: &T) -> bool {
    !n.is_negative() && isqrt(n).map(|(_, sq)| sq).unwrap_or(false)
}

/// `base^exp mod m`, result in `[0, m)`. `exp` must be nonnegative.
pub fn mod_pow<T: Scalar>(base: &T, exp: &T, m: &T) -> T {
    debug_assert!(!exp.is_negative());
    if m.is_one() {
        return T::zero();
    }
    let two = T::int(2);
    let mut result = T::one();
    let mut b = base.mod_floor(m);
    let mut e = exp.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = (result * b.clone()).mod_floor(m);
        }
        b = (b.clone() * b).mod_floor(m);
        e = e / two.clone();
    }
    result
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse<T: Scalar>(a: &T, m: &T) -> Option<T> {
    let a = a.mod_floor(m);
    let eg = a.extended_gcd(m);
    if eg.gcd.is_one() {
        Some(eg.x.mod_floor(m))
    } else {
        None
    }
}
