//! Degree patterns of polynomials over a prime field via distinct-degree
//! factorization.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{is_prime, mod_inverse};

/// Polynomial with coefficients reduced into `[0, p)`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyModP<T: Scalar = BigInt> {
    coeffs: Vec<T>,
    p: T,
}

impl<T: Scalar> PolyModP<T> {
    /// Builds `l mod p` from integer coefficients given leading term first,
    /// e.g. `[1, -1, 0, 1, 1]` for `x⁴ − x³ + x + 1`.
    pub fn from_leading_first(coeffs: &[T], p: &T) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("modulus {p} is not prime")));
        }
        let coeffs: Vec<T> = coeffs.iter().rev().map(|c| c.mod_floor(p)).collect();
        let coeffs = trim(coeffs);
        if coeffs.is_empty() {
            return Err(Error::domain(format!("polynomial vanishes mod {p}")));
        }
        Ok(PolyModP { coeffs, p: p.clone() })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn modulus(&self) -> &T {
        &self.p
    }

    /// Coefficients in `[0, p)`, constant term first.
    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| (acc * x.clone() + c.clone()).mod_floor(&self.p))
    }

    pub fn monic(&self) -> Self {
        let lead = self.coeffs.last().expect("nonzero polynomial");
        let inv = mod_inverse(lead, &self.p).expect("leading coefficient is a unit");
        PolyModP { coeffs: scale(&self.coeffs, &inv, &self.p), p: self.p.clone() }
    }
}

impl<T: Scalar> fmt::Display for PolyModP<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod {})", self.p)
    }
}

/// Degrees of the irreducible factors of `l mod p`, ascending.
///
/// `l` must be squarefree mod `p`; otherwise `p` divides the discriminant
/// and [`Error::RamifiedPrime`] is returned.
pub fn poly_factor_degrees<T: Scalar>(l: &PolyModP<T>) -> Result<Vec<usize>> {
    let p = &l.p;
    let f = l.monic().coeffs;
    if f.len() == 1 {
        return Ok(Vec::new());
    }
    let df = derivative(&f, p);
    if df.is_empty() || gcd(f.clone(), df, p).len() > 1 {
        return Err(Error::RamifiedPrime { p: p.to_string() });
    }

    let x = vec![T::zero(), T::one()];
    let mut rest = f;
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut k = 1;
    while rest.len() > 2 * k {
        h = pow_mod(&h, p, &rest, p);
        let g = gcd(rest.clone(), sub(&h, &x, p), p);
        let gdeg = g.len() - 1;
        if gdeg > 0 {
            degrees.extend(std::iter::repeat_n(k, gdeg / k));
            rest = div_exact(&rest, &g, p);
            h = rem(&h, &rest, p);
        }
        k += 1;
    }
    if rest.len() > 1 {
        degrees.push(rest.len() - 1);
    }
    degrees.sort_unstable();
    Ok(degrees)
}

fn trim<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn scale<T: Scalar>(a: &[T], k: &T, p: &T) -> Vec<T> {
    trim(a.iter().map(|c| (c.clone() * k.clone()).mod_floor(p)).collect())
}

fn sub<T: Scalar>(a: &[T], b: &[T], p: &T) -> Vec<T> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(T::zero);
            let y = b.get(i).cloned().unwrap_or_else(T::zero);
            (x - y).mod_floor(p)
        })
        .collect();
    trim(out)
}

fn mul<T: Scalar>(a: &[T], b: &[T], p: &T) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j].clone() + x.clone() * y.clone()).mod_floor(p);
        }
    }
    trim(out)
}

// Division with remainder; `b` nonzero.
fn divmod<T: Scalar>(a: &[T], b: &[T], p: &T) -> (Vec<T>, Vec<T>) {
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = mod_inverse(b.last().expect("nonzero divisor"), p).expect("unit leading term");
    let mut q = vec![T::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (r.last().unwrap().clone() * inv.clone()).mod_floor(p);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i].clone() - c.clone() * bc.clone()).mod_floor(p);
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn rem<T: Scalar>(a: &[T], b: &[T], p: &T) -> Vec<T> {
    divmod(a, b, p).1
}

fn div_exact<T: Scalar>(a: &[T], b: &[T], p: &T) -> Vec<T> {
    let (q, r) = divmod(a, b, p);
    debug_assert!(r.is_empty());
    q
}

fn gcd<T: Scalar>(mut a: Vec<T>, mut b: Vec<T>, p: &T) -> Vec<T> {
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return a;
    }
    let inv = mod_inverse(a.last().unwrap(), p).expect("unit");
    scale(&a, &inv, p)
}

fn derivative<T: Scalar>(a: &[T], p: &T) -> Vec<T> {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (c.clone() * T::int(i as i64)).mod_floor(p)).collect())
}

// base^e mod (modulus, p)
fn pow_mod<T: Scalar>(base: &[T], e: &T, modulus: &[T], p: &T) -> Vec<T> {
    let two = T::int(2);
    let mut result = vec![T::one()];
    let mut b = rem(base, modulus, p);
    let mut e = e.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = rem(&mul(&result, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        e = e / two.clone();
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(c: &[i64], p: i64) -> Result<Vec<usize>> {
        poly_factor_degrees(&PolyModP::from_leading_first(c, &p)?)
    }

    #[test]
    fn class_field_generators_at_inert_generator_primes() {
        assert_eq!(degs(&[1, -1, 0, 1, 1], 3).unwrap(), vec![4]);
        assert_eq!(degs(&[1, -1, -4, 2], 5).unwrap(), vec![3]);
    }

    #[test]
    fn splits_completely() {
        assert_eq!(degs(&[1, 0, -1], 3).unwrap(), vec![1, 1]);
        // (x-1)(x-2)(x^2+1) mod 7: x^2+1 irreducible since 7 = 3 mod 4
        let c = [1, -3, 3, -3, 2];
        assert_eq!(degs(&c, 7).unwrap(), vec![1, 1, 2]);
    }

    #[test]
    fn ramified_is_rejected() {
        // disc(x^4 - x^3 + x + 1) = 2^3 7^2
        assert!(matches!(degs(&[1, -1, 0, 1, 1], 7), Err(Error::RamifiedPrime { .. })));
        assert!(matches!(degs(&[1, -1, -4, 2], 79), Err(Error::RamifiedPrime { .. })));
        assert!(matches!(degs(&[1, 2, 1], 5), Err(Error::RamifiedPrime { .. })));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(PolyModP::from_leading_first(&[3i64, 3], &3).is_err());
        assert!(PolyModP::from_leading_first(&[1i64, 1], &9).is_err());
    }

    #[test]
    fn eval_and_display() {
        let l = PolyModP::from_leading_first(&[1i64, -1, -4, 2], &5).unwrap();
        assert_eq!(l.eval(&1), 3);
        assert_eq!(l.to_string(), "1x^3 + 4x^2 + 1x + 2 (mod 5)");
    }
}
