use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::mod_pow;

/// Jacobi symbol `(a/m)` for odd `m >= 1`.
pub fn jacobi<T: Scalar>(a: &T, m: &T) -> Result<i8> {
    if !m.is_positive() || m.is_even() {
        return Err(Error::domain(format!("Jacobi modulus {m} must be odd and positive")));
    }
    let two = T::int(2);
    let four = T::int(4);
    let eight = T::int(8);
    let three = T::int(3);
    let five = T::int(5);

    let mut a = a.mod_floor(m);
    let mut m = m.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        while a.is_even() {
            a = a / two.clone();
            let r = m.mod_floor(&eight);
            if r == three || r == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a.mod_floor(&four) == three && m.mod_floor(&four) == three {
            sign = -sign;
        }
        a = a.mod_floor(&m);
    }
    Ok(if m.is_one() { sign } else { 0 })
}

/// Square root of `a` modulo the prime `p` (Tonelli–Shanks).
///
/// Returns the smaller of the two roots, or `None` when `a` is a non-residue.
pub fn sqrt_mod_prime<T: Scalar>(a: &T, p: &T) -> Option<T> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(T::zero());
    }
    let two = T::int(2);
    if *p == two {
        return Some(a);
    }
    if jacobi(&a, p).ok()? != 1 {
        return None;
    }
    let one = T::one();
    let four = T::int(4);
    let root = if p.mod_floor(&four) == T::int(3) {
        mod_pow(&a, &((p.clone() + one.clone()) / four), p)
    } else {
        // p - 1 = q * 2^s, q odd
        let mut q = p.clone() - one.clone();
        let mut s = 0u32;
        while q.is_even() {
            q = q / two.clone();
            s += 1;
        }
        let mut z = two.clone();
        while jacobi(&z, p).ok()? != -1 {
            z = z + one.clone();
        }
        let mut c = mod_pow(&z, &q, p);
        let mut r = mod_pow(&a, &((q.clone() + one.clone()) / two.clone()), p);
        let mut t = mod_pow(&a, &q, p);
        let mut m = s;
        while !t.is_one() {
            let mut i = 0u32;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = (t2.clone() * t2).mod_floor(p);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = (b.clone() * b).mod_floor(p);
            }
            r = (r * b.clone()).mod_floor(p);
            c = (b.clone() * b).mod_floor(p);
            t = (t * c.clone()).mod_floor(p);
            m = i;
        }
        r
    };
    let other = p.clone() - root.clone();
    Some(if other < root { other } else { root })
}
