//! Integer scalar abstraction.
//!
//! The arithmetic layer and the p-adic decider are written once against
//! [`Scalar`] and instantiated for machine integers (`i64`, `i128`) on hot
//! paths and for [`BigInt`] wherever values may grow without bound (Pell
//! solutions, orbit enumeration).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, ToBigInt};
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Exact signed integer usable by every routine in this crate.
pub trait Scalar:
    Integer
    + Signed
    + Roots
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + ToBigInt
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    fn from_bigint(v: &BigInt) -> Option<Self>;

    fn int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every scalar holds an i64")
    }

    fn big(&self) -> BigInt {
        self.to_bigint().expect("integers always convert")
    }
}

impl Scalar for i64 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Scalar for i128 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Scalar for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn big(&self) -> BigInt {
        self.clone()
    }
}

pub(crate) fn checked_mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// `base^exp` with overflow detection.
pub(crate) fn checked_pow<T: Scalar>(base: &T, exp: u32) -> Result<T> {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = checked_mul(&acc, base)?;
    }
    Ok(acc)
}
