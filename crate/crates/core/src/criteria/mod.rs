//! Artin-condition criteria for integral solvability.
//!
//! A [`CriterionSpec`] carries the ring class field data of a form family:
//! the reduced discriminant, a generating polynomial `l(x)` of `H_L/E`, the
//! (cyclic) Galois order and the ramified primes. Primes are classified by
//! their Frobenius class, read off from the factor-degree pattern of `l`
//! mod p.
//!
//! The two shipped families have compiled criteria in [`criterion_example1`]
//! and [`criterion_example2`]; any configured family can be run through the
//! generic [`evaluate`].

mod artin;
mod examples;
mod spec;

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{factorize, is_prime, is_square, jacobi, poly_factor_degrees, PolyModP};
use crate::error::{Error, Result};
use crate::localsolve::Place;
use crate::pell::{negative_pell, PellSolution};
use crate::{Form, Int};

pub use artin::evaluate;
pub use examples::{criterion_example1, criterion_example2};
pub use spec::{CriterionSpec, GDomain};

/// Frobenius of an unramified prime in `Gal(H_L/E)`, or why it has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrobeniusClass {
    /// Split completely: `l` splits into linear factors.
    Trivial,
    /// Order 2 in a group of order greater than 2.
    Order2,
    /// Generates the Galois group: `l` is irreducible.
    Generator,
    /// Element of order `order`, `2 < order < galois_order`.
    Intermediate {
        order: u32,
    },
    /// Inert in `E/ℚ`.
    Inert,
    Ramified,
}

impl FrobeniusClass {
    /// Order of the Frobenius element for primes split in `E`.
    pub fn order(&self, galois_order: u32) -> Option<u32> {
        match self {
            FrobeniusClass::Trivial => Some(1),
            FrobeniusClass::Order2 => Some(2),
            FrobeniusClass::Generator => Some(galois_order),
            FrobeniusClass::Intermediate { order } => Some(*order),
            FrobeniusClass::Inert | FrobeniusClass::Ramified => None,
        }
    }
}

impl fmt::Display for FrobeniusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusClass::Trivial => write!(f, "trivial"),
            FrobeniusClass::Order2 => write!(f, "order 2"),
            FrobeniusClass::Generator => write!(f, "generator"),
            FrobeniusClass::Intermediate { order } => write!(f, "order {order}"),
            FrobeniusClass::Inert => write!(f, "inert"),
            FrobeniusClass::Ramified => write!(f, "ramified"),
        }
    }
}

pub fn frobenius_class(spec: &CriterionSpec, p: &Int) -> Result<FrobeniusClass> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if *p == Int::from(2) || spec.d_hat.is_multiple_of(p) || spec.is_special(p) {
        return Ok(FrobeniusClass::Ramified);
    }
    match jacobi(&spec.symbol_arg, p)? {
        -1 => return Ok(FrobeniusClass::Inert),
        0 => return Ok(FrobeniusClass::Ramified),
        _ => {}
    }
    let l = PolyModP::from_leading_first(&spec.l_poly, p)?;
    let degrees = match poly_factor_degrees(&l) {
        Ok(d) => d,
        Err(Error::RamifiedPrime { .. }) => return Ok(FrobeniusClass::Ramified),
        Err(e) => return Err(e),
    };
    let h = spec.galois_order as usize;
    let k = degrees[0];
    if degrees.iter().any(|&d| d != k) || degrees.iter().sum::<usize>() != h {
        return Err(Error::UnexpectedPattern { p: p.to_string(), degrees });
    }
    Ok(match k {
        1 => FrobeniusClass::Trivial,
        _ if k == h => FrobeniusClass::Generator,
        2 => FrobeniusClass::Order2,
        _ => FrobeniusClass::Intermediate { order: k as u32 },
    })
}

/// One evaluated condition of a criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub name: String,
    pub g: Int,
    pub conditions: Vec<Condition>,
    pub verdict: bool,
    /// Set when the verdict cannot be certified complete.
    pub note: Option<String>,
}

impl CriterionReport {
    fn new(name: &str, g: &Int, conditions: Vec<Condition>) -> Self {
        let verdict = conditions.iter().all(|c| c.holds);
        CriterionReport { name: name.to_string(), g: g.clone(), conditions, verdict, note: None }
    }

    /// First condition that fails.
    pub fn failing(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} with g = {}: {}", self.name, self.g, if self.verdict { "solvable" } else { "not solvable" })?;
        for c in &self.conditions {
            writeln!(f, "  {} {}: {}", c.label, if c.holds { "holds" } else { "FAILS" }, c.detail)?;
        }
        if let Some(note) = &self.note {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Which of the main theorems applies to a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypotheses {
    /// `d̂ > 0`.
    DPositive,
    /// `d̂ < 0` and some `p | −d̂` has `p ≡ 3 (mod 4)`.
    DNegCase1,
    /// `d̂ < 0`, `−d̂ = p₁⋯p_r` squarefree with `r = 2` or `r > 3` odd, every
    /// `p_i ≡ 1 (mod 4)` and `(p_i/p_j) = −1` for `i ≠ j`.
    DNegCase2,
    NotCovered,
}

pub fn theorem_hypotheses(form: &Form) -> Result<Hypotheses> {
    let d_hat = form.reduce().d_hat;
    let minus = -&d_hat;
    if is_square(&minus) {
        return Err(Error::SquareDiscriminant(minus.to_string()));
    }
    if d_hat.is_positive() {
        return Ok(Hypotheses::DPositive);
    }
    let fm = factorize(&minus)?;
    if fm.exponent_of(2) > 0 {
        return Ok(Hypotheses::NotCovered);
    }
    let four = Int::from(4);
    if fm.primes().any(|p| p.mod_floor(&four) == Int::from(3)) {
        return Ok(Hypotheses::DNegCase1);
    }
    let r = fm.len();
    let shape = r == 2 || (r > 3 && r % 2 == 1);
    let squarefree = fm.factors().values().all(|&e| e == 1);
    let primes: Vec<&Int> = fm.primes().collect();
    let mut nonresidues = true;
    for p in &primes {
        for q in &primes {
            if p != q && jacobi(*p, *q)? != -1 {
                nonresidues = false;
            }
        }
    }
    Ok(if shape && squarefree && nonresidues { Hypotheses::DNegCase2 } else { Hypotheses::NotCovered })
}

/// Status of `x² + d̂y² = −1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitNorm {
    SolvableOverZ(PellSolution),
    LocallyObstructed(Place<Int>),
    Unknown,
}

impl fmt::Display for UnitNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitNorm::SolvableOverZ(s) => write!(f, "solvable over Z by {s}"),
            UnitNorm::LocallyObstructed(p) => write!(f, "locally obstructed at {p}"),
            UnitNorm::Unknown => write!(f, "unknown"),
        }
    }
}

/// Errors when `−d̂` is a perfect square.
pub fn unit_norm_check(d_hat: &Int) -> Result<UnitNorm> {
    if d_hat.is_zero() {
        return Err(Error::Zero("reduced discriminant"));
    }
    if d_hat.is_positive() {
        return Ok(UnitNorm::LocallyObstructed(Place::Infinity));
    }
    let big_d = -d_hat;
    if is_square(&big_d) {
        return Err(Error::SquareDiscriminant(big_d.to_string()));
    }
    if let Some(sol) = negative_pell(&big_d)? {
        return Ok(UnitNorm::SolvableOverZ(sol));
    }
    let four = Int::from(4);
    let fm = factorize(&big_d)?;
    let obstruction = fm.primes().find(|p| p.mod_floor(&four) == Int::from(3)).cloned();
    Ok(match obstruction {
        Some(p) => UnitNorm::LocallyObstructed(Place::Prime(p)),
        None => UnitNorm::Unknown,
    })
}

fn set_string<'a>(items: impl IntoIterator<Item = &'a Int>) -> String {
    let parts: Vec<String> = items.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
