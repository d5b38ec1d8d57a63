//! The two shipped families in compiled form.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{frobenius_class, set_string, Condition, CriterionReport, CriterionSpec, FrobeniusClass};
use crate::arith::{factorize, jacobi, valuation, FactorMap};
use crate::error::{Error, Result};
use crate::Int;

fn cond(label: &str, holds: bool, detail: String) -> Condition {
    Condition { label: label.to_string(), holds, detail }
}

// Primes of g with odd exponent outside `skip`, each with (arg/p).
fn odd_exponent_condition(fm: &FactorMap, skip: &[u64], arg: i64) -> Result<(bool, String)> {
    let mut holds = true;
    let mut parts = Vec::new();
    for (p, &m) in fm.factors() {
        if m % 2 == 0 || skip.iter().any(|&s| *p == Int::from(s)) {
            continue;
        }
        let sym = jacobi(&Int::from(arg), p)?;
        holds &= sym == 1;
        parts.push(format!("m_{p} = {m}, ({arg}/{p}) = {sym}"));
    }
    let detail = if parts.is_empty() { "no prime with odd m_p".to_string() } else { parts.join("; ") };
    Ok((holds, detail))
}

// C = {extra} ∪ primes of g outside `skip`, and its generator subset D.
fn c_and_d(spec: &CriterionSpec, fm: &FactorMap, extra: u64, skip: &[u64]) -> Result<(BTreeSet<Int>, Vec<Int>)> {
    let mut c: BTreeSet<Int> = fm.primes().filter(|p| !skip.iter().any(|&s| **p == Int::from(s))).cloned().collect();
    c.insert(Int::from(extra));
    let mut d = Vec::new();
    for p in &c {
        if frobenius_class(spec, p)? == FrobeniusClass::Generator {
            d.push(p.clone());
        }
    }
    Ok((c, d))
}

/// `3x² + 2xy + 5y² + g = 0` with `g < 0` is solvable over ℤ iff
/// 1. `3g·2^{−s₁} ≡ ±1 (mod 8)`,
/// 2. `(g·7^{−s₂} / 7) = 1`,
/// 3. `(−14/p) = 1` for every `p ∤ 2·3·7` with odd `v_p(g)`,
/// 4. `Σ_{p∈D} v_p(3g)` is even, where `D` holds the primes of
///    `C = {3} ∪ {p | g : p ≠ 2, 7}` at which `l₁ = x⁴ − x³ + x + 1` has
///    generator Frobenius.
pub fn criterion_example1(g: &Int) -> Result<CriterionReport> {
    if !g.is_negative() {
        return Err(Error::domain(format!("criterion 1 needs g < 0, got {g}")));
    }
    let spec = CriterionSpec::example1();
    let fm = factorize(g)?;
    let (s1, s2) = (fm.exponent_of(2), fm.exponent_of(7));

    let odd_part = Int::from(3) * g / Int::from(2).pow(s1);
    let r8 = odd_part.mod_floor(&Int::from(8));
    let c1 = r8 == Int::from(1) || r8 == Int::from(7);
    let d1 = format!("s1 = {s1}, 3g·2^-s1 = {odd_part} ≡ {r8} (mod 8)");

    let g7 = g / Int::from(7).pow(s2);
    let sym7 = jacobi(&g7, &Int::from(7))?;
    let d2 = format!("s2 = {s2}, ({g7}/7) = {sym7}");

    let (c3, d3) = odd_exponent_condition(&fm, &[2, 3, 7], -14)?;

    let (c, d) = c_and_d(&spec, &fm, 3, &[2, 7])?;
    let three_g = Int::from(3) * g;
    let mut total = 0u32;
    let mut terms = Vec::new();
    for p in &d {
        let m = valuation(&three_g, p)?;
        total += m;
        terms.push(format!("v_{p}(3g) = {m}"));
    }
    let d4 = format!(
        "C = {}, D = {}, {} sum = {total}",
        set_string(&c),
        set_string(&d),
        if terms.is_empty() { String::new() } else { format!("{},", terms.join(", ")) }
    );

    Ok(CriterionReport::new(
        &spec.name,
        g,
        vec![
            cond("(1)", c1, d1),
            cond("(2)", sym7 == 1, d2),
            cond("(3)", c3, d3),
            cond("(4)", total.is_multiple_of(2), d4),
        ],
    ))
}

/// `5x² + 14xy − 6y² + g = 0` with `g ≠ 0` is solvable over ℤ iff
/// 1. `(g·(−79)^{−s₂} / 79) = −1`,
/// 2. `(79/p) = 1` for every `p ∤ 2·5·79` with odd `v_p(g)`,
/// 3. if `S = {p ∈ D : v_p(5g) = 1}` is nonempty then `|D| > 1`, where `D`
///    holds the primes of `C = {5} ∪ {p | g : p ≠ 2, 79}` at which
///    `l₂ = x³ − x² − 4x + 2` has generator Frobenius.
///
/// The trace of (3) also reports `r`, the number of primes `p ≠ 2, 79`
/// dividing `g`, and what the reading "`S ≠ ∅` implies `r > 1`" would give.
pub fn criterion_example2(g: &Int) -> Result<CriterionReport> {
    if g.is_zero() {
        return Err(Error::domain("criterion 2 needs g ≠ 0"));
    }
    let spec = CriterionSpec::example2();
    let fm = factorize(g)?;
    let s2 = fm.exponent_of(79);

    let mut g79 = g / Int::from(79).pow(s2);
    if s2 % 2 == 1 {
        g79 = -g79;
    }
    let sym79 = jacobi(&g79, &Int::from(79))?;
    let d1 = format!("s2 = {s2}, ({g79}/79) = {sym79}");

    let (c2, d2) = odd_exponent_condition(&fm, &[2, 5, 79], 79)?;

    let (c, d) = c_and_d(&spec, &fm, 5, &[2, 79])?;
    let five_g = Int::from(5) * g;
    let mut s = Vec::new();
    for p in &d {
        if valuation(&five_g, p)? == 1 {
            s.push(p.clone());
        }
    }
    let r = fm.primes().filter(|p| **p != Int::from(2) && **p != Int::from(79)).count();
    let c3 = s.is_empty() || d.len() > 1;
    let literal = s.is_empty() || r > 1;
    let d3 = format!(
        "C = {}, D = {}, S = {}, |D| = {}, r = {r} (reading with r: {literal})",
        set_string(&c),
        set_string(&d),
        set_string(&s),
        d.len()
    );

    Ok(CriterionReport::new(
        &spec.name,
        g,
        vec![cond("(1)", sym79 == -1, d1), cond("(2)", c2, d2), cond("(3)", c3, d3)],
    ))
}
