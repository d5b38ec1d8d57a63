//! Human-readable reports.

use std::fmt::Write;

use bqf_core::localsolve::LocalProfile;
use bqf_core::pell::{ContinuedFraction, PellSolution};
use bqf_core::solver::SolutionSet;
use bqf_core::{Form, Int};

fn pairs(v: &[(Int, Int)]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(|(x, y)| format!("({x}, {y})")).collect::<Vec<_>>().join(", ")
}

pub fn solve(form: &Form, set: &SolutionSet) -> String {
    let mut s = String::new();
    let d = form.discriminant();
    let p = &set.pell;
    let kind = if form.is_definite() { "definite" } else { "indefinite" };
    writeln!(s, "equation: {form}").unwrap();
    writeln!(s, "d = 4ac - b² = {d} ({kind})").unwrap();
    writeln!(s, "reduced: {p}").unwrap();
    writeln!(s, "back congruence: x̃ ≡ {}ỹ (mod {})", p.back_coeff, p.back_modulus).unwrap();
    writeln!(s, "solvable: {}", if set.solvable() { "yes" } else { "no" }).unwrap();
    if set.complete {
        writeln!(s, "solutions (complete): {}", pairs(&set.solutions)).unwrap();
    } else {
        writeln!(s, "solutions (orbit representatives): {}", pairs(&set.solutions)).unwrap();
    }
    if let Some(orbit) = &set.orbit {
        writeln!(s, "automorph: {}, order {} mod {}", orbit.automorph, orbit.order, p.back_modulus).unwrap();
        for t in &orbit.traces {
            let (x, y) = &t.representative;
            let sign = if t.sign < 0 { "-" } else { "+" };
            let kept: Vec<String> = t.surviving_powers.iter().map(|k| k.to_string()).collect();
            let kept = if kept.is_empty() { "none".to_string() } else { kept.join(", ") };
            writeln!(s, "  class {sign}({x}, {y}): powers kept {kept}").unwrap();
        }
    }
    s
}

pub fn local(form: &Form, profile: &LocalProfile) -> String {
    let mut s = String::new();
    writeln!(s, "equation: {form}").unwrap();
    for v in profile.entries() {
        writeln!(s, "{v}").unwrap();
    }
    writeln!(s, "all other primes: solvable (smooth reduction)").unwrap();
    let failures: Vec<String> = profile.failures().map(|p| p.to_string()).collect();
    if failures.is_empty() {
        writeln!(s, "locally solvable everywhere").unwrap();
    } else {
        writeln!(s, "fails at {}", failures.join(", ")).unwrap();
    }
    s
}

pub fn pell(
    d: &Int,
    cf: &ContinuedFraction,
    fund: &PellSolution,
    neg: Option<&PellSolution>,
    reps: Option<(&Int, &[(Int, Int)])>,
) -> String {
    let mut s = String::new();
    writeln!(s, "√{d} = {cf} (period {})", cf.period.len()).unwrap();
    writeln!(s, "fundamental: {fund}").unwrap();
    match neg {
        Some(n) => writeln!(s, "negative: {n}").unwrap(),
        None => writeln!(s, "negative: none").unwrap(),
    }
    if let Some((n, reps)) = reps {
        writeln!(s, "representatives of x² - {d}y² = {n}: {}", pairs(reps)).unwrap();
    }
    s
}
