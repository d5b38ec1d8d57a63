//! Generic criterion: local solvability everywhere plus reachability of the
//! identity in the cyclic group `Gal(H_L/E) ≅ ℤ/h`.
//!
//! Each prime `p | n̂` contributes a set of exponents mod `h`. A split prime
//! whose Frobenius `σ` has order `k` and `m = v_p(n̂)` contributes
//! `σ^{m−2u}` for any `0 ≤ u ≤ m`; an inert prime contributes nothing; a
//! special ramified prime `(q, r)` contributes `r·v_q(n̂)`. Every cyclic
//! subgroup of a group of order `h ∈ {1, 2, 3, 4, 6}` has at most two
//! generators, `τ` and `τ⁻¹`, and the exponent set is symmetric, so the
//! choice of `σ` within its order class does not matter.

use super::{frobenius_class, unit_norm_check, Condition, CriterionReport, CriterionSpec, UnitNorm};
use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::localsolve::local_profile;
use crate::Int;

fn exponents(h: u32, step: u32, m: u32) -> u64 {
    let mut mask = 0u64;
    for u in 0..=m {
        let j = (m as i64 - 2 * u as i64) * step as i64;
        mask |= 1 << j.rem_euclid(h as i64);
    }
    mask
}

fn add_sets(h: u32, a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    for i in (0..h).filter(|i| a >> i & 1 == 1) {
        for j in (0..h).filter(|j| b >> j & 1 == 1) {
            out |= 1 << ((i + j) % h);
        }
    }
    out
}

pub fn evaluate(spec: &CriterionSpec, g: &Int) -> Result<CriterionReport> {
    let form = spec.form(g)?;
    let profile = local_profile(&form)?;
    let failures: Vec<String> = profile.failures().map(|p| p.to_string()).collect();
    let local_detail = if failures.is_empty() {
        "solvable at every place".to_string()
    } else {
        format!("fails at {}", failures.join(", "))
    };

    let h = spec.galois_order;
    let n_hat = form.reduce().n_hat;
    let mut reach = 1u64;
    let mut parts = Vec::new();
    for (p, &m) in factorize(&n_hat)?.factors() {
        let class = frobenius_class(spec, p)?;
        let set = match (spec.role(p), class.order(h)) {
            (Some(r), _) => 1u64 << ((r as u64 * m as u64) % h as u64),
            (None, Some(k)) => exponents(h, h / k, m),
            (None, None) if class == super::FrobeniusClass::Inert => 1,
            (None, None) => {
                return Err(Error::domain(format!("{p} is ramified but has no role in {}", spec.name)));
            }
        };
        let shown: Vec<String> = (0..h).filter(|i| set >> i & 1 == 1).map(|i| i.to_string()).collect();
        parts.push(format!("{p}^{m} {class} {{{}}}", shown.join(",")));
        reach = add_sets(h, reach, set);
    }
    let artin = reach & 1 == 1;
    let artin_detail = format!("Z/{h}: {}", if parts.is_empty() { "n̂ = ±1".to_string() } else { parts.join("; ") });

    let mut report = CriterionReport::new(
        &spec.name,
        g,
        vec![
            Condition { label: "local".into(), holds: profile.solvable(), detail: local_detail },
            Condition { label: "artin".into(), holds: artin, detail: artin_detail },
        ],
    );
    if unit_norm_check(&spec.d_hat)? == UnitNorm::Unknown {
        report.note = Some("x² + d̂y² = −1 could not be classified; verdict is not certified".into());
    }
    Ok(report)
}
