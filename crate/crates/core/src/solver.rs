//! Global solution oracles.
//!
//! Definite equations have finitely many solutions and are enumerated
//! completely. Indefinite ones reduce to `x̃² − Dỹ² = n̂`; each Pell class
//! representative is pushed through one full period of the automorph matrix
//! modulo the back-substitution modulus, which decides whether any member
//! of its orbit comes from an integral `(x, y)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::localsolve::PellForm;
use crate::pell::{pell_fundamental, solve_generalized_pell, PellSolution};
use crate::scalar::Scalar;
use crate::{Form, Int};

/// Orbit bookkeeping for one signed class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeTrace {
    pub representative: (Int, Int),
    pub sign: i8,
    /// Automorph powers `k` in `0..order` whose image passes the
    /// back-congruence.
    pub surviving_powers: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInfo {
    pub automorph: PellSolution,
    /// Order of the automorph matrix modulo the back-substitution modulus.
    pub order: u64,
    pub traces: Vec<RepresentativeTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// `true` when `solutions` is every integral solution.
    pub complete: bool,
    pub solutions: Vec<(Int, Int)>,
    pub pell: PellForm<Int>,
    pub orbit: Option<OrbitInfo>,
}

impl SolutionSet {
    pub fn solvable(&self) -> bool {
        !self.solutions.is_empty()
    }
}

pub fn is_solution<T: Scalar>(form: &crate::localsolve::QuadForm<T>, x: &T, y: &T) -> bool {
    form.eval(x, y).is_zero()
}

/// Every integral solution of a definite equation.
pub fn solve_definite(form: &Form) -> Result<SolutionSet> {
    if !form.discriminant().is_positive() {
        return Err(Error::domain("solve_definite needs d = 4ac - b² > 0"));
    }
    let pell = form.reduce();
    let mut solutions = Vec::new();
    if pell.n_hat.is_positive() {
        let y_max = (&pell.n_hat / &pell.d_hat).sqrt();
        let mut y = -y_max.clone();
        while y <= y_max {
            let r = &pell.n_hat - &pell.d_hat * &y * &y;
            if !r.is_negative() {
                let s = r.sqrt();
                if &s * &s == r {
                    let mut roots = vec![s.clone()];
                    if !s.is_zero() {
                        roots.push(-s);
                    }
                    for xt in roots {
                        if let Some(sol) = pell.back_substitute(&xt, &y) {
                            solutions.push(sol);
                        }
                    }
                }
            }
            y += 1u32;
        }
    }
    solutions.sort();
    Ok(SolutionSet { complete: true, solutions, pell, orbit: None })
}

// Order of [[t, Du], [u, t]] in GL2(Z/m).
fn automorph_order(eps: &PellSolution, m: &Int) -> u64 {
    let reduce = |v: Int| v.mod_floor(m);
    let base = [reduce(eps.t.clone()), reduce(&eps.d * &eps.u), reduce(eps.u.clone()), reduce(eps.t.clone())];
    let one = reduce(Int::one());
    let zero = Int::zero();
    let identity = [one.clone(), zero.clone(), zero, one];
    let mut power = base.clone();
    let mut order = 1u64;
    while power != identity {
        power = [
            reduce(&power[0] * &base[0] + &power[1] * &base[2]),
            reduce(&power[0] * &base[1] + &power[1] * &base[3]),
            reduce(&power[2] * &base[0] + &power[3] * &base[2]),
            reduce(&power[2] * &base[1] + &power[3] * &base[3]),
        ];
        order += 1;
    }
    order
}

/// Existence decision and representative solutions for an indefinite
/// equation.
pub fn solve_indefinite(form: &Form) -> Result<SolutionSet> {
    if !form.discriminant().is_negative() {
        return Err(Error::domain("solve_indefinite needs d = 4ac - b² < 0"));
    }
    let pell = form.reduce();
    let big_d = -pell.d_hat.clone();
    let eps = pell_fundamental(&big_d)?;
    let reps = solve_generalized_pell(&big_d, &pell.n_hat)?;
    let order = automorph_order(&eps, &pell.back_modulus);

    let mut solutions = Vec::new();
    let mut traces = Vec::new();
    for rep in reps {
        for sign in [1i8, -1] {
            let (mut xt, mut yt) = if sign > 0 { rep.clone() } else { (-rep.0.clone(), -rep.1.clone()) };
            let mut surviving = Vec::new();
            for k in 0..order {
                if let Some(sol) = pell.back_substitute(&xt, &yt) {
                    debug_assert!(form.eval(&sol.0, &sol.1).is_zero());
                    surviving.push(k);
                    solutions.push(sol);
                }
                (xt, yt) = eps.apply(&xt, &yt);
            }
            traces.push(RepresentativeTrace { representative: rep.clone(), sign, surviving_powers: surviving });
        }
    }
    solutions.sort();
    solutions.dedup();
    Ok(SolutionSet { complete: false, solutions, pell, orbit: Some(OrbitInfo { automorph: eps, order, traces }) })
}

/// Dispatches on the sign of the discriminant.
pub fn solve(form: &Form) -> Result<SolutionSet> {
    if form.is_definite() {
        solve_definite(form)
    } else {
        solve_indefinite(form)
    }
}
