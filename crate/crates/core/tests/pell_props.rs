mod common;

use std::collections::BTreeSet;

use bqf_core::pell::{negative_pell, newman_hypothesis, pell_fundamental, solve_generalized_pell};
use bqf_core::Int;
use num_integer::Roots;
use num_traits::Signed;

fn nonsquares(limit: u64) -> impl Iterator<Item = u64> {
    (2..=limit).filter(|d| d.sqrt() * d.sqrt() != *d)
}

fn brute_fundamental(d: u64, t_max: u64) -> Option<(u64, u64)> {
    (2..=t_max).find_map(|t| {
        let num = t as u128 * t as u128 - 1;
        if !num.is_multiple_of(d as u128) {
            return None;
        }
        let u2 = num / d as u128;
        let u = u2.sqrt();
        (u * u == u2).then_some((t, u as u64))
    })
}

#[test]
fn fundamental_is_minimal() {
    for d in nonsquares(150) {
        let sol = pell_fundamental(&Int::from(d)).unwrap();
        match brute_fundamental(d, 1_000_000) {
            Some((t, u)) => assert_eq!((sol.t, sol.u), (Int::from(t), Int::from(u)), "D = {d}"),
            None => assert!(sol.t > Int::from(1_000_000u32), "D = {d}"),
        }
    }
}

#[test]
fn negative_solution_squares_to_fundamental() {
    for d in nonsquares(500) {
        let big_d = Int::from(d);
        if let Some(neg) = negative_pell(&big_d).unwrap() {
            let fund = pell_fundamental(&big_d).unwrap();
            let t = &neg.t * &neg.t + &big_d * &neg.u * &neg.u;
            let u = Int::from(2) * &neg.t * &neg.u;
            assert_eq!((t, u), (fund.t, fund.u), "D = {d}");
        }
    }
}

#[test]
fn negative_pell_existence_matches_small_search() {
    // D where a solution with y <= 1000 exists must report one
    for d in nonsquares(300) {
        let found = (1..=1000u64).any(|y| {
            let v = d as u128 * y as u128 * y as u128 - 1;
            v.sqrt() * v.sqrt() == v
        });
        let neg = negative_pell(&Int::from(d)).unwrap();
        if found {
            assert!(neg.is_some(), "D = {d}");
        }
        if let Some(s) = neg {
            assert_eq!(&s.t * &s.t - Int::from(d) * &s.u * &s.u, Int::from(-1));
        }
    }
}

const Y_BOUND: i64 = 10_000;

fn brute_solutions(d: i64, n: i64) -> BTreeSet<(Int, Int)> {
    let mut out = BTreeSet::new();
    for y in -Y_BOUND..=Y_BOUND {
        let r = n as i128 + d as i128 * y as i128 * y as i128;
        if r < 0 {
            continue;
        }
        let s = r.sqrt();
        if s * s == r {
            out.insert((Int::from(s), Int::from(y)));
            out.insert((Int::from(-s), Int::from(y)));
        }
    }
    out
}

// Orbits are expanded until |y| leaves the box in both directions.
fn expand(d: i64, n: i64) -> BTreeSet<(Int, Int)> {
    let big_d = Int::from(d);
    let eps = pell_fundamental(&big_d).unwrap();
    let bound = Int::from(Y_BOUND);
    let mut out = BTreeSet::new();
    for (x, y) in solve_generalized_pell(&big_d, &Int::from(n)).unwrap() {
        for (sx, sy) in [(x.clone(), y.clone()), (-x.clone(), -y.clone())] {
            for forward in [true, false] {
                let (mut px, mut py) = (sx.clone(), sy.clone());
                let mut outside = 0;
                while outside < 3 {
                    if py.abs() <= bound {
                        out.insert((px.clone(), py.clone()));
                        outside = 0;
                    } else {
                        outside += 1;
                    }
                    (px, py) = if forward { eps.apply(&px, &py) } else { eps.apply_conjugate(&px, &py) };
                }
            }
        }
    }
    out
}

#[test]
fn representatives_generate_every_solution() {
    for d in nonsquares(50) {
        for n in (-50..=50).filter(|&n| n != 0) {
            let d = d as i64;
            assert_eq!(expand(d, n), brute_solutions(d, n), "D = {d}, N = {n}");
        }
    }
}

#[test]
fn representatives_are_pairwise_inequivalent() {
    for d in nonsquares(50) {
        for n in (-50i64..=50).filter(|&n| n != 0) {
            let big_d = Int::from(d);
            let big_n = Int::from(n);
            let reps = solve_generalized_pell(&big_d, &big_n).unwrap();
            for (i, p) in reps.iter().enumerate() {
                for q in &reps[..i] {
                    assert!(!bqf_core::pell::equivalent(p, q, &big_d, &big_n), "D = {d}, N = {n}");
                }
            }
        }
    }
}

fn newman_lists(primes: &[u64], start: usize, product: u64, limit: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if acc.len() >= 2 {
        out.push(acc.clone());
    }
    for i in start..primes.len() {
        let next = product * primes[i];
        if next > limit {
            break;
        }
        acc.push(primes[i]);
        newman_lists(primes, i + 1, next, limit, acc, out);
        acc.pop();
    }
}

#[test]
fn newman_instances_have_negative_solutions() {
    let limit = 100_000;
    let primes: Vec<u64> = common::primes_below(limit / 5 + 1).into_iter().filter(|p| p % 4 == 1).collect();
    let mut lists = Vec::new();
    newman_lists(&primes, 0, 1, limit, &mut Vec::new(), &mut lists);
    let mut passing = 0;
    for list in lists {
        let big: Vec<Int> = list.iter().map(|&p| Int::from(p)).collect();
        if newman_hypothesis(&big).unwrap() {
            passing += 1;
            let product: u64 = list.iter().product();
            assert!(negative_pell(&Int::from(product)).unwrap().is_some(), "{list:?}");
        }
    }
    assert!(passing > 100, "only {passing} instances");
}
