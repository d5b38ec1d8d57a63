//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the routine it is used to check.
#![allow(dead_code)]

use num_integer::Roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridVerdict {
    Solvable,
    Unsolvable,
    Inconclusive,
}

fn v_p(n: i128, p: i128, cap: u32) -> u32 {
    if n == 0 {
        return cap;
    }
    let mut n = n;
    let mut e = 0;
    while n % p == 0 && e < cap {
        n /= p;
        e += 1;
    }
    e
}

/// Enumerates every residue class `(x, y) mod p^N` with `f ≡ 0 (mod p^N)`
/// for `N = 1..=max_depth`. Solvable as soon as some class has gradient
/// valuation `m` with `2m + 1 ≤ N`; unsolvable when a level is empty.
pub fn grid_oracle(a: i64, b: i64, c: i64, g: i64, p: i64, max_depth: u32) -> GridVerdict {
    let (a, b, c, g, p) = (a as i128, b as i128, c as i128, g as i128, p as i128);
    let f = |x: i128, y: i128| a * x * x + b * x * y + c * y * y + g;
    let mut modulus = p;
    let mut zeros: Vec<(i128, i128)> = Vec::new();
    for x in 0..p {
        for y in 0..p {
            if f(x, y).rem_euclid(p) == 0 {
                zeros.push((x, y));
            }
        }
    }
    for depth in 1..=max_depth {
        if zeros.is_empty() {
            return GridVerdict::Unsolvable;
        }
        for &(x, y) in &zeros {
            let fx = (2 * a * x + b * y).rem_euclid(modulus);
            let fy = (b * x + 2 * c * y).rem_euclid(modulus);
            let m = v_p(fx, p, depth).min(v_p(fy, p, depth));
            if 2 * m < depth {
                return GridVerdict::Solvable;
            }
        }
        if depth == max_depth {
            break;
        }
        let next_mod = modulus * p;
        let mut next = Vec::new();
        for &(x, y) in &zeros {
            for i in 0..p {
                for j in 0..p {
                    let (xx, yy) = (x + i * modulus, y + j * modulus);
                    if f(xx, yy).rem_euclid(next_mod) == 0 {
                        next.push((xx, yy));
                    }
                }
            }
        }
        zeros = next;
        modulus = next_mod;
    }
    GridVerdict::Inconclusive
}

pub fn is_forbidden_square(n: i64) -> bool {
    n >= 0 && n.sqrt() * n.sqrt() == n
}

/// Forms with `a ≠ 0`, `g ≠ 0`, `d ≠ 0` and `−d` not a square.
pub fn valid_form(a: i64, b: i64, c: i64, g: i64) -> bool {
    let d = 4 * a * c - b * b;
    a != 0 && g != 0 && d != 0 && !is_forbidden_square(-d)
}

/// Every `(x, y)` with `|x|, |y| ≤ bound` solving the equation, found by
/// solving the quadratic in `y` for each `x`.
pub fn naive_solutions(a: i64, b: i64, c: i64, g: i64, bound: i64) -> Vec<(i64, i64)> {
    let (a, b, c, g) = (a as i128, b as i128, c as i128, g as i128);
    let mut out = Vec::new();
    for x in -(bound as i128)..=bound as i128 {
        let rest = a * x * x + g;
        if c == 0 {
            // b x y = -rest
            let coef = b * x;
            if coef == 0 {
                if rest == 0 {
                    for y in -(bound as i128)..=bound as i128 {
                        out.push((x as i64, y as i64));
                    }
                }
            } else if (-rest) % coef == 0 {
                let y = -rest / coef;
                if y.abs() <= bound as i128 {
                    out.push((x as i64, y as i64));
                }
            }
            continue;
        }
        let disc = b * b * x * x - 4 * c * rest;
        if disc < 0 {
            continue;
        }
        let s = disc.sqrt();
        if s * s != disc {
            continue;
        }
        let mut ys = vec![];
        for num in [-b * x + s, -b * x - s] {
            if num % (2 * c) == 0 {
                let y = num / (2 * c);
                if y.abs() <= bound as i128 && !ys.contains(&y) {
                    ys.push(y);
                }
            }
        }
        for y in ys {
            out.push((x as i64, y as i64));
        }
    }
    out.sort();
    out
}

/// First solution with `|x|, |y| ≤ bound`, if any.
pub fn naive_exists(a: i64, b: i64, c: i64, g: i64, bound: i64) -> bool {
    let (a, b, c, g) = (a as i128, b as i128, c as i128, g as i128);
    for x in -(bound as i128)..=bound as i128 {
        let rest = a * x * x + g;
        if c == 0 {
            let coef = b * x;
            if (coef == 0 && rest == 0) || (coef != 0 && (-rest) % coef == 0 && (rest / coef).abs() <= bound as i128) {
                return true;
            }
            continue;
        }
        let disc = b * b * x * x - 4 * c * rest;
        if disc < 0 {
            continue;
        }
        let s = disc.sqrt();
        if s * s == disc
            && [-b * x + s, -b * x - s].iter().any(|num| num % (2 * c) == 0 && (num / (2 * c)).abs() <= bound as i128)
        {
            return true;
        }
    }
    false
}

/// Euler's criterion `a^((p-1)/2) mod p` mapped to {-1, 0, 1}.
pub fn euler(a: i64, p: i64) -> i8 {
    let mut r: i128 = 1;
    let mut b = (a as i128).rem_euclid(p as i128);
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as i128;
        }
        b = b * b % p as i128;
        e >>= 1;
    }
    match r {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

pub fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}
