mod common;

use bqf_core::localsolve::{local_profile, solvable_in_zp, Evidence, QuadForm};
use bqf_core::Int;
use common::{grid_oracle, valid_form, GridVerdict};

fn decide(a: i64, b: i64, c: i64, g: i64, p: i64) -> bool {
    let f = QuadForm::<i128>::from_i64(a, b, c, g).unwrap();
    solvable_in_zp(&f, &(p as i128)).unwrap().solvable
}

#[test]
fn decider_matches_grid_on_small_box() {
    let mut inconclusive = 0;
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            for c in -4i64..=4 {
                for g in -12i64..=12 {
                    if !valid_form(a, b, c, g) {
                        continue;
                    }
                    for p in [2, 3, 5, 7] {
                        let got = decide(a, b, c, g, p);
                        match grid_oracle(a, b, c, g, p, 6) {
                            GridVerdict::Solvable => assert!(got, "({a},{b},{c},{g}) p={p}"),
                            GridVerdict::Unsolvable => assert!(!got, "({a},{b},{c},{g}) p={p}"),
                            GridVerdict::Inconclusive => {
                                inconclusive += 1;
                                let deep = grid_oracle(a, b, c, g, p, 12);
                                assert_ne!(deep, GridVerdict::Inconclusive, "({a},{b},{c},{g}) p={p}");
                                assert_eq!(got, deep == GridVerdict::Solvable, "({a},{b},{c},{g}) p={p}");
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(inconclusive > 0, "the box should include forms needing deep certificates");
}

#[test]
fn witnesses_satisfy_certificate_rule() {
    for (a, b, c, g) in [(1, 0, 1, -32), (3, 2, 5, -24), (2, 1, -4, 18), (5, 14, -6, -49)] {
        let f = QuadForm::<Int>::from_i64(a, b, c, g).unwrap();
        for p in [2u32, 3, 5, 7] {
            let p = Int::from(p);
            let v = solvable_in_zp(&f, &p).unwrap();
            if let Evidence::Hensel(w) = v.evidence {
                let (fx, fy) = f.gradient(&w.x, &w.y);
                let val = |n: &Int| {
                    if n == &Int::from(0) {
                        u32::MAX
                    } else {
                        bqf_core::arith::valuation(n, &p).unwrap()
                    }
                };
                let m = val(&fx).min(val(&fy));
                assert_eq!(m, w.gradient_valuation);
                assert!(w.depth > 2 * m);
                let modulus = num_traits::pow(p.clone(), w.depth as usize);
                assert_eq!(num_integer::Integer::mod_floor(&f.eval(&w.x, &w.y), &modulus), Int::from(0));
            }
        }
    }
}

#[test]
fn exhausted_verdicts_have_no_residue_zero() {
    // (1,0,14,-11) at 11: no zero mod 11^depth by brute force
    let f = QuadForm::<i128>::from_i64(1, 0, 14, -11).unwrap();
    let v = solvable_in_zp(&f, &11).unwrap();
    let Evidence::Exhausted { depth } = v.evidence else { panic!("expected exhaustion") };
    let m = 11i128.pow(depth);
    assert!(depth <= 3);
    for x in 0..m {
        for y in 0..m {
            assert_ne!((x * x + 14 * y * y - 11).rem_euclid(m), 0);
        }
    }
}

#[test]
fn profile_respects_real_place_sign() {
    for g in 1..40 {
        let f = QuadForm::<Int>::from_i64(3, 2, 5, g).unwrap();
        assert!(!local_profile(&f).unwrap().solvable());
    }
}
