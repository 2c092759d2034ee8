use std::cmp::Ordering;

use crosscc_core::certify::{default_schedule, extension_step, mvt_sign_bound, sign_at_point, AlgebraicPointSpec, Expr, Status};
use crosscc_core::exactnum::BigRational;
use crosscc_core::univar::isolate_root;
use crosscc_core::{MPoly, UPoly, VarTable};
use num_integer::Roots;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn non_square() -> impl Strategy<Value = i64> {
    (2i64..400).prop_filter("not a square", |n| n.sqrt() * n.sqrt() != *n)
}

/// `x = sqrt(n)` with `y = sqrt(x + k)`.
fn point(n: i64, k: i64) -> AlgebraicPointSpec {
    let s = n.sqrt();
    AlgebraicPointSpec::new("x", UPoly::from_i64(&[-n, 0, 1]), q(s, 1), q(s + 1, 1))
        .unwrap()
        .with("y", Expr::var("x").add(Expr::int(k)).sqrt())
        .unwrap()
}

/// Exact sign of `sqrt(n) - t` for rational `t`.
fn sign_sqrt_minus(n: i64, t: &BigRational) -> Ordering {
    if *t < q(0, 1) {
        return Ordering::Greater;
    }
    q(n, 1).cmp(&(t * t))
}

fn ring() -> crosscc_core::multipoly::Ring {
    VarTable::new(&["x", "y", "z"]).unwrap()
}

fn to_i8(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn certified_signs_are_correct(n in non_square(), k in 0i64..10, tn in -50i64..400, td in 1i64..20, use_y in any::<bool>()) {
        let p = point(n, k);
        let t = q(tn, td);
        let r = ring();
        // y - t has the sign of sqrt(n) - (t^2 - k) when t >= 0
        let (f, truth) = if use_y {
            let truth = if t < q(0, 1) { Ordering::Greater } else { sign_sqrt_minus(n, &(&t * &t - q(k, 1))) };
            (MPoly::parse(&r, &format!("y - ({tn})/({td})")).unwrap(), truth)
        } else {
            (MPoly::parse(&r, &format!("x - ({tn})/({td})")).unwrap(), sign_sqrt_minus(n, &t))
        };
        let c = sign_at_point(&f, &p, &default_schedule()).unwrap();
        match c.status {
            Status::Certified => prop_assert_eq!(c.sign, Some(to_i8(truth))),
            Status::Falsified => prop_assert_eq!(truth, Ordering::Equal),
            Status::Inconclusive => prop_assert_eq!(truth, Ordering::Equal),
        }
        for (_, iv) in &c.enclosures {
            if c.status == Status::Certified {
                prop_assert!(!iv.contains_zero());
            }
        }
    }

    #[test]
    fn refinement_keeps_the_verdict(n in non_square(), tn in -50i64..400, td in 1i64..20, k in 1u32..30) {
        let s = n.sqrt();
        let f = MPoly::parse(&ring(), &format!("x^2 - 3*x - ({tn})/({td})")).unwrap();
        let wide = AlgebraicPointSpec::new("x", UPoly::from_i64(&[-n, 0, 1]), q(s, 1), q(s + 1, 1)).unwrap();
        let iv = isolate_root(&wide.poly, wide.interval().lo(), wide.interval().hi(), &q(1, 1 << k)).unwrap();
        let narrow = AlgebraicPointSpec::new("x", wide.poly.clone(), iv.lo().clone(), iv.hi().clone()).unwrap();
        let a = sign_at_point(&f, &wide, &default_schedule()).unwrap();
        let b = sign_at_point(&f, &narrow, &default_schedule()).unwrap();
        if a.status == Status::Certified && b.status == Status::Certified {
            prop_assert_eq!(a.sign, b.sign);
        }
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn mvt_never_contradicts_direct_evaluation(n in non_square(), k in 0i64..10, tn in -50i64..400, td in 1i64..20) {
        let p = point(n, k);
        let f = MPoly::parse(&ring(), &format!("x*y - ({tn})/({td})")).unwrap();
        let direct = sign_at_point(&f, &p, &default_schedule()).unwrap();
        let eps = q(1, 1_000_000_000);
        let root = p.root_enclosure(&eps).unwrap();
        let mvt = mvt_sign_bound(&f, &p, &root.mid(), &q(1, 100_000_000), None, &q(1, 1_000_000_000_000)).unwrap();
        if mvt.status == Status::Certified {
            prop_assert_eq!(direct.status, Status::Certified);
            prop_assert_eq!(direct.sign, mvt.sign);
        }
        if direct.status == Status::Falsified {
            prop_assert!(mvt.status != Status::Certified);
        }
    }

    #[test]
    fn extension_enclosure_solves_the_generators(n in non_square(), k in 0i64..10, a in 1i64..9, b in -9i64..9, c in -9i64..9) {
        let p = point(n, k);
        let r = ring();
        // (a*x + 1)*z + (b*y + c) has a nonzero lc at x = sqrt(n) > 0
        let g = MPoly::parse(&r, &format!("({a}*x + 1)*z + {b}*y + {c}")).unwrap();
        let cert = extension_step(std::slice::from_ref(&g), "z", &p, &default_schedule()).unwrap();
        prop_assert_eq!(cert.status, Status::Certified);
        let z = cert.enclosure("z").unwrap().clone();
        let mut boxes = p.boxes(&q(1, 10_000_000_000)).unwrap();
        boxes.insert("z".into(), z);
        prop_assert!(g.evaluate_interval(&boxes).unwrap().contains_zero());
    }
}

#[test]
fn exact_zero_is_falsified() {
    let poly = UPoly::linear_root(&q(1, 2)).mul(&UPoly::from_i64(&[-3, 0, 1]));
    let p = AlgebraicPointSpec::new("x", poly, q(0, 1), q(1, 1)).unwrap();
    let f = MPoly::parse(&ring(), "2*x - 1").unwrap();
    assert_eq!(sign_at_point(&f, &p, &default_schedule()).unwrap().status, Status::Falsified);
}

#[test]
fn vanishing_leading_coefficient_fails_extension() {
    let poly = UPoly::linear_root(&q(0, 1)).mul(&UPoly::from_i64(&[-3, 0, 1]));
    let p = AlgebraicPointSpec::new("x", poly, q(-1, 1), q(1, 1)).unwrap();
    let g = MPoly::parse(&ring(), "x*z - 1").unwrap();
    let cert = extension_step(&[g], "z", &p, &default_schedule()).unwrap();
    assert_eq!(cert.status, Status::Falsified);
}

#[test]
fn two_roots_are_rejected() {
    assert!(AlgebraicPointSpec::new("x", UPoly::from_i64(&[-4, 0, 1]), q(-3, 1), q(3, 1)).is_err());
}
