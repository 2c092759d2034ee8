use std::collections::BTreeSet;

use crosscc_core::exactnum::BigRational;
use crosscc_core::multipoly::scalar_det;
use crosscc_core::univar::{count_roots, isolate_all_roots, isolate_root, resultant_wrt, sturm_sequence};
use crosscc_core::{MPoly, UPoly, VarTable};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Rational roots with multiplicities, an optional root-free quadratic
/// factor and a nonzero scale.
#[derive(Debug, Clone)]
struct Factored {
    roots: Vec<(BigRational, u32)>,
    quad: Option<i64>,
    scale: i64,
}

impl Factored {
    fn expand(&self) -> UPoly {
        let mut p = UPoly::constant(q(self.scale, 1));
        for (r, m) in &self.roots {
            p = p.mul(&UPoly::linear_root(r).pow(*m));
        }
        if let Some(c) = self.quad {
            p = p.mul(&UPoly::from_i64(&[c, 0, 1]));
        }
        p
    }

    fn distinct_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.roots.iter().map(|(r, _)| r.clone()).filter(|r| r > a && r <= b).collect::<BTreeSet<_>>().len()
    }
}

fn factored() -> impl Strategy<Value = Factored> {
    (
        prop::collection::vec(((-30i64..=30, 1i64..=4), 1u32..=3), 0..=5),
        prop::option::of(1i64..=9),
        prop_oneof![-5i64..=-1, 1i64..=5],
    )
        .prop_map(|(rs, quad, scale)| Factored { roots: rs.into_iter().map(|((n, d), m)| (q(n, d), m)).collect(), quad, scale })
}

fn interval() -> impl Strategy<Value = (BigRational, BigRational)> {
    (-40i64..=40, 1i64..=80).prop_map(|(a, w)| (q(a, 2), q(a + w, 2)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn sturm_counts_distinct_roots((f, (a, b)) in (factored(), interval())) {
        let p = f.expand();
        prop_assume!(!p.is_constant_like());
        prop_assert_eq!(count_roots(&p, &a, &b).unwrap(), f.distinct_in(&a, &b));
    }

    #[test]
    fn sturm_sequence_shape(f in factored()) {
        let p = f.expand();
        prop_assume!(!p.is_constant_like());
        let seq = sturm_sequence(&p).unwrap();
        prop_assert!(!seq.last().unwrap().is_zero());
        prop_assert_eq!(seq.last().unwrap().degree(), Some(0));
        prop_assert_eq!(seq[0].lc().is_positive(), p.lc().is_positive());
        for w in seq.windows(2) {
            prop_assert!(w[1].degree() < w[0].degree());
        }
    }

    #[test]
    fn isolation_brackets_exactly_one_root(f in factored(), k in 1u32..40) {
        let p = f.expand();
        prop_assume!(!p.is_constant_like());
        let eps = q(1, 1 << (k % 30 + 1));
        let roots = isolate_all_roots(&p, &eps).unwrap();
        let distinct: BTreeSet<BigRational> = f.roots.iter().map(|(r, _)| r.clone()).collect();
        prop_assert_eq!(roots.len(), distinct.len());
        for (iv, r) in roots.iter().zip(distinct.iter()) {
            prop_assert!(iv.width() <= eps);
            prop_assert!(iv.contains(r));
            if !iv.is_point() {
                prop_assert_eq!(count_roots(&p, iv.lo(), iv.hi()).unwrap(), 1);
                let sf = p.square_free_part();
                prop_assert!(sf.sign_at(iv.hi()) != core::cmp::Ordering::Equal || iv.hi() == r);
            }
        }
    }

    #[test]
    fn isolate_root_refuses_non_isolating(f in factored()) {
        let p = f.expand();
        let distinct: BTreeSet<BigRational> = f.roots.iter().map(|(r, _)| r.clone()).collect();
        prop_assume!(distinct.len() >= 2);
        let lo = distinct.iter().next().unwrap() - BigRational::one();
        let hi = distinct.iter().last().unwrap().clone();
        prop_assert!(isolate_root(&p, &lo, &hi, &q(1, 100)).is_err());
    }
}

trait ConstLike {
    fn is_constant_like(&self) -> bool;
}

impl ConstLike for UPoly {
    fn is_constant_like(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }
}

fn bivariate() -> impl Strategy<Value = String> {
    prop::collection::vec(((0u32..=3, 0u32..=2), -6i64..=6), 1..=5).prop_map(|ts| {
        let body: Vec<String> = ts.iter().map(|((a, b), c)| format!("({c})*x^{a}*y^{b}")).collect();
        body.join(" + ")
    })
}

/// Scalar Sylvester determinant in `x` of two univariate polynomials.
fn sylvester_det(f: &UPoly, g: &UPoly) -> BigRational {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![BigRational::zero(); size];
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    scalar_det(&rows).unwrap()
}

fn specialize_y(p: &MPoly, y: &BigRational) -> UPoly {
    let r = p.ring().clone();
    let s = p.substitute("y", &MPoly::constant(&r, y.clone())).unwrap();
    UPoly::from_mpoly(&s, r.index("x").unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn resultant_specializes(fs in bivariate(), gs in bivariate(), yn in -9i64..=9, yd in 1i64..=4) {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let f = MPoly::parse(&r, &fs).unwrap();
        let g = MPoly::parse(&r, &gs).unwrap();
        let xi = r.index("x").unwrap();
        prop_assume!(f.degree_in(xi) > 0 && g.degree_in(xi) > 0);
        let y = q(yn, yd);
        let (fy, gy) = (specialize_y(&f, &y), specialize_y(&g, &y));
        // degrees must not drop under specialization for the identity to hold
        prop_assume!(fy.degree() == Some(f.degree_in(xi) as usize) && gy.degree() == Some(g.degree_in(xi) as usize));
        let res = resultant_wrt(&f, &g, "x").unwrap();
        let mut pt = std::collections::BTreeMap::new();
        pt.insert("x".to_string(), BigRational::zero());
        pt.insert("y".to_string(), y);
        prop_assert_eq!(res.evaluate(&pt).unwrap(), sylvester_det(&fy, &gy));
    }

    #[test]
    fn resultant_vanishes_on_common_factor(hs in bivariate(), us in bivariate(), ws in bivariate()) {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let xi = r.index("x").unwrap();
        let h = MPoly::parse(&r, &hs).unwrap();
        prop_assume!(h.degree_in(xi) > 0);
        let f = h.arith(&MPoly::parse(&r, &us).unwrap(), crosscc_core::multipoly::PolyOp::Mul).unwrap();
        let g = h.arith(&MPoly::parse(&r, &ws).unwrap(), crosscc_core::multipoly::PolyOp::Mul).unwrap();
        prop_assert!(resultant_wrt(&f, &g, "x").unwrap().is_zero());
    }

    #[test]
    fn rescaling_scales_the_resultant(fs in bivariate(), gs in bivariate(), c in prop_oneof![-7i64..=-1, 1i64..=7]) {
        let r = VarTable::new(&["x", "y"]).unwrap();
        let xi = r.index("x").unwrap();
        let f = MPoly::parse(&r, &fs).unwrap();
        let g = MPoly::parse(&r, &gs).unwrap();
        prop_assume!(f.degree_in(xi) > 0 && g.degree_in(xi) > 0);
        let a = resultant_wrt(&f, &g, "x").unwrap();
        let b = resultant_wrt(&f.scale(&q(c, 1)), &g, "x").unwrap();
        let factor = q(c, 1).pow(g.degree_in(xi) as i32);
        prop_assert_eq!(b, a.scale(&factor));
    }
}
