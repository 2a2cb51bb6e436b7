//! Exact arithmetic substrate: integer polynomials, `a + b√q` values and Sturm root counting.
//!
//! Nothing in here touches floating point.

pub mod poly;
pub mod quadratic;
pub mod rational;
pub mod sturm;

pub use poly::{DivRem, IntPoly};
pub use quadratic::{qv_sign, QuadraticValue};
pub use rational::{format_rational, parse_rational};
pub use sturm::{all_roots_real_in, sturm_count_real_roots_in, SturmChain};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64(&c))
    }

    fn monic_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..=max_deg).prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64(&c)
        })
    }

    #[test]
    fn mul_divrem_examples() {
        let f = IntPoly::from_i64(&[2, 1, 1]);
        let g = IntPoly::from_i64(&[2, -1, 1]);
        let prod = f.mul(&g);
        assert_eq!(prod, IntPoly::from_i64(&[4, 0, 3, 0, 1]));
        let dr = prod.divrem(&f).unwrap();
        assert_eq!(dr.quotient, g);
        assert!(dr.remainder.is_zero());
        assert!(dr.exact);
        let sq = IntPoly::from_i64(&[-1, 1]).pow(2);
        assert_eq!(sq.squarefree_part().unwrap(), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn divrem_by_zero() {
        assert!(IntPoly::x().divrem(&IntPoly::zero()).is_err());
    }

    #[test]
    fn pseudo_division_flagged() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        let d = IntPoly::from_i64(&[1, 2]);
        let dr = p.divrem(&d).unwrap();
        assert!(!dr.exact);
        let lhs = p.scale(&dr.scale);
        assert_eq!(lhs, &dr.quotient.mul(&d) + &dr.remainder);
    }

    #[test]
    fn content_and_decomposition() {
        let p = IntPoly::from_i64(&[6, -4, 2]);
        assert_eq!(p.content(), 2.into());
        // (x-1)^3 (x+2)^2 (x^2+1)
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[2, 1]);
        let c = IntPoly::from_i64(&[1, 0, 1]);
        let f = a.pow(3).mul(&b.pow(2)).mul(&c);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(1, c), (2, b), (3, a)]);
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64(&[4, 0, 3, 0, 1]).to_string(),
            "x^4 + 3*x^2 + 4"
        );
        assert_eq!(
            IntPoly::from_i64(&[-2, -1, 0, 2]).to_string(),
            "2*x^3 - x - 2"
        );
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn monic_divrem_roundtrip(p in poly_strategy(6), d in monic_strategy(4)) {
            let dr = p.mul(&d).divrem(&d).unwrap();
            prop_assert!(dr.exact);
            prop_assert_eq!(dr.quotient, p);
            prop_assert!(dr.remainder.is_zero());
        }

        #[test]
        fn sturm_counts_are_additive(p in poly_strategy(6), a in -30i64..30, w1 in 1i64..20, w2 in 1i64..20, bq in -5i64..5) {
            prop_assume!(!p.is_zero());
            let q = 3;
            let lo = QuadraticValue::new(a, bq, q).unwrap();
            let mid = QuadraticValue::new(a + w1, bq, q).unwrap();
            let hi = QuadraticValue::new(a + w1 + w2, bq, q).unwrap();
            let left = sturm_count_real_roots_in(&p, &lo, &mid).unwrap();
            let right = sturm_count_real_roots_in(&p, &mid, &hi).unwrap();
            let all = sturm_count_real_roots_in(&p, &lo, &hi).unwrap();
            prop_assert_eq!(left + right, all);
        }

        #[test]
        fn sturm_matches_product_of_linear_factors(roots in prop::collection::vec(-6i64..=6, 1..6)) {
            let p = roots.iter().fold(IntPoly::one(), |acc, &r| acc.mul(&IntPoly::from_i64(&[-r, 1])));
            let lo = QuadraticValue::new(-3, 0, 2).unwrap();
            let hi = QuadraticValue::new(3, 0, 2).unwrap();
            let mut distinct: Vec<i64> = roots.clone();
            distinct.sort();
            distinct.dedup();
            let expected = distinct.iter().filter(|&&r| r > -3 && r <= 3).count();
            prop_assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), expected);
        }
    }
}
