//! Sturm chains with exact evaluation at `a + b√q` points.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::quadratic::QuadraticValue;
use crate::error::{Error, Result};

/// Signed-remainder chain of a squarefree polynomial, each element reduced by its (positive)
/// content so coefficients stay small.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

/// Divides by the positive content, keeping the sign of every coefficient.
fn reduce_content(p: &IntPoly) -> IntPoly {
    let c = p.content();
    if c.is_zero() || c == BigInt::from(1) {
        return p.clone();
    }
    IntPoly::new(p.coeffs().iter().map(|x| x / &c).collect())
}

impl SturmChain {
    /// Chain of `p`'s squarefree part.
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::of_squarefree(p.squarefree_part()?))
    }

    /// Builds the chain of `p` assuming it is already squarefree; if it is not, the chain ends in
    /// a nonconstant gcd (see [`SturmChain::is_squarefree_chain`]).
    pub(crate) fn of_squarefree(p: IntPoly) -> Self {
        let p0 = p.primitive_part();
        let mut polys = vec![p0.clone()];
        if p0.deg() == 0 {
            return Self { polys };
        }
        polys.push(reduce_content(&p0.derivative()));
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let dr = a.divrem(b).expect("nonzero divisor");
            if dr.remainder.is_zero() {
                break;
            }
            // true remainder = r / scale; next element is its negation, up to positive factors.
            let r = if dr.scale.is_negative() {
                dr.remainder
            } else {
                -dr.remainder
            };
            polys.push(reduce_content(&r));
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Whether the last element is a nonzero constant, i.e. the source was squarefree.
    pub fn is_squarefree_chain(&self) -> bool {
        self.polys.last().is_some_and(|p| p.deg() == 0)
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations(&self, x: &QuadraticValue) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for p in &self.polys {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &QuadraticValue, hi: &QuadraticValue) -> Result<usize> {
        if !matches!(lo.partial_cmp(hi), Some(std::cmp::Ordering::Less)) {
            return Err(Error::InvalidInterval);
        }
        let vl = self.variations(lo);
        let vh = self.variations(hi);
        Ok(vl.saturating_sub(vh))
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count_real_roots_in(
    p: &IntPoly,
    lo: &QuadraticValue,
    hi: &QuadraticValue,
) -> Result<usize> {
    SturmChain::new(p)?.count_in(lo, hi)
}

/// Whether every complex root of `p` is real and lies in the closed interval `[lo, hi]`.
///
/// Multiplicities are irrelevant: the roots of `p` are the roots of its squarefree part.
pub fn all_roots_real_in(p: &IntPoly, lo: &QuadraticValue, hi: &QuadraticValue) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(true);
    }
    let mut chain = SturmChain::of_squarefree(p.clone());
    if !chain.is_squarefree_chain() {
        chain = SturmChain::of_squarefree(p.squarefree_part()?);
    }
    let s = &chain.polys[0];
    let inside = chain.count_in(lo, hi)? + usize::from(s.sign_at(lo) == 0);
    Ok(inside == s.deg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(a: i64, b: i64, q: u64) -> QuadraticValue {
        QuadraticValue::new(a, b, q).unwrap()
    }

    fn two_sqrt_two() -> (QuadraticValue, QuadraticValue) {
        (qv(0, -2, 2), qv(0, 2, 2))
    }

    #[test]
    fn count_examples() {
        let (lo, hi) = two_sqrt_two();
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 2);
        let p = IntPoly::from_i64(&[-9, 0, 1]);
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 0);
        let p = IntPoly::from_i64(&[0, -3, 0, 1]);
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 3);
    }

    #[test]
    fn rejects_zero_and_empty_interval() {
        let (lo, hi) = two_sqrt_two();
        assert!(sturm_count_real_roots_in(&IntPoly::zero(), &lo, &hi).is_err());
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert!(sturm_count_real_roots_in(&p, &hi, &lo).is_err());
    }

    #[test]
    fn half_open_endpoints() {
        // t^2 - 8 has roots ±2√2: only the right endpoint is counted.
        let (lo, hi) = two_sqrt_two();
        let p = IntPoly::from_i64(&[-8, 0, 1]);
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 1);
        assert!(all_roots_real_in(&p, &lo, &hi).unwrap());
    }

    #[test]
    fn repeated_roots() {
        let (lo, hi) = two_sqrt_two();
        // (t - 1)^2 (t + 2)
        let p = IntPoly::from_i64(&[-1, 1])
            .pow(2)
            .mul(&IntPoly::from_i64(&[2, 1]));
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 2);
        assert!(all_roots_real_in(&p, &lo, &hi).unwrap());
        // (t^2 + 1)^2 has no real roots
        let p = IntPoly::from_i64(&[1, 0, 1]).pow(2);
        assert!(!all_roots_real_in(&p, &lo, &hi).unwrap());
    }

    #[test]
    fn negative_leading_coefficient() {
        let (lo, hi) = two_sqrt_two();
        let p = IntPoly::from_i64(&[2, 0, -1]);
        assert_eq!(sturm_count_real_roots_in(&p, &lo, &hi).unwrap(), 2);
    }

    #[test]
    fn chain_shape() {
        let p = IntPoly::from_i64(&[0, -3, 0, 1]);
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.polys()[0], p);
        assert_eq!(c.polys()[1], IntPoly::from_i64(&[-1, 0, 1]));
        for w in c.polys().windows(2) {
            assert!(w[1].deg() < w[0].deg());
        }
    }
}
