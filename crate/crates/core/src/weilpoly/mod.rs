//! Weil q-polynomials: the symmetric parameterization, the real Weil transform and exact
//! membership tests.

mod prime_power;
mod transform;
mod tuple;

pub(crate) use prime_power::is_prime;
pub use prime_power::PrimePower;
pub(crate) use transform::{basis_entry, binomial};
pub use transform::{from_real_weil, to_real_weil, RealWeilPoly};
pub use tuple::{dh_condition, expand, is_q_symmetric, CoeffTuple};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{all_roots_real_in, IntPoly, QuadraticValue};

/// `[-2√q, 2√q]` as exact endpoints.
pub fn real_interval(q: PrimePower) -> (QuadraticValue, QuadraticValue) {
    let q = q.q();
    (QuadraticValue::surd(-2, q), QuadraticValue::surd(2, q))
}

/// Whether `h` has all its roots real and inside `[-2√q, 2√q]`.
pub fn is_real_weil(h: &IntPoly, q: PrimePower) -> bool {
    let (lo, hi) = real_interval(q);
    all_roots_real_in(h, &lo, &hi).expect("nonzero polynomial, ordered interval")
}

/// Exact Weil test for a monic integer polynomial of even degree: q-symmetric, and the real
/// Weil transform has all roots real in `[-2√q, 2√q]`.
///
/// Errors on non-monic or odd-degree input; a non-symmetric polynomial is simply not Weil.
pub fn is_weil(f: &IntPoly, q: PrimePower) -> Result<bool> {
    tuple::check_monic_even(f)?;
    if !is_q_symmetric(f, q) {
        return Ok(false);
    }
    let h = to_real_weil(f, q)?;
    Ok(is_real_weil(h.poly(), q))
}

/// A certified Weil q-polynomial of degree `2g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilPoly {
    q: PrimePower,
    poly: IntPoly,
}

impl WeilPoly {
    pub fn new(poly: IntPoly, q: PrimePower) -> Result<Self> {
        if !is_weil(&poly, q)? {
            return Err(Error::NotWeil(poly.to_string()));
        }
        Ok(Self { q, poly })
    }

    pub fn from_tuple(t: &CoeffTuple) -> Result<Self> {
        Self::new(t.expand(), t.q())
    }

    /// Skips certification; for polynomials already known to be Weil.
    pub(crate) fn new_unchecked(poly: IntPoly, q: PrimePower) -> Self {
        debug_assert!(is_weil(&poly, q).unwrap_or(false));
        Self { q, poly }
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn g(&self) -> usize {
        self.poly.deg() / 2
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn tuple(&self) -> CoeffTuple {
        CoeffTuple::from_poly(&self.poly, self.q).expect("Weil polynomials are symmetric")
    }

    pub fn real_weil(&self) -> RealWeilPoly {
        to_real_weil(&self.poly, self.q).expect("Weil polynomials are symmetric")
    }

    /// The coefficient of `x^g`.
    pub fn middle_coefficient(&self) -> BigInt {
        self.poly.coeff(self.g())
    }
}

/// Ordinary iff the middle coefficient is prime to `p`.
pub fn is_ordinary(w: &WeilPoly) -> bool {
    w.middle_coefficient().gcd(&BigInt::from(w.q.p())).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn weil_examples() {
        assert!(!is_weil(&IntPoly::from_i64(&[2, -3, 1]), pp(2)).unwrap());
        assert!(is_weil(&IntPoly::from_i64(&[2, 0, 1]), pp(2)).unwrap());
        assert!(is_weil(&IntPoly::from_i64(&[4, 0, 3, 0, 1]), pp(2)).unwrap());
        assert!(is_weil(&IntPoly::from_i64(&[4, 2, 1, 1, 1]), pp(2)).unwrap());
        // (x^2 - 2)^2 has the real roots ±√2, i.e. h = t^2 with a double root at 0
        assert!(is_weil(&IntPoly::from_i64(&[4, 0, -4, 0, 1]), pp(2)).unwrap());
        // x = ±√q gives t = ±2√q: endpoints are inside
        let h_end = IntPoly::from_i64(&[-8, 0, 1]);
        assert!(is_weil(&from_real_weil(&h_end, pp(2)), pp(2)).unwrap());
    }

    #[test]
    fn weil_rejects_malformed() {
        assert!(is_weil(&IntPoly::from_i64(&[2, 1, 0, 1]), pp(2)).is_err());
        assert!(is_weil(&IntPoly::from_i64(&[2, 1, 2]), pp(2)).is_err());
        assert!(is_weil(&IntPoly::from_i64(&[2]), pp(2)).is_err());
    }

    #[test]
    fn genus_one_criterion() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for a in -12i64..=12 {
                let f = IntPoly::from_i64(&[q as i64, a, 1]);
                assert_eq!(
                    is_weil(&f, pp(q)).unwrap(),
                    a * a <= 4 * q as i64,
                    "q={q} a={a}"
                );
            }
        }
    }

    #[test]
    fn ordinary_examples() {
        let w = |c: &[i64]| WeilPoly::new(IntPoly::from_i64(c), pp(2)).unwrap();
        assert!(is_ordinary(&w(&[2, 1, 1])));
        assert!(!is_ordinary(&w(&[2, 0, 1])));
        assert!(is_ordinary(&w(&[4, 0, 3, 0, 1])));
        // q = 4: p = 2 decides ordinarity, not q
        let w4 = WeilPoly::new(IntPoly::from_i64(&[4, 2, 1]), pp(4)).unwrap();
        assert!(!is_ordinary(&w4));
    }

    #[test]
    fn weilpoly_rejects_non_weil() {
        assert!(WeilPoly::new(IntPoly::from_i64(&[2, 3, 1]), pp(2)).is_err());
    }
}
