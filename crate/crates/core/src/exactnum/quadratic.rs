//! Exact values of the form `a + b·√q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact number `a + b·√q` with integer `a`, `b` and radicand `q ≥ 2`.
///
/// `q` need not be squarefree; when it is a perfect square the value is simply an integer, and
/// every operation stays correct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    pub a: BigInt,
    pub b: BigInt,
    pub q: u64,
}

impl QuadraticValue {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidRadicand(q));
        }
        Ok(Self {
            a: a.into(),
            b: b.into(),
            q,
        })
    }

    pub(crate) fn raw(a: BigInt, b: BigInt, q: u64) -> Self {
        debug_assert!(q >= 2);
        Self { a, b, q }
    }

    pub fn integer(a: impl Into<BigInt>, q: u64) -> Self {
        Self::raw(a.into(), BigInt::zero(), q)
    }

    /// `b·√q`.
    pub fn surd(b: impl Into<BigInt>, q: u64) -> Self {
        Self::raw(BigInt::zero(), b.into(), q)
    }

    /// `q^(k/2)` for a nonnegative half-integer exponent `k/2`.
    pub fn half_power(k: u32, q: u64) -> Self {
        let base = BigInt::from(q).pow(k / 2);
        if k % 2 == 0 {
            Self::integer(base, q)
        } else {
            Self::surd(base, q)
        }
    }

    pub fn zero(q: u64) -> Self {
        Self::integer(0, q)
    }

    pub fn sign(&self) -> i8 {
        qv_sign(self)
    }

    pub fn is_zero(&self) -> bool {
        qv_sign(self) == 0
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::raw(&self.a * k, &self.b * k, self.q)
    }

    pub fn abs(&self) -> Self {
        if qv_sign(self) < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Largest integer `n` with `n ≤ a + b√q`.
    pub fn floor(&self) -> BigInt {
        &self.a + floor_surd(&self.b, self.q)
    }

    /// Smallest integer `n` with `n ≥ a + b√q`.
    pub fn ceil(&self) -> BigInt {
        -(-self.clone()).floor()
    }

    /// `max(0, ⌊self / w⌋)` for a divisor `w` that is a positive integer or a positive integer
    /// multiple of `√q`.
    ///
    /// Used to turn a residual budget into the largest admissible absolute coefficient.
    pub fn max_multiple_within(&self, w: &QuadraticValue) -> BigInt {
        assert_eq!(self.q, w.q, "radicand mismatch");
        assert!(
            w.a.is_zero() || w.b.is_zero(),
            "divisor must be c or c*sqrt(q)"
        );
        assert!(w.sign() > 0, "divisor must be positive");
        if self.sign() < 0 {
            return BigInt::zero();
        }
        // w ≥ 1, so the answer never exceeds ⌊self⌋.
        // Invariant: self - lo·w ≥ 0 and self - hi·w < 0.
        let mut lo = BigInt::zero();
        let mut hi = self.floor() + BigInt::one();
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if (self - &w.scale(&mid)).sign() >= 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn check_q(&self, other: &Self) {
        assert_eq!(self.q, other.q, "QuadraticValue radicand mismatch");
    }
}

/// `⌊b·√q⌋`, exact.
fn floor_surd(b: &BigInt, q: u64) -> BigInt {
    let sq = b * b * BigInt::from(q);
    let r = sq.sqrt();
    if !b.is_negative() {
        r
    } else if &r * &r == sq {
        -r
    } else {
        -r - 1
    }
}

/// Exact sign of `a + b·√q`, decided from the signs of `a`, `b` and a comparison of `a²` with
/// `b²·q`.
pub fn qv_sign(v: &QuadraticValue) -> i8 {
    let sa = sign_of(&v.a);
    let sb = sign_of(&v.b);
    if sa == 0 {
        return sb;
    }
    if sb == 0 || sa == sb {
        return sa;
    }
    let a2 = &v.a * &v.a;
    let b2q = &v.b * &v.b * BigInt::from(v.q);
    match a2.cmp(&b2q) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadraticValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.q != other.q {
            return None;
        }
        Some(match qv_sign(&(self.clone() - other.clone())) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }
}

impl Add for QuadraticValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check_q(&rhs);
        Self::raw(self.a + rhs.a, self.b + rhs.b, self.q)
    }
}

impl<'a> Add<&'a QuadraticValue> for &'a QuadraticValue {
    type Output = QuadraticValue;
    fn add(self, rhs: Self) -> QuadraticValue {
        self.check_q(rhs);
        QuadraticValue::raw(&self.a + &rhs.a, &self.b + &rhs.b, self.q)
    }
}

impl Sub for QuadraticValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check_q(&rhs);
        Self::raw(self.a - rhs.a, self.b - rhs.b, self.q)
    }
}

impl<'a> Sub<&'a QuadraticValue> for &'a QuadraticValue {
    type Output = QuadraticValue;
    fn sub(self, rhs: Self) -> QuadraticValue {
        self.check_q(rhs);
        QuadraticValue::raw(&self.a - &rhs.a, &self.b - &rhs.b, self.q)
    }
}

impl<'a> Mul<&'a QuadraticValue> for &'a QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, rhs: Self) -> QuadraticValue {
        self.check_q(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * BigInt::from(self.q);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticValue::raw(a, b, self.q)
    }
}

impl Mul for QuadraticValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for QuadraticValue {
    type Output = Self;
    fn neg(self) -> Self {
        Self::raw(-self.a, -self.b, self.q)
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.q)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.q)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.q)
        }
    }
}
