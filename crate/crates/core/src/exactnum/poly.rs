//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::quadratic::QuadraticValue;
use crate::error::{Error, Result};

/// Integer polynomial, coefficients lowest degree first.
///
/// The representation is kept normalized: no trailing zero coefficients, and the zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Result of [`IntPoly::divrem`].
///
/// `scale · dividend = quotient · divisor + remainder`. `scale` is `1` (and `exact` is `true`)
/// whenever every leading-coefficient division was exact, in particular for monic divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivRem {
    pub quotient: IntPoly,
    pub remainder: IntPoly,
    pub scale: BigInt,
    pub exact: bool,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division with remainder.
    ///
    /// Falls back to pseudo-division (multiplying the dividend by powers of the divisor's
    /// leading coefficient) whenever a leading-coefficient division is inexact.
    pub fn divrem(&self, d: &Self) -> Result<DivRem> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut scale = BigInt::one();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let lc = rem[top].clone();
            let shift = top - dd;
            let (qc, r) = lc.div_rem(&dl);
            let qc = if r.is_zero() {
                qc
            } else {
                // Pseudo step: multiply everything accumulated so far by dl.
                for c in rem.iter_mut() {
                    *c *= &dl;
                }
                for c in quot.iter_mut() {
                    *c *= &dl;
                }
                scale *= &dl;
                lc
            };
            for (k, dc) in d.coeffs.iter().enumerate() {
                rem[shift + k] -= &qc * dc;
            }
            debug_assert!(rem[top].is_zero());
            quot[shift] = qc;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        let exact = scale.is_one();
        Ok(DivRem {
            quotient: Self::new(quot),
            remainder: Self::new(rem),
            scale,
            exact,
        })
    }

    /// Exact quotient `self / d` if `d` divides `self` over the integers.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let dr = self.divrem(d)?;
        if dr.remainder.is_zero() && dr.exact {
            Ok(Some(dr.quotient))
        } else if dr.remainder.is_zero() {
            // scale·self = quot·d; divisibility over Z requires scale | quot.
            let (q, r) = divide_coeffs(&dr.quotient, &dr.scale);
            Ok(r.then_some(q))
        } else {
            Ok(None)
        }
    }

    /// Remainder of pseudo-division, made primitive.
    pub fn prem_primitive(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.remainder.primitive_part())
    }

    /// Greatest common divisor over `Q`, returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem_primitive(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// The squarefree part `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return Ok(self.primitive_part());
        }
        let pp = self.primitive_part();
        let q = pp.exact_div(&g)?.expect("gcd divides its argument");
        Ok(q.primitive_part())
    }

    /// Squarefree decomposition: `(k, s_k)` pairs with `primitive_part(self) = ± Π s_k^k`, each
    /// `s_k` squarefree, primitive and nonconstant, ordered by `k`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(u32, Self)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_part();
        let mut out = Vec::new();
        let mut g = f.gcd(&f.derivative());
        let mut w = f.exact_div(&g)?.expect("gcd divides").primitive_part();
        let mut k = 1u32;
        while w.deg() > 0 {
            let y = w.gcd(&g);
            let z = w.exact_div(&y)?.expect("gcd divides").primitive_part();
            if z.deg() > 0 {
                out.push((k, z));
            }
            g = g.exact_div(&y)?.expect("gcd divides").primitive_part();
            w = y;
            k += 1;
        }
        Ok(out)
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at `a + b√q`.
    pub fn eval_qv(&self, x: &QuadraticValue) -> QuadraticValue {
        let q = x.q;
        let mut acc = QuadraticValue::zero(q);
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc.a += c;
        }
        acc
    }

    /// Sign of `self` at `x`, without materializing the full value when `x` is an integer.
    pub fn sign_at(&self, x: &QuadraticValue) -> i8 {
        if x.b.is_zero() {
            let v = self.eval(&x.a);
            return if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
        }
        self.eval_qv(x).sign()
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        let lin = Self::new(vec![c.clone(), BigInt::one()]);
        let mut acc = Self::zero();
        for coef in self.coeffs.iter().rev() {
            acc = acc.mul(&lin) + Self::constant(coef.clone());
        }
        acc
    }
}

fn divide_coeffs(p: &IntPoly, s: &BigInt) -> (IntPoly, bool) {
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        let (q, r) = c.div_rem(s);
        if !r.is_zero() {
            return (IntPoly::zero(), false);
        }
        out.push(q);
    }
    (IntPoly::new(out), true)
}

impl Add for IntPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: Self) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: Self) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for IntPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: Self) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl Neg for IntPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

/// Renders as `x^4 + 3*x^2 + 4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
