use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::PrimePower;
use crate::error::{Error, Result};
use crate::exactnum::{IntPoly, QuadraticValue};

/// Half-coefficient vector `(a_1, …, a_g)` of the q-symmetric polynomial
/// `(x^{2g} + q^g) + Σ_{i<g} a_i (x^{2g-i} + q^{g-i} x^i) + a_g x^g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct CoeffTuple {
    q: PrimePower,
    a: Vec<i64>,
}

impl CoeffTuple {
    pub fn new(q: PrimePower, a: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidTuple("dimension must be positive".into()));
        }
        Ok(Self { q, a })
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn g(&self) -> usize {
        self.a.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.a
    }

    /// The degree-2g polynomial this tuple parameterizes.
    pub fn expand(&self) -> IntPoly {
        expand(self)
    }

    /// Reads the tuple back off a monic q-symmetric polynomial of degree `2g`.
    pub fn from_poly(f: &IntPoly, q: PrimePower) -> Result<Self> {
        let g = check_monic_even(f)?;
        if !is_q_symmetric(f, q) {
            return Err(Error::NotSymmetric(f.to_string()));
        }
        let a = (1..=g)
            .map(|i| {
                i64::try_from(f.coeff(2 * g - i))
                    .map_err(|_| Error::InvalidTuple(format!("coefficient overflow in {f}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, a)
    }
}

/// Renders as `q=2 g=2 a=[0,3]`.
impl fmt::Display for CoeffTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "q={} g={} a=[{}]", self.q, self.g(), a.join(","))
    }
}

pub fn expand(t: &CoeffTuple) -> IntPoly {
    let g = t.g();
    let q = BigInt::from(t.q.q());
    let mut c = vec![BigInt::from(0); 2 * g + 1];
    c[2 * g] = BigInt::from(1);
    c[0] = q.pow(g as u32);
    for (idx, &ai) in t.a.iter().enumerate() {
        let i = idx + 1;
        if i == g {
            c[g] += ai;
        } else {
            c[2 * g - i] += ai;
            c[i] += BigInt::from(ai) * q.pow((g - i) as u32);
        }
    }
    IntPoly::new(c)
}

/// Returns `g` for a monic polynomial of degree `2g ≥ 2`.
pub(crate) fn check_monic_even(f: &IntPoly) -> Result<usize> {
    match f.degree() {
        Some(d) if d >= 2 && d % 2 == 0 && f.is_monic() => Ok(d / 2),
        _ => Err(Error::NotMonicEven(f.to_string())),
    }
}

/// `x^{2g} f(q/x) = q^g f(x)`, checked coefficientwise.
pub fn is_q_symmetric(f: &IntPoly, q: PrimePower) -> bool {
    let Some(d) = f.degree() else { return false };
    if d % 2 != 0 {
        return false;
    }
    let g = d / 2;
    let qb = BigInt::from(q.q());
    (1..=g).all(|i| f.coeff(g - i) == qb.pow(i as u32) * f.coeff(g + i))
}

/// The membership predicate for the DiPippo–Howe region: the tuple satisfies
/// `|a_g| / (2q^{g/2}) + Σ_{i<g} |a_i| / q^{i/2} ≤ 1` and `gcd(a_g, q) = 1`.
///
/// Multiplying through by `2q^{g/2}` turns every term into an exact `A + B√q`.
pub fn dh_condition(t: &CoeffTuple) -> bool {
    let g = t.g() as u32;
    let q = t.q.q();
    let a_g = *t.a.last().expect("nonempty");
    if BigInt::from(a_g).gcd(&BigInt::from(q)) != BigInt::from(1) {
        return false;
    }
    let two = BigInt::from(2);
    let mut slack = QuadraticValue::half_power(g, q).scale(&two);
    for (idx, &ai) in t.a.iter().enumerate() {
        let i = idx as u32 + 1;
        let weight = if i == g {
            QuadraticValue::integer(1, q)
        } else {
            QuadraticValue::half_power(g - i, q).scale(&two)
        };
        slack = slack - weight.scale(&BigInt::from(ai.unsigned_abs()));
    }
    slack.sign() >= 0
}
