//! The change of variables `F(x) = x^g h(x + q/x)` between q-symmetric polynomials of degree `2g`
//! and monic polynomials of degree `g`.

use num_bigint::BigInt;
use num_traits::One;

use super::tuple::{check_monic_even, is_q_symmetric};
use super::PrimePower;
use crate::error::{Error, Result};
use crate::exactnum::IntPoly;

/// Monic degree-`g` polynomial `h` with `F(x) = x^g h(x + q/x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealWeilPoly {
    q: PrimePower,
    h: IntPoly,
}

impl RealWeilPoly {
    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn g(&self) -> usize {
        self.h.deg()
    }

    pub fn poly(&self) -> &IntPoly {
        &self.h
    }

    /// `x^g h(x + q/x)`.
    pub fn expand_back(&self) -> IntPoly {
        from_real_weil(&self.h, self.q)
    }
}

/// Entry `(i, k)` of the unit lower-triangular matrix taking `(t_0, …, t_g)` (top coefficients
/// of `h`) to `(a_0, …, a_g)` (top coefficients of `F`): `C(g-k, (i-k)/2) q^{(i-k)/2}` when
/// `i - k` is even and nonnegative, else zero.
pub(crate) fn basis_entry(g: usize, i: usize, k: usize, q: u64) -> BigInt {
    if k > i || (i - k) % 2 != 0 {
        return BigInt::from(0);
    }
    let j = (i - k) / 2;
    binomial(g - k, j) * BigInt::from(q).pow(j as u32)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Top coefficients `t_1..t_g` of `h` from `a_1..a_g`.
pub(crate) fn t_from_a(a: &[BigInt], q: u64) -> Vec<BigInt> {
    let g = a.len();
    let mut t: Vec<BigInt> = Vec::with_capacity(g + 1);
    t.push(BigInt::one());
    for i in 1..=g {
        let mut ti = a[i - 1].clone();
        for (k, tk) in t.iter().enumerate().take(i) {
            if (i - k) % 2 == 0 {
                ti -= basis_entry(g, i, k, q) * tk;
            }
        }
        t.push(ti);
    }
    t.remove(0);
    t
}

/// `x^g h(x + q/x)` for monic `h` of degree `g`.
pub fn from_real_weil(h: &IntPoly, q: PrimePower) -> IntPoly {
    let g = h.deg();
    let x2q = IntPoly::new(vec![BigInt::from(q.q()), BigInt::from(0), BigInt::one()]);
    let mut out = IntPoly::zero();
    // h = Σ_k t_k t^{g-k} with t_k the coefficient of t^{g-k}.
    for k in 0..=g {
        let tk = h.coeff(g - k);
        if tk == BigInt::from(0) {
            continue;
        }
        let term = IntPoly::monomial(tk, k).mul(&x2q.pow((g - k) as u32));
        out = &out + &term;
    }
    out
}

/// Inverts `F(x) = x^g h(x + q/x)`; rejects input that is not monic of even degree or not
/// q-symmetric.
pub fn to_real_weil(f: &IntPoly, q: PrimePower) -> Result<RealWeilPoly> {
    let g = check_monic_even(f)?;
    if !is_q_symmetric(f, q) {
        return Err(Error::NotSymmetric(f.to_string()));
    }
    let a: Vec<BigInt> = (1..=g).map(|i| f.coeff(2 * g - i)).collect();
    let t = t_from_a(&a, q.q());
    let mut coeffs: Vec<BigInt> = t.into_iter().rev().collect();
    coeffs.push(BigInt::one());
    Ok(RealWeilPoly {
        q,
        h: IntPoly::new(coeffs),
    })
}
