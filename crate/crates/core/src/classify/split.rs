//! Splitting a Weil polynomial as a product of two Weil polynomials.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::factor::rational_factors;
use crate::exactnum::{IntPoly, QuadraticValue};
use crate::weilpoly::{binomial, is_weil, CoeffTuple, WeilPoly};

/// Top-first coefficients of `F(a)`.
fn top_first(t: &CoeffTuple) -> Vec<BigInt> {
    let mut v = t.expand().coeffs().to_vec();
    v.reverse();
    v
}

/// Given `c` of dimension `m + n` and `a` of dimension `n`, solves for the `b` of dimension `m`
/// with `F(c) = F(a)·F(b)`, if there is one.
///
/// Each `b_i` is read off from coefficient `i` of the product, where it appears with coefficient
/// one next to already-known terms; the candidate is then checked by multiplying out.
pub fn reconstruct_cofactor(c: &CoeffTuple, a: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    let g = c.g();
    if n == 0 || n >= g {
        return None;
    }
    let m = g - n;
    let q = c.q();
    let ta = CoeffTuple::new(q, a.to_vec()).ok()?;
    let fa = top_first(&ta);
    let mut fb: Vec<BigInt> = vec![BigInt::from(1)];
    for i in 1..=m {
        let known: BigInt = (1..=i.min(2 * n)).map(|j| &fa[j] * &fb[i - j]).sum();
        fb.push(BigInt::from(c.coeffs()[i - 1]) - known);
    }
    let b: Vec<i64> = fb[1..].iter().map(|x| x.to_i64()).collect::<Option<_>>()?;
    let tb = CoeffTuple::new(q, b.clone()).ok()?;
    (&ta.expand() * &tb.expand() == c.expand()).then_some(b)
}

/// `⌊C(2n, i)·q^{i/2}⌋`: the coefficient bound for any Weil polynomial of dimension `n`.
pub(crate) fn weil_coeff_bound(n: usize, i: usize, q: u64) -> i64 {
    QuadraticValue::half_power(i as u32, q)
        .scale(&binomial(2 * n, i))
        .floor()
        .to_i64()
        .expect("bound fits in i64")
}

fn pair(w: &WeilPoly, a: Vec<i64>, b: Vec<i64>) -> Option<(WeilPoly, WeilPoly)> {
    let q = w.q();
    let fa = CoeffTuple::new(q, a).ok()?.expand();
    let fb = CoeffTuple::new(q, b).ok()?.expand();
    if !(is_weil(&fa, q).ok()? && is_weil(&fb, q).ok()?) {
        return None;
    }
    Some((
        WeilPoly::new_unchecked(fa, q),
        WeilPoly::new_unchecked(fb, q),
    ))
}

/// Split search by walking every candidate `a` in the coefficient box in lexicographic order.
///
/// Exponential in the factor dimension; kept as the reference the faster search is tested
/// against.
pub fn find_weil_split_exhaustive(w: &WeilPoly) -> Option<(WeilPoly, WeilPoly)> {
    (1..=w.g() / 2).find_map(|n| split_at_exhaustive(w, n))
}

pub fn split_at_exhaustive(w: &WeilPoly, n: usize) -> Option<(WeilPoly, WeilPoly)> {
    let g = w.g();
    if n == 0 || 2 * n > g {
        return None;
    }
    let c = w.tuple();
    let q = w.q().q();
    let bounds: Vec<i64> = (1..=n).map(|i| weil_coeff_bound(n, i, q)).collect();
    let mut a: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        if let Some(b) = reconstruct_cofactor(&c, &a) {
            if let Some(found) = pair(w, a.clone(), b) {
                return Some(found);
            }
        }
        // odometer, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if a[i] < bounds[i] {
                a[i] += 1;
                for (aj, bj) in a[i + 1..].iter_mut().zip(&bounds[i + 1..]) {
                    *aj = -bj;
                }
                break;
            }
        }
    }
}

/// Degree-`2n` monic divisors of `f` assembled from its irreducible factors, as
/// `(divisor, cofactor)` pairs.
fn divisors_of_degree(
    factors: &[(IntPoly, u32)],
    f: &IntPoly,
    d: usize,
) -> Vec<(IntPoly, IntPoly)> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; factors.len()];
    loop {
        let deg: usize = factors
            .iter()
            .zip(&exps)
            .map(|((p, _), &e)| p.deg() * e as usize)
            .sum();
        if deg == d {
            let div = factors
                .iter()
                .zip(&exps)
                .fold(IntPoly::one(), |acc, ((p, _), &e)| &acc * &p.pow(e));
            let co = f
                .exact_div(&div)
                .expect("nonzero")
                .expect("divisor by construction");
            out.push((div, co));
        }
        let mut i = 0;
        loop {
            if i == factors.len() {
                return out;
            }
            if exps[i] < factors[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// The lexicographically first split `F(a)·F(b)` with `a` of dimension `n`.
///
/// Same answer as [`split_at_exhaustive`], found by factoring first: every candidate factor is a
/// product of irreducible factors, so only those products are tried.
pub fn find_weil_split_at(w: &WeilPoly, n: usize) -> Option<(WeilPoly, WeilPoly)> {
    if n == 0 || 2 * n > w.g() {
        return None;
    }
    let factors = rational_factors(w.poly(), w.q().q()).ok()?;
    split_from_factors(w, &factors, n)
}

fn split_from_factors(
    w: &WeilPoly,
    factors: &[(IntPoly, u32)],
    n: usize,
) -> Option<(WeilPoly, WeilPoly)> {
    let q = w.q();
    let mut candidates: Vec<(Vec<i64>, Vec<i64>)> = divisors_of_degree(factors, w.poly(), 2 * n)
        .into_iter()
        .filter_map(|(d, co)| {
            let a = CoeffTuple::from_poly(&d, q).ok()?.coeffs().to_vec();
            let b = CoeffTuple::from_poly(&co, q).ok()?.coeffs().to_vec();
            Some((a, b))
        })
        .collect();
    candidates.sort();
    candidates.into_iter().find_map(|(a, b)| pair(w, a, b))
}

/// The first split over `n = 1, 2, …, ⌊g/2⌋`, lexicographically first within each `n`.
pub fn find_weil_split(w: &WeilPoly) -> Option<(WeilPoly, WeilPoly)> {
    let factors = rational_factors(w.poly(), w.q().q()).ok()?;
    if matches!(factors.as_slice(), [(_, 1)]) {
        return None;
    }
    (1..=w.g() / 2).find_map(|n| split_from_factors(w, &factors, n))
}

/// Every `n ≤ g/2` at which `w` splits, in increasing order.
pub fn split_dimensions(w: &WeilPoly) -> Vec<usize> {
    let Ok(factors) = rational_factors(w.poly(), w.q().q()) else {
        return Vec::new();
    };
    if matches!(factors.as_slice(), [(_, 1)]) {
        return Vec::new();
    }
    (1..=w.g() / 2)
        .filter(|&n| split_from_factors(w, &factors, n).is_some())
        .collect()
}
