//! Factorization of monic squarefree integer polynomials: modular factorization, linear Hensel
//! lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use super::modp::{subset_sums, to_int, Field, Fp};
use crate::exactnum::IntPoly;
use crate::weilpoly::is_prime;

/// A prime that keeps `f` squarefree, with the factorization of `f` modulo it.
#[derive(Clone, Debug)]
pub(crate) struct GoodPrime {
    pub field: Field,
    pub factors: Vec<Fp>,
}

impl GoodPrime {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len() - 1).collect()
    }
}

/// The first `count` odd primes not dividing `q` modulo which the monic squarefree `f` stays
/// squarefree.
pub(crate) fn good_primes(f: &IntPoly, q: u64, count: usize) -> Vec<GoodPrime> {
    debug_assert!(f.is_monic());
    let mut out = Vec::with_capacity(count);
    let mut p = 3u64;
    while out.len() < count {
        if is_prime(p) && q % p != 0 {
            let field = Field::new(p);
            let fp = field.reduce(f);
            if field.is_squarefree(&fp) {
                out.push(GoodPrime {
                    factors: field.factor(&fp),
                    field,
                });
            }
        }
        p += 2;
    }
    out
}

/// Bound on every coefficient of every monic factor of a degree-`n` polynomial whose roots all
/// have modulus `√q`: `Σ C(n,i) q^{i/2} ≤ (1 + ⌈√q⌉)^n`.
pub(crate) fn factor_bound(n: usize, q: u64) -> BigInt {
    let mut r = q.sqrt();
    if r * r < q {
        r += 1;
    }
    BigInt::from(1 + r).pow(n as u32)
}

fn reduce_nonneg(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lifts `f ≡ g0·h0 (mod p)` to `f ≡ g·h (mod p^e)` with `g` monic.
fn hensel2(f: &IntPoly, g0: &Fp, h0: &Fp, k: &Field, e: u32) -> (IntPoly, IntPoly) {
    let (one, s, t) = k.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let p = BigInt::from(k.p);
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let mut pk = p.clone();
    for _ in 1..e {
        let diff = f - &(&g * &h);
        let err = IntPoly::new(diff.coeffs().iter().map(|c| c / &pk).collect());
        let ep = k.reduce(&err);
        let (quo, dg) = k.divrem(&k.mul(&t, &ep), g0);
        let dh = k.add(&k.mul(&s, &ep), &k.mul(&quo, h0));
        pk *= &p;
        g = reduce_nonneg(&(&g + &to_int(&dg).scale(&(&pk / &p))), &pk);
        h = reduce_nonneg(&(&h + &to_int(&dh).scale(&(&pk / &p))), &pk);
    }
    (g, h)
}

/// Lifts the full modular factorization of `f` to `p^e`.
fn lift_all(f: &IntPoly, gp: &GoodPrime, e: u32) -> Vec<IntPoly> {
    let k = &gp.field;
    let r = gp.factors.len();
    let mut out = Vec::with_capacity(r);
    let mut current = f.clone();
    for i in 0..r - 1 {
        let rest = gp.factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, u| k.mul(&acc, u));
        let (g, h) = hensel2(&current, &gp.factors[i], &rest, k, e);
        out.push(g);
        current = h;
    }
    out.push(current);
    out
}

/// Advances `idx` to the next `s`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    let mut i = s;
    while i > 0 {
        i -= 1;
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible factors over the integers of a monic squarefree `f` whose roots all have modulus
/// `√q`, sorted by degree then coefficients.
pub(crate) fn factor_squarefree(f: &IntPoly, q: u64) -> Vec<IntPoly> {
    assert!(f.is_monic(), "factor_squarefree needs a monic polynomial");
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let primes = good_primes(f, q, PATTERN_PRIMES);
    if patterns_force_irreducible(&primes, f.deg()) {
        return vec![f.clone()];
    }
    let gp = primes
        .iter()
        .min_by_key(|g| g.factors.len())
        .expect("at least one prime");
    let mut out = recombine(f, gp, q);
    sort_factors(&mut out);
    out
}

/// Number of primes whose factor degrees are intersected.
pub(crate) const PATTERN_PRIMES: usize = 3;

/// Whether no degree strictly between 0 and `n` is a subset sum of the factor degrees modulo
/// every prime, which rules out a proper rational factor.
pub(crate) fn patterns_force_irreducible(primes: &[GoodPrime], n: usize) -> bool {
    let sums: Vec<Vec<bool>> = primes.iter().map(|gp| subset_sums(&gp.degrees())).collect();
    !(1..n).any(|d| sums.iter().all(|s| s[d]))
}

/// Degree first, then coefficients from the top.
pub(crate) fn canonical_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

pub(crate) fn sort_factors(v: &mut [IntPoly]) {
    v.sort_by(canonical_order);
}

fn recombine(f: &IntPoly, gp: &GoodPrime, q: u64) -> Vec<IntPoly> {
    let bound = factor_bound(f.deg(), q) * 2;
    let p = BigInt::from(gp.field.p);
    let mut e = 1u32;
    let mut m = p.clone();
    while m <= bound {
        m *= &p;
        e += 1;
    }
    let mut rem = lift_all(f, gp, e);
    let mut cofactor = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= rem.len() {
        let mut idx: Vec<usize> = (0..s).collect();
        let mut hit = None;
        loop {
            let prod = idx.iter().fold(IntPoly::one(), |acc, &i| {
                reduce_nonneg(&(&acc * &rem[i]), &m)
            });
            let g = symmetric(&prod, &m);
            let c0 = g.coeff(0);
            let f0 = cofactor.coeff(0);
            let plausible = if c0.is_zero() {
                f0.is_zero()
            } else {
                (&f0 % &c0).is_zero()
            };
            if plausible {
                if let Some(quo) = cofactor.exact_div(&g).expect("nonzero divisor") {
                    hit = Some((g, quo));
                    break;
                }
            }
            if !next_combination(&mut idx, rem.len()) {
                break;
            }
        }
        match hit {
            Some((g, quo)) => {
                out.push(g);
                cofactor = quo;
                for &i in idx.iter().rev() {
                    rem.remove(i);
                }
            }
            None => s += 1,
        }
    }
    debug_assert!(cofactor
        .leading()
        .is_some_and(|l| l.is_positive() && l.is_one()));
    out.push(cofactor);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn splits_weil_quartic() {
        // x^4 + 3x^2 + 4 = (x^2 + x + 2)(x^2 - x + 2)
        let got = factor_squarefree(&p(&[4, 0, 3, 0, 1]), 2);
        assert_eq!(got, vec![p(&[2, -1, 1]), p(&[2, 1, 1])]);
    }

    #[test]
    fn irreducible_quartic() {
        let f = p(&[4, 2, 1, 1, 1]);
        assert_eq!(factor_squarefree(&f, 2), vec![f]);
    }

    #[test]
    fn product_of_many() {
        // four distinct Weil quadratics at q = 5 (|a| ≤ 4)
        let parts = [p(&[5, -3, 1]), p(&[5, 1, 1]), p(&[5, 2, 1]), p(&[5, 4, 1])];
        let f = parts.iter().fold(IntPoly::one(), |acc, g| &acc * g);
        let mut expected = parts.to_vec();
        sort_factors(&mut expected);
        assert_eq!(factor_squarefree(&f, 5), expected);
    }

    #[test]
    fn swinnerton_dyer_style() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let f = p(&[1, 0, -10, 0, 1]);
        let gp = good_primes(&f, 2, 3);
        assert!(gp.iter().all(|g| g.factors.len() >= 2));
        // roots ±√2 ± √3 have modulus < 3.2 ≤ √16
        assert_eq!(factor_squarefree(&f, 16), vec![f]);
    }

    #[test]
    fn lifted_product_matches() {
        let f = p(&[4, 0, 3, 0, 1]);
        let gp = &good_primes(&f, 2, 1)[0];
        let lifted = lift_all(&f, gp, 5);
        let m = BigInt::from(gp.field.p).pow(5);
        let prod = lifted
            .iter()
            .fold(IntPoly::one(), |acc, g| reduce_nonneg(&(&acc * g), &m));
        assert_eq!(prod, reduce_nonneg(&f, &m));
    }
}
