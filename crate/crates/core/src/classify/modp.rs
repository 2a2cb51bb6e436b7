//! Dense polynomials over a small prime field, lowest degree first.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::exactnum::IntPoly;

pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

fn trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn deg(a: &Fp) -> usize {
    a.len().saturating_sub(1)
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2 && p < (1 << 31));
        Self { p }
    }

    pub fn reduce(&self, f: &IntPoly) -> Fp {
        let m = BigInt::from(self.p);
        let v = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &m) + &m) % &m;
                u64::try_from(r).expect("residue fits")
            })
            .collect();
        trim(v)
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        let mut r = 1;
        let (mut b, mut e) = (a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, b);
            }
            b = self.mulm(b, b);
            e >>= 1;
        }
        r
    }

    pub fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(v)
    }

    pub fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        trim(v)
    }

    pub fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.p;
            }
        }
        trim(v)
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let li = self.inv(l);
                a.iter().map(|&c| self.mulm(c, li)).collect()
            }
        }
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let li = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut quo = vec![0u64; a.len() - b.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = self.mulm(r[k + b.len() - 1], li);
            quo[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - self.mulm(c, bj)) % self.p;
            }
        }
        r.truncate(b.len() - 1);
        (trim(quo), trim(r))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (quo, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&quo, &s1));
            let t = self.sub(&t0, &self.mul(&quo, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = self.inv(*r0.last().expect("not both zero"));
        let scale = |v: &Fp| trim(v.iter().map(|&c| self.mulm(c, li)).collect());
        (scale(&r0), scale(&s0), scale(&t0))
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        let v = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(v)
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &Fp, e: &BigUint, m: &Fp) -> Fp {
        let mut result = vec![1u64];
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
        }
        self.rem(&result, m)
    }

    pub fn is_squarefree(&self, a: &Fp) -> bool {
        deg(&self.gcd(a, &self.derivative(a))) == 0
    }

    /// Distinct-degree factorization of a monic squarefree `f`: pairs `(d, product of the
    /// irreducible factors of degree d)`.
    pub fn ddf(&self, f: &Fp) -> Vec<(usize, Fp)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: Fp = vec![0, 1];
        let mut h = x.clone();
        let pb = BigUint::from(self.p);
        let mut d = 0;
        while deg(&f) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &pb, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if deg(&g) > 0 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((d, g));
            }
        }
        if deg(&f) > 0 {
            out.push((deg(&f), f));
        }
        out
    }

    /// Splits a product of irreducibles of degree `d` (odd `p`), trying splitting polynomials in
    /// a fixed order so the result is reproducible.
    pub fn edf(&self, f: &Fp, d: usize) -> Vec<Fp> {
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        if deg(f) == d {
            return vec![f.clone()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        let n = deg(f);
        let mut k: u64 = self.p;
        loop {
            // base-p digits of k, as a polynomial of degree < n
            let mut r = Vec::new();
            let mut c = k;
            while c > 0 && r.len() < n {
                r.push(c % self.p);
                c /= self.p;
            }
            k += 1;
            let r = trim(r);
            if deg(&r) == 0 {
                continue;
            }
            let w = self.sub(&self.powmod(&r, &e, f), &vec![1u64]);
            let g = self.gcd(&w, f);
            if deg(&g) > 0 && deg(&g) < n {
                let other = self.monic(&self.divrem(f, &g).0);
                let mut out = self.edf(&g, d);
                out.extend(self.edf(&other, d));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree `f`, sorted.
    pub fn factor(&self, f: &Fp) -> Vec<Fp> {
        let mut out: Vec<Fp> = self
            .ddf(f)
            .into_iter()
            .flat_map(|(d, g)| self.edf(&g, d))
            .collect();
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().rev().cmp(b.iter().rev()))
        });
        out
    }
}

pub(crate) fn to_int(a: &Fp) -> IntPoly {
    IntPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

/// Subset sums of `degrees`, as a membership vector indexed by degree.
pub(crate) fn subset_sums(degrees: &[usize]) -> Vec<bool> {
    let total: usize = degrees.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=total).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}
