use num_bigint::BigInt;

use super::spec::{EnumSpec, SetKind};
use crate::exactnum::QuadraticValue;
use crate::weilpoly::binomial;

/// A closed integer interval; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn symmetric(k: i64) -> Self {
        Self { lo: -k, hi: k }
    }

    pub fn empty() -> Self {
        Self { lo: 1, hi: 0 }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersect(&self, other: &IntRange) -> IntRange {
        IntRange::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }
}

pub(crate) fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("coefficient bound exceeds i64")
}

/// `2q^{(g-i)/2}` for `i < g` and `1` for `i = g`: the weight of `|a_i|` in the X budget after
/// scaling by `2q^{g/2}`.
fn x_weight(g: usize, i: usize, q: u64) -> QuadraticValue {
    if i == g {
        QuadraticValue::integer(1, q)
    } else {
        QuadraticValue::half_power((g - i) as u32, q).scale(&BigInt::from(2))
    }
}

/// Unconditional bound `|a_i| ≤ C(2g, i) q^{i/2}` for a polynomial whose roots all have modulus
/// `√q`.
pub fn root_bound(g: usize, i: usize, q: u64) -> i64 {
    to_i64(
        &QuadraticValue::half_power(i as u32, q)
            .scale(&binomial(2 * g, i))
            .floor(),
    )
}

/// Exact interval of admissible values for the next coordinate given `prefix`.
///
/// For X the bound is the remaining budget of the DiPippo–Howe inequality; for Y and Z each
/// coordinate has its own prefix-independent bound; ALL uses the root-modulus bound. Coprimality
/// of the last coordinate is not reflected here.
pub fn admissible_range(spec: &EnumSpec, prefix: &[i64]) -> IntRange {
    let q = spec.q().q();
    let g = spec.g();
    let i = prefix.len() + 1;
    if i > spec.tuple_len() {
        return IntRange::empty();
    }
    match spec.kind() {
        SetKind::X => {
            let mut slack = QuadraticValue::half_power(g as u32, q).scale(&BigInt::from(2));
            for (idx, &a) in prefix.iter().enumerate() {
                slack = slack - x_weight(g, idx + 1, q).scale(&BigInt::from(a.unsigned_abs()));
            }
            if slack.sign() < 0 {
                return IntRange::empty();
            }
            IntRange::symmetric(to_i64(&slack.max_multiple_within(&x_weight(g, i, q))))
        }
        SetKind::Y | SetKind::Z(_) => {
            let gb = QuadraticValue::integer(g as u64, q);
            let bound = if i == g {
                QuadraticValue::half_power(g as u32, q).scale(&BigInt::from(2))
            } else {
                QuadraticValue::half_power(i as u32, q)
            };
            IntRange::symmetric(to_i64(&bound.max_multiple_within(&gb)))
        }
        SetKind::All | SetKind::AllOrdinary => IntRange::symmetric(root_bound(g, i, q)),
    }
}
