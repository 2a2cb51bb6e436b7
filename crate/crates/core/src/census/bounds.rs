//! Exact finite checks of the counting bounds, and the growth table.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{build_census_with, classify_all, ygn_counts, DEFAULT_PARTS};
use crate::classify::Simplicity;
use crate::enumerate::{count_parallel, EnumSpec, SetKind, MAX_G_REGION};
use crate::error::{Error, Result};
use crate::exactnum::format_rational;
use crate::weilpoly::PrimePower;

/// An exactly represented side of a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exact {
    Integer(BigInt),
    Rational(BigRational),
    /// `base / q^{quarter_exp/4}`.
    QuarterRoot {
        base: BigInt,
        q: u64,
        quarter_exp: u64,
    },
    Undefined,
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Integer(n) => write!(f, "{n}"),
            Exact::Rational(r) => f.write_str(&format_rational(r)),
            Exact::QuarterRoot {
                base,
                q,
                quarter_exp,
            } => {
                let g = quarter_exp.gcd(&4);
                write!(f, "{base}/{q}^({}/{})", quarter_exp / g, 4 / g)
            }
            Exact::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `lhs ≤ rhs`
    Le,
    /// `lhs = rhs`
    Eq,
}

/// Outcome of one exact comparison. `holds` is `None` when a side is undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub parameters: String,
    pub lhs: Exact,
    pub rhs: Exact,
    pub relation: Relation,
    pub holds: Option<bool>,
}

impl BoundReport {
    /// Holds, or is undefined; only an actual violation counts as failure.
    pub fn passes(&self) -> bool {
        self.holds != Some(false)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Le => "<=",
            Relation::Eq => "==",
        };
        let status = match self.holds {
            Some(true) => "holds",
            Some(false) => "FAILS",
            None => "undefined",
        };
        write!(
            f,
            "{} [{}]: {} {rel} {}: {status}",
            self.name, self.parameters, self.lhs, self.rhs
        )
    }
}

/// The Y-split ratio bound for every `n = 1..=g/2`:
/// `|Y_{g,n}| / |Y_g| ≤ (5g² / q^{(g-1)/4})^n`, compared exactly after raising both sides to the
/// fourth power.
pub fn verify_thm23_bounds(q: PrimePower, g: usize) -> Result<Vec<BoundReport>> {
    let y = count_parallel(&EnumSpec::new(q, g, SetKind::Y)?, DEFAULT_PARTS);
    let splits = if y == 0 {
        vec![0; g / 2]
    } else {
        ygn_counts(q, g, DEFAULT_PARTS)?
    };
    Ok((1..=g / 2)
        .map(|n| thm23_report(q, g, n, y, splits[n - 1]))
        .collect())
}

/// [`verify_thm23_bounds`] for a single `n`.
pub fn verify_thm23_bound(q: PrimePower, g: usize, n: usize) -> Result<BoundReport> {
    if n == 0 || 2 * n > g {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ n ≤ g/2, got n={n}, g={g}"
        )));
    }
    Ok(verify_thm23_bounds(q, g)?.swap_remove(n - 1))
}

pub(super) fn thm23_report(q: PrimePower, g: usize, n: usize, y: u64, ygn: u64) -> BoundReport {
    let base = BigInt::from(5 * g * g).pow(n as u32);
    let quarter_exp = ((g - 1) * n) as u64;
    let rhs = Exact::QuarterRoot {
        base: base.clone(),
        q: q.q(),
        quarter_exp,
    };
    let (lhs, holds) = if y == 0 {
        (Exact::Undefined, None)
    } else {
        let (a, b) = (BigInt::from(ygn), BigInt::from(y));
        let left = a.pow(4) * BigInt::from(q.q()).pow(quarter_exp as u32);
        let right = base.pow(4) * b.pow(4);
        (
            Exact::Rational(BigRational::new(BigInt::from(ygn), BigInt::from(y))),
            Some(left <= right),
        )
    };
    BoundReport {
        name: "thm23".into(),
        parameters: format!("q={q} g={g} n={n}"),
        lhs,
        rhs,
        relation: Relation::Le,
        holds,
    }
}

fn ordinary_counts(q: PrimePower, d: usize) -> Result<(u64, u64)> {
    let records = classify_all(q, d, DEFAULT_PARTS)?;
    let s = records
        .iter()
        .filter(|r| r.simplicity.value == Simplicity::Simple)
        .count();
    Ok((records.len() as u64, s as u64))
}

/// `a_L(g) = s(g) + Σ_{1 ≤ i ≤ εg} m(i)·s(g-i)` at the ordinary restriction.
///
/// The left side is counted from largest factor dimensions in the census of dimension `g`; the
/// sum on the right comes from separate classifications of the smaller dimensions.
pub fn verify_al_identity(q: PrimePower, g: usize, epsilon: &BigRational) -> Result<BoundReport> {
    let table = build_census_with(q, g, epsilon, DEFAULT_PARTS)?;
    let eps_g = epsilon * BigRational::from_integer(BigInt::from(g));
    let i_max: usize = eps_g.floor().to_integer().try_into().expect("εg is small");
    let mut rhs = BigInt::from(table.counts.s_ord);
    for i in 1..=i_max {
        let (m_i, _) = ordinary_counts(q, i)?;
        let (_, s_rest) = ordinary_counts(q, g - i)?;
        rhs += BigInt::from(m_i) * BigInt::from(s_rest);
    }
    let lhs = BigInt::from(table.counts.a_l_ord);
    Ok(BoundReport {
        name: "aL-identity".into(),
        parameters: format!("q={q} g={g} epsilon={}", format_rational(epsilon)),
        holds: Some(lhs == rhs),
        lhs: Exact::Integer(lhs),
        rhs: Exact::Integer(rhs),
        relation: Relation::Eq,
    })
}

/// The recursion domination inequality for `k = 1..=k_max`:
/// `C2·q^{C1 k²} + Σ_{j=1}^{k-1} 2^{j-1} C2^{j+1} q^{C1 j²} q^{C1 (k-j)²} ≤ 2^{k-1} C2^k q^{C1 k²}`.
pub fn verify_recursion_domination(
    c1: u32,
    c2: u32,
    q: PrimePower,
    k_max: u32,
) -> Result<Vec<BoundReport>> {
    if c1 == 0 || c2 == 0 || k_max == 0 {
        return Err(Error::InvalidParameter(
            "C1, C2 and k_max must be positive".into(),
        ));
    }
    let qb = BigInt::from(q.q());
    let c2b = BigInt::from(c2);
    let two = BigInt::from(2);
    let qpow = |e: u32| qb.pow(c1 * e);
    Ok((1..=k_max)
        .map(|k| {
            let mut lhs = &c2b * qpow(k * k);
            for j in 1..k {
                lhs += two.pow(j - 1) * c2b.pow(j + 1) * qpow(j * j) * qpow((k - j) * (k - j));
            }
            let rhs = two.pow(k - 1) * c2b.pow(k) * qpow(k * k);
            BoundReport {
                name: "recursion".into(),
                parameters: format!("C1={c1} C2={c2} q={q} k={k}"),
                holds: Some(lhs <= rhs),
                lhs: Exact::Integer(lhs),
                rhs: Exact::Integer(rhs),
                relation: Relation::Le,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub g: usize,
    pub x_count: u64,
    /// `log_q |X_g| / g²` to six decimals; display only.
    pub log_ratio: String,
    /// `q^{g²/4 - g} ≤ |X_g| ≤ q^{g²/4 + g}`, decided on fourth powers.
    pub in_bracket: bool,
}

/// `|X_g|` for `g = 1..=g_max` with the growth exponent and the bracket check.
pub fn growth_report(q: PrimePower, g_max: usize) -> Result<Vec<GrowthRow>> {
    if g_max == 0 || g_max > MAX_G_REGION {
        return Err(Error::InvalidParameter(format!(
            "g_max must be in 1..={MAX_G_REGION}, got {g_max}"
        )));
    }
    (1..=g_max)
        .map(|g| {
            let n = count_parallel(&EnumSpec::new(q, g, SetKind::X)?, DEFAULT_PARTS);
            Ok(GrowthRow {
                g,
                x_count: n,
                log_ratio: log_ratio(n, q.q(), g),
                in_bracket: in_growth_bracket(n, q.q(), g),
            })
        })
        .collect()
}

fn log_ratio(n: u64, q: u64, g: usize) -> String {
    if n == 0 {
        return "undefined".into();
    }
    let r = (n as f64).ln() / (q as f64).ln() / (g * g) as f64;
    format!("{r:.6}")
}

/// Exact check of `q^{g²/4 - g} ≤ n ≤ q^{g²/4 + g}`.
pub(crate) fn in_growth_bracket(n: u64, q: u64, g: usize) -> bool {
    let n4 = BigInt::from(n).pow(4);
    let qb = BigInt::from(q);
    let (sq, four_g) = ((g * g) as u32, (4 * g) as u32);
    let lower = if sq >= four_g {
        n4 >= qb.pow(sq - four_g)
    } else {
        &n4 * qb.pow(four_g - sq) >= BigInt::one()
    };
    lower && n4 <= qb.pow(sq + four_g) && !BigInt::from(n).is_zero()
}
