//! Per-`(q, g)` statistics at the ordinary restriction, exact verifiers and persistence.
//!
//! Every class count here is over ordinary Weil polynomials only: simplicity of non-ordinary
//! classes is not decided, so `m_ord` and `s_ord` are lower bounds for the full counts.

mod bounds;
mod store;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, split_dimensions, ClassRecord, Simplicity};
use crate::enumerate::{
    collect_parallel, count_parallel, EnumSpec, SetKind, MAX_G_ALL, MAX_G_REGION,
};
use crate::error::{Error, Result};
use crate::exactnum::rational::serde_ratio;
use crate::weilpoly::{PrimePower, WeilPoly};

pub use bounds::{
    growth_report, verify_al_identity, verify_recursion_domination, verify_thm23_bound,
    verify_thm23_bounds, BoundReport, Exact, GrowthRow, Relation,
};
pub use store::{
    cached_census, census_csv_header, census_csv_row, census_json, load_census, save_census,
    save_census_with, utc_timestamp, CACHE_ENV,
};

/// Bumped whenever a change could alter any stored count.
pub const ENGINE_VERSION: &str = concat!("weil-core ", env!("CARGO_PKG_VERSION"));
pub const SCHEMA_VERSION: u32 = 1;

/// Exact `ε`; never a float.
pub type Epsilon = BigRational;

/// Default number of enumeration partitions.
pub const DEFAULT_PARTS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub x_g: u64,
    pub y_g: u64,
    /// `|Y_{g,n}|` for `n = 1..=g/2`.
    pub y_gn: Vec<u64>,
    pub m_ord: u64,
    pub s_ord: u64,
    #[serde(rename = "a_L_ord")]
    pub a_l_ord: u64,
    #[serde(rename = "a_S_ord")]
    pub a_s_ord: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub engine_version: String,
    pub max_g_region: usize,
    pub max_g_all: usize,
}

impl Provenance {
    pub fn current() -> Self {
        Self {
            engine_version: ENGINE_VERSION.to_string(),
            max_g_region: MAX_G_REGION,
            max_g_all: MAX_G_ALL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub q: PrimePower,
    pub g: usize,
    #[serde(with = "serde_ratio")]
    pub epsilon: BigRational,
    pub counts: CensusCounts,
    pub provenance: Provenance,
}

impl CensusTable {
    /// `s_ord / m_ord`, or `None` when there are no ordinary classes.
    pub fn simple_ratio(&self) -> Option<BigRational> {
        ratio(self.counts.s_ord, self.counts.m_ord)
    }

    /// `|Y_{g,n}| / |Y_g|`.
    pub fn ygn_ratio(&self, n: usize) -> Option<BigRational> {
        let c = *self.counts.y_gn.get(n.checked_sub(1)?)?;
        ratio(c, self.counts.y_g)
    }
}

pub(crate) fn ratio(num: u64, den: u64) -> Option<BigRational> {
    (den != 0).then(|| BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Rejects `ε` outside `(0, 1/3)`.
pub fn check_epsilon(eps: &BigRational) -> Result<()> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    if eps <= &BigRational::zero() || eps >= &third {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1/3), got {eps}"
        )));
    }
    Ok(())
}

fn spec(q: PrimePower, g: usize, kind: SetKind) -> Result<EnumSpec> {
    EnumSpec::new(q, g, kind)
}

/// Classifies every member of a set of Weil polynomials, in enumeration order.
pub fn classify_set(set: &EnumSpec, parts: usize) -> Result<Vec<ClassRecord>> {
    let tuples = collect_parallel(set, parts);
    tuples.par_iter().map(classify).collect()
}

/// Classifies every ordinary Weil polynomial of dimension `g`, in enumeration order.
pub fn classify_all(q: PrimePower, g: usize, parts: usize) -> Result<Vec<ClassRecord>> {
    classify_set(&spec(q, g, SetKind::AllOrdinary)?, parts)
}

/// `|Y_{g,n}|` for every `n = 1..=g/2`, from one factorization per member of `Y_g`.
pub fn ygn_counts(q: PrimePower, g: usize, parts: usize) -> Result<Vec<u64>> {
    let tuples = collect_parallel(&spec(q, g, SetKind::Y)?, parts);
    let dims: Vec<Vec<usize>> = tuples
        .par_iter()
        .map(|t| WeilPoly::from_tuple(t).map(|w| split_dimensions(&w)))
        .collect::<Result<_>>()?;
    let mut counts = vec![0u64; g / 2];
    for n in dims.iter().flatten() {
        counts[n - 1] += 1;
    }
    Ok(counts)
}

/// Number of members of `Y_g` that factor as a Weil polynomial of dimension `n` times one of
/// dimension `g - n`.
pub fn ygn_count(q: PrimePower, g: usize, n: usize) -> Result<u64> {
    if n == 0 || 2 * n > g {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ n ≤ g/2, got n={n}, g={g}"
        )));
    }
    Ok(ygn_counts(q, g, DEFAULT_PARTS)?[n - 1])
}

/// Builds the census with the default number of partitions.
pub fn build_census(q: PrimePower, g: usize, epsilon: &BigRational) -> Result<CensusTable> {
    build_census_with(q, g, epsilon, DEFAULT_PARTS)
}

/// Builds the census; `parts` only affects scheduling, never the result.
pub fn build_census_with(
    q: PrimePower,
    g: usize,
    epsilon: &BigRational,
    parts: usize,
) -> Result<CensusTable> {
    check_epsilon(epsilon)?;
    let records = classify_all(q, g, parts)?;
    let threshold = (BigRational::one() - epsilon) * BigRational::from_integer(BigInt::from(g));
    let mut counts = CensusCounts {
        x_g: count_parallel(&spec(q, g, SetKind::X)?, parts),
        y_g: count_parallel(&spec(q, g, SetKind::Y)?, parts),
        y_gn: ygn_counts(q, g, parts)?,
        m_ord: 0,
        s_ord: 0,
        a_l_ord: 0,
        a_s_ord: 0,
    };
    for r in &records {
        counts.m_ord += 1;
        if r.simplicity.value == Simplicity::Simple {
            counts.s_ord += 1;
        }
        let dim = r.largest_dim.expect("ordinary records carry a dimension");
        if BigRational::from_integer(BigInt::from(dim)) >= threshold {
            counts.a_l_ord += 1;
        } else {
            counts.a_s_ord += 1;
        }
    }
    Ok(CensusTable {
        q,
        g,
        epsilon: epsilon.clone(),
        counts,
        provenance: Provenance::current(),
    })
}
