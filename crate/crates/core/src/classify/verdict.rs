//! Simplicity verdicts, factor dimensions and per-class records.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::factor::{factor_weil, Factorization};
use crate::error::{Error, Result};
use crate::weilpoly::{dh_condition, is_ordinary, CoeffTuple, WeilPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Simplicity {
    Simple,
    NonSimple,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    Reducible,
    IrreducibleOrdinary,
    NonOrdinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicityVerdict {
    pub value: Simplicity,
    pub reason: Reason,
}

impl fmt::Display for Simplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Simplicity::Simple => "SIMPLE",
            Simplicity::NonSimple => "NON_SIMPLE",
            Simplicity::Unknown => "UNKNOWN",
        })
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Reducible => "REDUCIBLE",
            Reason::IrreducibleOrdinary => "IRREDUCIBLE_ORDINARY",
            Reason::NonOrdinary => "NON_ORDINARY",
        })
    }
}

impl fmt::Display for SimplicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.value, self.reason)
    }
}

fn verdict_from(f: &Factorization) -> SimplicityVerdict {
    if f.is_irreducible() {
        SimplicityVerdict {
            value: Simplicity::Simple,
            reason: Reason::IrreducibleOrdinary,
        }
    } else {
        SimplicityVerdict {
            value: Simplicity::NonSimple,
            reason: Reason::Reducible,
        }
    }
}

const NON_ORDINARY: SimplicityVerdict = SimplicityVerdict {
    value: Simplicity::Unknown,
    reason: Reason::NonOrdinary,
};

/// For ordinary `w`, simple exactly when `w` is irreducible; non-ordinary inputs are `UNKNOWN`.
pub fn simplicity(w: &WeilPoly) -> SimplicityVerdict {
    if !is_ordinary(w) {
        return NON_ORDINARY;
    }
    let f = factor_weil(w).expect("ordinary Weil polynomials factor into Weil polynomials");
    verdict_from(&f)
}

/// Half the largest irreducible factor degree of an ordinary `w`.
pub fn largest_simple_factor_dim(w: &WeilPoly) -> Result<usize> {
    if !is_ordinary(w) {
        return Err(Error::InvalidParameter(format!(
            "{} is not ordinary",
            w.poly()
        )));
    }
    Ok(largest_dim(&factor_weil(w)?))
}

fn largest_dim(f: &Factorization) -> usize {
    f.degrees().first().copied().unwrap_or(0) / 2
}

fn check_epsilon(eps: &BigRational) -> Result<()> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    if eps <= &BigRational::zero() || eps >= &third {
        return Err(Error::InvalidParameter(format!(
            "epsilon {eps} not in (0, 1/3)"
        )));
    }
    Ok(())
}

/// Splits factor dimensions `dims` (summing to `g`, all below `(1-ε)g`) into two groups whose
/// totals both lie in `[εg, (1-ε)g]`.
///
/// With `d_1 ≥ … ≥ d_r`: if `d_1 ≥ εg` the first group is `{d_1}`; otherwise it is the shortest
/// prefix whose sum exceeds `εg`.
pub fn lemma31_split(dims: &[usize], epsilon: &BigRational) -> Result<(Vec<usize>, Vec<usize>)> {
    check_epsilon(epsilon)?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "dimensions must be positive".into(),
        ));
    }
    let g: usize = dims.iter().sum();
    let gr = BigRational::from_integer(BigInt::from(g));
    let low = epsilon * &gr;
    let high = (BigRational::one() - epsilon) * &gr;
    let mut sorted = dims.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let rat = |x: usize| BigRational::from_integer(BigInt::from(x));
    if rat(sorted[0]) >= high {
        return Err(Error::InvalidParameter(format!(
            "largest dimension {} is not below (1 - {epsilon})·{g}",
            sorted[0]
        )));
    }
    let k = if rat(sorted[0]) >= low {
        1
    } else {
        let mut sum = 0;
        sorted
            .iter()
            .position(|&d| {
                sum += d;
                rat(sum) > low
            })
            .expect("total g exceeds εg")
            + 1
    };
    let rest = sorted.split_off(k);
    let (s1, s2): (usize, usize) = (sorted.iter().sum(), rest.iter().sum());
    for s in [s1, s2] {
        if rat(s) < low || rat(s) > high {
            return Err(Error::Classification(format!(
                "split total {s} outside [εg, (1-ε)g]"
            )));
        }
    }
    Ok((sorted, rest))
}

/// One classified class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub tuple: CoeffTuple,
    pub dh: bool,
    pub ordinary: bool,
    pub simplicity: SimplicityVerdict,
    /// Present for ordinary classes.
    pub largest_dim: Option<usize>,
    /// Irreducible factor degrees with multiplicity, largest first; absent when a non-ordinary
    /// polynomial could not be factored into Weil polynomials.
    pub factor_degrees: Option<Vec<usize>>,
}

impl ClassRecord {
    pub fn csv_header(g: usize) -> String {
        let a: Vec<String> = (1..=g).map(|i| format!("a_{i}")).collect();
        format!(
            "q,g,{},ordinary,simplicity,largest_dim,factor_degrees",
            a.join(",")
        )
    }

    pub fn csv(&self) -> String {
        let a: Vec<String> = self.tuple.coeffs().iter().map(i64::to_string).collect();
        let dim = self.largest_dim.map(|d| d.to_string()).unwrap_or_default();
        let degs = self
            .factor_degrees
            .as_ref()
            .map(|d| d.iter().map(usize::to_string).collect::<Vec<_>>().join("+"))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.tuple.q(),
            self.tuple.g(),
            a.join(","),
            self.ordinary,
            self.simplicity.value,
            dim,
            degs
        )
    }
}

/// Classifies the Weil polynomial `F(t)`, factoring once.
pub fn classify(t: &CoeffTuple) -> Result<ClassRecord> {
    let w = WeilPoly::from_tuple(t)?;
    let ordinary = is_ordinary(&w);
    let fac = factor_weil(&w);
    if ordinary {
        let fac = fac?;
        Ok(ClassRecord {
            tuple: t.clone(),
            dh: dh_condition(t),
            ordinary,
            simplicity: verdict_from(&fac),
            largest_dim: Some(largest_dim(&fac)),
            factor_degrees: Some(fac.degrees()),
        })
    } else {
        Ok(ClassRecord {
            tuple: t.clone(),
            dh: dh_condition(t),
            ordinary,
            simplicity: NON_ORDINARY,
            largest_dim: None,
            factor_degrees: fac.ok().map(|f| f.degrees()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilpoly::PrimePower;

    fn weil(q: u64, a: &[i64]) -> WeilPoly {
        let q = PrimePower::new(q).unwrap();
        WeilPoly::from_tuple(&CoeffTuple::new(q, a.to_vec()).unwrap()).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn simplicity_examples() {
        assert_eq!(simplicity(&weil(2, &[1])).value, Simplicity::Simple);
        assert_eq!(simplicity(&weil(2, &[0, 3])).value, Simplicity::NonSimple);
        assert_eq!(simplicity(&weil(2, &[0])), NON_ORDINARY);
    }

    #[test]
    fn largest_dim_examples() {
        assert_eq!(largest_simple_factor_dim(&weil(2, &[0, 3])).unwrap(), 1);
        assert_eq!(largest_simple_factor_dim(&weil(2, &[1, 1])).unwrap(), 2);
        assert_eq!(largest_simple_factor_dim(&weil(2, &[2, 5])).unwrap(), 1);
        assert!(largest_simple_factor_dim(&weil(2, &[0])).is_err());
    }

    #[test]
    fn lemma31_examples() {
        assert_eq!(
            lemma31_split(&[3, 2, 1], &r(3, 10)).unwrap(),
            (vec![3], vec![2, 1])
        );
        assert_eq!(
            lemma31_split(&[1; 8], &r(3, 10)).unwrap(),
            (vec![1; 3], vec![1; 5])
        );
        assert_eq!(
            lemma31_split(&[2, 2], &r(1, 4)).unwrap(),
            (vec![2], vec![2])
        );
    }

    #[test]
    fn lemma31_rejects() {
        // largest part too big
        assert!(lemma31_split(&[4, 1], &r(1, 4)).is_err());
        assert!(lemma31_split(&[2, 2], &r(1, 3)).is_err());
        assert!(lemma31_split(&[2, 2], &r(0, 1)).is_err());
        assert!(lemma31_split(&[], &r(1, 4)).is_err());
    }

    #[test]
    fn records() {
        let q = PrimePower::new(2).unwrap();
        let rec = classify(&CoeffTuple::new(q, vec![0, 3]).unwrap()).unwrap();
        assert_eq!(rec.csv(), "2,2,0,3,true,NON_SIMPLE,1,2+2");
        assert_eq!(
            ClassRecord::csv_header(2),
            "q,g,a_1,a_2,ordinary,simplicity,largest_dim,factor_degrees"
        );
        let rec = classify(&CoeffTuple::new(q, vec![0]).unwrap()).unwrap();
        assert_eq!(rec.csv(), "2,1,0,false,UNKNOWN,,2");
    }
}
