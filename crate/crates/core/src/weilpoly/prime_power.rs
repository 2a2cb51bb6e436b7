use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime power `q = p^v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimePower {
    q: u64,
    p: u64,
    v: u32,
}

impl PrimePower {
    /// Factors `q` by trial division and rejects anything that is not a prime power.
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut v = 0;
        while rest % p == 0 {
            rest /= p;
            v += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(Self { q, p, v })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn v(&self) -> u32 {
        self.v
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

impl TryFrom<u64> for PrimePower {
    type Error = Error;
    fn try_from(q: u64) -> Result<Self> {
        Self::new(q)
    }
}

impl From<PrimePower> for u64 {
    fn from(pp: PrimePower) -> u64 {
        pp.q
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_prime_powers() {
        let pp = PrimePower::new(8).unwrap();
        assert_eq!((pp.p(), pp.v()), (2, 3));
        let pp = PrimePower::new(49).unwrap();
        assert_eq!((pp.p(), pp.v()), (7, 2));
        assert_eq!(PrimePower::new(5).unwrap().v(), 1);
    }

    #[test]
    fn rejects_others() {
        for q in [0, 1, 6, 12, 100] {
            assert!(PrimePower::new(q).is_err(), "{q}");
        }
    }
}
