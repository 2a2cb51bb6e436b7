use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::weilpoly::PrimePower;

/// Largest dimension accepted for the coefficient-region sets X, Y and Z.
pub const MAX_G_REGION: usize = 8;
/// Largest dimension accepted for full Weil-polynomial enumeration.
pub const MAX_G_ALL: usize = 4;

/// Which coefficient set to walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetKind {
    /// The DiPippo–Howe region with `gcd(a_g, q) = 1`.
    X,
    /// Per-coordinate box `|a_i| ≤ q^{i/2}/g`, `|a_g| ≤ 2q^{g/2}/g`, `gcd(a_g, q) = 1`.
    Y,
    /// `(a_1..a_{g-n})` with `|a_i| ≤ q^{i/2}/g`.
    Z(usize),
    /// Every q-symmetric Weil polynomial of dimension `g`.
    All,
    /// The ordinary ones among [`SetKind::All`].
    AllOrdinary,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetKind::X => write!(f, "X"),
            SetKind::Y => write!(f, "Y"),
            SetKind::Z(n) => write!(f, "Z({n})"),
            SetKind::All => write!(f, "ALL"),
            SetKind::AllOrdinary => write!(f, "ALL_ORDINARY"),
        }
    }
}

/// Parses `X`, `Y`, `ALL`, `ALL_ORDINARY`; `Z` needs its `n` supplied separately via
/// [`SetKind::with_n`].
impl FromStr for SetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "X" => Ok(SetKind::X),
            "Y" => Ok(SetKind::Y),
            "Z" => Ok(SetKind::Z(0)),
            "ALL" => Ok(SetKind::All),
            "ALL_ORDINARY" => Ok(SetKind::AllOrdinary),
            other => Err(Error::InvalidSpec(format!("unknown set kind {other:?}"))),
        }
    }
}

impl SetKind {
    pub fn with_n(self, n: Option<usize>) -> Result<Self> {
        match (self, n) {
            (SetKind::Z(_), Some(n)) => Ok(SetKind::Z(n)),
            (SetKind::Z(_), None) => Err(Error::InvalidSpec("set Z requires n".into())),
            (k, None) => Ok(k),
            (k, Some(_)) => Err(Error::InvalidSpec(format!("set {k} takes no n"))),
        }
    }
}

/// A validated enumeration request.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    q: PrimePower,
    g: usize,
    kind: SetKind,
}

impl EnumSpec {
    pub fn new(q: PrimePower, g: usize, kind: SetKind) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidSpec("g must be positive".into()));
        }
        match kind {
            SetKind::Z(n) if n == 0 || 2 * n > g => {
                return Err(Error::InvalidSpec(format!(
                    "Z requires 1 <= n <= g/2, got n={n} g={g}"
                )))
            }
            SetKind::X | SetKind::Y | SetKind::Z(_) if g > MAX_G_REGION => {
                return Err(Error::InvalidSpec(format!(
                    "g={g} exceeds the cap {MAX_G_REGION} for set {kind}"
                )))
            }
            SetKind::All | SetKind::AllOrdinary if g > MAX_G_ALL => {
                return Err(Error::InvalidSpec(format!(
                    "g={g} exceeds the cap {MAX_G_ALL} for set {kind}"
                )))
            }
            _ => {}
        }
        Ok(Self { q, g, kind })
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Length of the emitted tuples: `g`, or `g - n` for `Z(n)`.
    pub fn tuple_len(&self) -> usize {
        match self.kind {
            SetKind::Z(n) => self.g - n,
            _ => self.g,
        }
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={} g={}", self.kind, self.q, self.g)
    }
}
