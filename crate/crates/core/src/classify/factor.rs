//! Factorization of Weil polynomials into irreducibles over the rationals.

use super::split::find_weil_split;
use super::zassenhaus::{
    canonical_order, factor_squarefree, good_primes, patterns_force_irreducible, PATTERN_PRIMES,
};
use crate::error::{Error, Result};
use crate::exactnum::IntPoly;
use crate::weilpoly::{PrimePower, WeilPoly};

/// Irreducible monic factors with multiplicities, in canonical order (degree, then coefficients
/// from the top).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    q: PrimePower,
    factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn factors(&self) -> &[(IntPoly, u32)] {
        &self.factors
    }

    pub fn product(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::one(), |acc, (p, m)| &acc * &p.pow(*m))
    }

    /// Factor degrees repeated by multiplicity, largest first.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(p, m)| std::iter::repeat(p.deg()).take(*m as usize))
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// A single factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }
}

/// Irreducible factorization of a monic polynomial whose roots all have modulus `√q`.
pub(crate) fn rational_factors(f: &IntPoly, q: u64) -> Result<Vec<(IntPoly, u32)>> {
    let mut out = Vec::new();
    for (m, part) in f.squarefree_decomposition()? {
        if part.deg() == 0 {
            continue;
        }
        out.extend(factor_squarefree(&part, q).into_iter().map(|p| (p, m)));
    }
    Ok(out)
}

/// Proves `f` (monic, squarefree) irreducible.
///
/// Factor degrees modulo three primes restrict the degrees a rational factor can have; when no
/// proper degree survives the proof is done, otherwise the full lift-and-recombine factorization
/// decides.
pub fn certify_irreducible(f: &IntPoly, q: PrimePower) -> bool {
    let n = f.deg();
    if n <= 1 {
        return true;
    }
    let primes = good_primes(f, q.q(), PATTERN_PRIMES);
    patterns_force_irreducible(&primes, n) || factor_squarefree(f, q.q()).len() == 1
}

fn split_rec(w: WeilPoly, leaves: &mut Vec<IntPoly>) -> Result<()> {
    match find_weil_split(&w) {
        Some((a, b)) => {
            split_rec(a, leaves)?;
            split_rec(b, leaves)
        }
        None => {
            if !certify_irreducible(w.poly(), w.q()) {
                return Err(Error::Classification(format!(
                    "{} has no Weil split but is reducible",
                    w.poly()
                )));
            }
            leaves.push(w.into_poly());
            Ok(())
        }
    }
}

/// Factors `w` by splitting each squarefree layer into Weil factors until no split remains, then
/// certifying every leaf irreducible.
///
/// Fails when a layer is not itself a Weil polynomial or a leaf is reducible, which can only
/// happen when `w` has real roots `±√q` (never for ordinary `w`).
pub fn factor_weil(w: &WeilPoly) -> Result<Factorization> {
    let q = w.q();
    let mut factors = Vec::new();
    for (m, part) in w.poly().squarefree_decomposition()? {
        if part.deg() == 0 {
            continue;
        }
        let layer = WeilPoly::new(part.clone(), q).map_err(|_| {
            Error::Classification(format!("squarefree layer {part} is not a Weil polynomial"))
        })?;
        let mut leaves = Vec::new();
        split_rec(layer, &mut leaves)?;
        factors.extend(leaves.into_iter().map(|p| (p, m)));
    }
    factors.sort_by(|(a, _), (b, _)| canonical_order(a, b));
    Ok(Factorization { q, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilpoly::CoeffTuple;

    fn weil(q: u64, a: &[i64]) -> WeilPoly {
        let q = PrimePower::new(q).unwrap();
        WeilPoly::from_tuple(&CoeffTuple::new(q, a.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let f = factor_weil(&weil(2, &[0, 3])).unwrap();
        assert_eq!(
            f.factors(),
            &[
                (IntPoly::from_i64(&[2, -1, 1]), 1),
                (IntPoly::from_i64(&[2, 1, 1]), 1)
            ]
        );
        let f = factor_weil(&weil(2, &[2, 5])).unwrap();
        assert_eq!(f.factors(), &[(IntPoly::from_i64(&[2, 1, 1]), 2)]);
        assert_eq!(f.degrees(), vec![2, 2]);
        let w = weil(2, &[1, 1]);
        let f = factor_weil(&w).unwrap();
        assert_eq!(f.factors(), &[(w.poly().clone(), 1)]);
        assert!(f.is_irreducible());
    }

    #[test]
    fn product_reproduces_input() {
        let w = weil(2, &[2, 5]);
        assert_eq!(&factor_weil(&w).unwrap().product(), w.poly());
    }

    #[test]
    fn real_root_layer_is_an_error() {
        // (x^2 - 2)^2 = x^4 - 4x^2 + 4 at q = 2
        let w = weil(2, &[0, -4]);
        assert!(matches!(factor_weil(&w), Err(Error::Classification(_))));
    }

    #[test]
    fn certificate() {
        let q = PrimePower::new(2).unwrap();
        assert!(certify_irreducible(&IntPoly::from_i64(&[4, 2, 1, 1, 1]), q));
        assert!(!certify_irreducible(
            &IntPoly::from_i64(&[4, 0, 3, 0, 1]),
            q
        ));
    }
}
