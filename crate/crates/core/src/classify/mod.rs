//! Simplicity and factor structure of Weil polynomials.

mod factor;
mod modp;
mod split;
mod verdict;
mod zassenhaus;

pub use factor::{certify_irreducible, factor_weil, Factorization};
pub use split::{
    find_weil_split, find_weil_split_at, find_weil_split_exhaustive, reconstruct_cofactor,
    split_at_exhaustive, split_dimensions,
};
pub use verdict::{
    classify, largest_simple_factor_dim, lemma31_split, simplicity, ClassRecord, Reason,
    Simplicity, SimplicityVerdict,
};
