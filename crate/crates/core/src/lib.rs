//! Exact enumeration and classification of Weil q-polynomials.

pub mod census;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod exactnum;
pub mod weilpoly;

pub use error::{Error, Result};
