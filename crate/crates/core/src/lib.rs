//! Exact enumeration of circular seatings of married couples in which no
//! spouses sit together and no `k` consecutive people share a gender.
//!
//! Every count is available through several independent routes that are
//! checked against one another:
//!
//! - [`transfer`]: closed walks in a weighted de Bruijn graph, for any `k ≥ 2`;
//! - [`menage`]: the classical `k = 2` formulas (Touchard, inclusion–exclusion,
//!   the eigenvalue/Laplace form and the exponential generating function);
//! - [`ternary`]: the `k = 3` reductions through the `B₂` matrix and through a
//!   bivariate diagonal extraction;
//! - [`oracle`]: brute-force enumeration for small `n`.

pub mod error;
pub mod exactalg;
pub mod menage;
pub mod oracle;
pub mod ternary;
pub mod transfer;

pub use error::{Error, Result};
pub use exactalg::{ExactInt, ExactRat};
