//! Exact combinatorics and topology for homogeneous-space curvature bounds.
//!
//! The crate has three parts:
//!
//! - [`rootsys`]: (possibly non-reduced) restricted root systems with orbit
//!   multiplicities, node deletion on the Dynkin diagram, and the invariant
//!   `b(M)` = the smallest `k` for which a normal homogeneous metric on `M`
//!   has positive k-th intermediate Ricci curvature.
//! - [`symcat`]: the catalog of compact irreducible symmetric spaces, product
//!   spaces, circle-bundle families over products of projective spaces, fat
//!   homogeneous bundle records, and table rendering.
//! - [`gysin`]: exact integer linear algebra (Smith normal form, Bareiss
//!   determinants) and the Gysin-sequence cohomology of the circle bundles
//!   `W^{4n-1}_{p,q}`.

pub mod error;
pub mod gysin;
pub mod rootsys;
pub mod symcat;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
