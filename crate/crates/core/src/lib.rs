//! Exact computations with homogeneous vector bundles on Grassmannians.
//!
//! The crate is organised bottom-up:
//!
//! - [`sym`]: partitions, GL(n) characters, Littlewood–Richardson products,
//!   plethysm and the Weyl dimension formula.
//! - [`bundle`]: bundle expressions over the tautological bundles of `Gr(k, n)`
//!   and their decomposition into irreducible summands `Σ_α Q ⊗ Σ_β U`.
//! - [`bbw`]: Borel–Bott–Weil cohomology of irreducible summands and of whole
//!   expressions.
//! - [`koszul`]: cohomology of restrictions to the zero locus of a general
//!   section, via the Koszul complex and its first-page spectral sequence.
//! - [`chow`]: the Schubert-basis Chow ring, Chern characters and classes,
//!   discriminants, modularity certificates and Hirzebruch–Riemann–Roch.
//!
//! Everything is exact: integers are arbitrary precision and rational
//! coefficients are `BigRational`. The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bbw;
pub mod bundle;
pub mod chow;
pub mod error;
pub mod koszul;
mod linalg;
pub mod sym;

pub use bbw::{bbw, cohomology_table, euler_char_ambient, BbwResult, CohomologyTable};
pub use bundle::{normalize, rank, BundleExpr, Grassmannian, IrrSummand};
pub use error::{Error, Result};
pub use koszul::{E1Page, Restriction, ZeroLocus};
pub use sym::{Character, Functor, Partition, SchurExpansion, Weight};

/// Exact rational numbers used for Chow-ring coefficients.
pub type Rational = num_rational::BigRational;
