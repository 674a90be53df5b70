//! Exact Ehrhart and Hodge-Ehrhart computations.
//!
//! The crate is `no_std` (with `alloc`). Everything is exact rational
//! arithmetic except the numeric root finder used for root-location tests.

#![no_std]

extern crate alloc;

pub mod ehrhart;
pub mod error;
pub mod geometry;
pub mod hodge;
mod linalg;
pub mod roots;
pub mod series;
pub mod spectrum;
pub mod theta;
pub mod thom_sebastiani;
pub mod verdict;

pub use error::{Error, Result};
pub use geometry::{FacetInequality, HalfOpenSimplicialCone, LatticePolytope};
pub use hodge::{Classification, HodgeEhrhart, Kind, RootFactorization, RootLine, RvOutcome};
pub use series::{
    FractionalSeries, FractionalSpectrum, IntVector, QPolynomial, Rational, TruncatedSeries,
};
pub use theta::{spectrum_to_theta, ThetaFamily};
pub use verdict::Verdict;
