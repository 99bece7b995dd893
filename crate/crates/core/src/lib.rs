//! Computational toolkit for BGG sequences of parabolic contact geometries
//! and the complexes they descend to.
//!
//! The crate works entirely at the level of weights: root systems and Weyl
//! groups ([`lattice`]), crossed-node parabolics and their Hasse diagrams
//! ([`parabolic`]), Kostant's description of nilradical homology
//! ([`kostant`]), dimensions and multiplicities ([`repinfo`]), assembled BGG
//! diagrams ([`bgg`]) and the cohomology bookkeeping for descended complexes
//! ([`descent`]). All arithmetic is exact.

pub mod bgg;
pub mod cli;
pub mod descent;
mod error;
pub mod kostant;
pub mod lattice;
pub mod linalg;
pub mod output;
pub mod parabolic;
pub mod repinfo;

pub use error::{Error, Result};

/// Arbitrary precision rational number used for all weight arithmetic.
pub type Rational = num_rational::BigRational;
