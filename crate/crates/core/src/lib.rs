//! Exact computations in the polytope algebra of deformations of Coxeter
//! zonotopes (braid arrangement, type B arrangement, coordinate
//! arrangement), viewed as a module over the Tits algebra.
//!
//! Layers, bottom up:
//! - [`arrangement`]: faces, flats, Tits product, Möbius functions.
//! - [`permstat`]: permutations, signed permutations, statistics, forests.
//! - [`gfseries`]: polynomials and truncated series, Eulerian polynomials,
//!   generating-function identities.
//! - [`titsalgebra`]: face sums, flats algebra, Eulerian idempotents.
//! - [`polyclass`]: deformations as V-polytopes, classes, the cone-weight
//!   embedding `Φ`, the module action.
//! - [`spectra`]: eigenspace dimensions, eigenbases, signed Minkowski
//!   decompositions.
//! - [`hopfgp`]: product, coproduct and antipode of generalized permutahedra.
//! - [`cli`]: the `polyalg` command line driver.

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod gfseries;
pub mod hopfgp;
pub mod linalg;
pub mod permstat;
pub mod polyclass;
pub mod rational;
pub mod report;
pub mod spectra;
pub mod titsalgebra;

pub use arrangement::{Arrangement, ArrangementKind, Face, Flat};
pub use error::{Error, Result};
pub use rational::Q;
