//! Exact eigenvalues and spectral gaps of conjugation-invariant (normal)
//! weightings on Cayley graphs of the symmetric group.
//!
//! A normal element of the group algebra acts as a scalar in every irrep,
//! so the whole Cayley spectrum can be read off the character table. This
//! crate computes those scalars in exact rational arithmetic, determines
//! which irrep attains the largest non-trivial eigenvalue ("rules"), scans
//! whole degrees for exceptions, builds normal elements that annihilate
//! prescribed families of irreps, and cross-checks everything numerically
//! against dense spectra of small Cayley and Schreier graphs.

pub mod characters;
pub mod constructions;
pub mod error;
pub mod partitions;
pub mod schreier;
pub mod spectra;

pub use error::{Error, Result};
pub use partitions::{CycleType, Partition};
