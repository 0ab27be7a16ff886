//! Exact computational toolkit for Burnside rings, fusion systems and the
//! orthogonal unit group of the trivial source ring of a finite permutation
//! group at a prime `p`.

pub mod burnside;
pub mod cli;
pub mod coherent;
pub mod error;
pub mod fusion;
pub mod permgroup;
pub mod tsr;
pub mod zlinalg;

pub use error::{Error, Result};
