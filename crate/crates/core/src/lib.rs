//! Construction and verification of multisections of closed PL manifolds
//! given by generalized triangulations.

pub mod complex;
pub mod error;
pub mod gf2;
pub mod perm;
pub mod zoo;
pub mod cells;
pub mod cli;
pub mod invariants;
pub mod partition;
pub mod subdivide;

pub use complex::Triangulation;
pub use error::{Error, Result};
