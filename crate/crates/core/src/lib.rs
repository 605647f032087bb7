//! Algebraic and topological invariants of reduced complex projective plane
//! curves: Jacobian-ideal saturation, total Tjurina numbers, free and nearly
//! free classification, local Alexander polynomials of unibranch
//! singularities, and global Alexander-polynomial bounds, all over exact
//! rational arithmetic.

pub mod alexander;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod io;
pub mod local;
pub mod poly;

pub use error::{Error, Result};
