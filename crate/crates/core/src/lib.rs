//! Complexity and rank of affine homogeneous spaces `G/H`, computed from the
//! pair of Lie algebras `(g, h)`.

pub mod classify;
pub mod complexity;
pub mod error;
pub mod field;
pub mod liealg;
pub mod linalg;
pub mod pairs;
pub mod rng;
pub mod rootsys;

pub use error::{Error, Result};
