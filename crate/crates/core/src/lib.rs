//! Exact computations with permutations, trees and free Lie algebras inside
//! the Hopf algebra of free quasi-symmetric functions.

pub mod classes;
pub mod cli;
pub mod error;
pub mod fqsym;
pub mod idempotents;
pub mod lie;
pub mod linalg;
pub mod perm;
pub mod scalar;
pub mod trees;

pub use error::{Error, Result};
