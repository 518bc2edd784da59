//! Exact combinatorics of hyperplane arrangements: intersection lattices,
//! topological local zeta functions, and Aomoto-complex certificates for
//! roots of Bernstein–Sato polynomials.

pub mod aomoto;
pub mod arrangement;
pub mod cli;
pub mod conjecture;
pub mod error;
pub mod linalg;
pub mod ratfunc;
pub mod rational;
pub mod zeta;

pub use error::{Error, Result};
