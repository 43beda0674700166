//! Exact q-deformed Wigner calculus for quantum groups: Clebsch-Gordan,
//! 6j and 9j symbols for U_q(su(2)), Gelfand-Tsetlin representation matrices
//! for U_q(u(n)), extremal projectors, universal R-matrix realizations,
//! adjoint extremal projectors, su(3) projection-operator matrix elements,
//! and normal-ordering combinatorics of finite root systems.
//!
//! Everything is computed in exact arithmetic over rational functions of the
//! deformation variable; every nontrivial formula is validated against an
//! independent brute-force oracle in the test suite.

pub mod error;
pub mod projector;
pub mod qarith;
pub mod gtrep;
pub mod rootsys;

pub use error::{QError, QResult};

/// CLI entry point; returns the process exit code.
pub fn run_cli() -> i32 {
    0
}
