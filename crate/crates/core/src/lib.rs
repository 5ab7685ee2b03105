//! Exact construction and verification of Yang R-matrices, their fusion,
//! reflection-equation solutions and the associated mode algebras.
//!
//! Everything here is `no_std` with `alloc`. All arithmetic is exact over
//! the rationals; identities are verified by full entrywise expansion.

#![no_std]

extern crate alloc;

pub mod error;
pub mod eval;
pub mod fusion;
pub mod matrix;
pub mod modes;
pub mod poly;
pub mod rational;
pub mod rmatrix;
pub mod tensor;
pub mod transposition;
pub mod verify;

pub use error::Error;
pub use eval::{DoubleEval, EvalRep};
pub use fusion::{GradedFamily, SeedSolution};
pub use matrix::RatMatrix;
pub use poly::{LaurentPoly, Substitution, VarSet};
pub use rational::Rational;
pub use rmatrix::RFamily;
pub use tensor::{LegRole, LegSpace, TensorOp};
pub use transposition::{FormKind, Transposition};
pub use verify::{CheckReport, Witness};
