//! Finite-field coding engine for b-symbol read metrics and generalized
//! Hamming weights.
//!
//! The crate builds small finite fields GF(q) for q <= 16, factors x^n - 1
//! to enumerate cyclic codes, computes b-symbol weight hierarchies and
//! generalized Hamming weight hierarchies by several independent routes,
//! checks the known inequalities relating them, and drives exhaustive
//! searches for counterexamples to a conjectured length bound.

pub mod bounds;
pub mod code;
pub mod error;
pub mod explorer;
pub mod factor;
pub mod field;
pub mod hierarchy;
pub mod linalg;
pub mod metrics;
pub mod poly;
pub mod subspace;

pub use error::{Budget, Error, Result};
pub use field::Field;
pub use poly::Poly;
