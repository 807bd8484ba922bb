//! Exact-arithmetic toolkit for cyclic A-infinity structures on `A ⊕ A*`
//! and double Poisson brackets on a finite-dimensional associative algebra.
//!
//! Everything is computed over arbitrary-precision rationals, so every check
//! in this crate is a decidable equality, not a tolerance comparison. The
//! main pieces:
//!
//! * [`algebra`] — associative algebras given by structure constants.
//! * [`extended`] — the extended space `A ⊕ A*`, its pairing and product.
//! * [`ainfinity`] — ternary operations, Koszul signs, cyclic invariance,
//!   Maurer-Cartan residuals in arities 3-5, and the component taxonomy.
//! * [`bracket`] — double brackets as rank-4 tensors, the axiom checkers,
//!   and the conversions to and from type-B ternary operations.
//! * [`rep`] — matrix representations and the induced Poisson bracket on
//!   coordinate functions, verified by exact evaluation at sampled points.
//! * [`io`] — versioned JSON schemas with canonical (byte-stable) output.

pub mod ainfinity;
pub mod algebra;
pub mod bracket;
pub mod error;
pub mod extended;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod scalar;

pub use algebra::AssocAlgebra;
pub use bracket::DoubleBracket;
pub use error::Error;
pub use extended::{ExtElement, ExtIndex, Sort};
pub use scalar::Scalar;
