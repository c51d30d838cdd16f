//! Exact scalars and dense linear algebra.

mod diagram;
mod matrix;
mod rational;
mod scalar;
mod subspace;
mod tensor3;

pub use diagram::{decode_index, Diagram};
pub use matrix::{flip, kron, rref, Matrix};
pub use rational::Rational;
pub use scalar::{is_prime, Field, Scalar};
pub use subspace::{kernel, quotient_by, QuotientSpace, Subspace};
pub use tensor3::Tensor3;
