//! Exact commutative-algebra tooling for deciding when a numerical
//! semigroup cannot be the Weierstrass semigroup of a smooth curve.

pub mod criteria;
pub mod polyalg;
pub mod resolution;
pub mod semigroup;

pub use semigroup::{NumericalSemigroup, SemigroupError};
