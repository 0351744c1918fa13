//! Exact multivariate polynomial algebra over the rationals: weighted
//! gradings, Gröbner bases, syzygies and ideal-theoretic invariants.

pub mod coeff;
pub mod groebner;
pub mod ideal;
pub mod module;
pub mod poly;
pub mod ring;
pub mod text;

pub use coeff::Coeff;
pub use groebner::{buchberger, is_groebner_basis, minimal_generators, normal_form};
pub use ideal::{is_regular_sequence, semigroup_ring, toric_ideal, Ideal};
pub use module::{module_groebner, module_normal_form, syzygies, ModuleElement, ModuleOrder};
pub use poly::{Polynomial, Term};
pub use ring::{GradedRing, Monomial, MonomialOrder, Ring, MAX_VARS};
pub use text::{parse_polynomial, polynomial_from_json, polynomial_to_json};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("input is not a Gröbner basis: an S-pair does not reduce to zero")]
    NotGroebner,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
}
