//! Graded free resolutions: Schreyer frames, minimalization, Betti
//! formats, formal degrees and exactness tests.

pub mod build;
pub mod exactness;
pub mod matrix;

pub use build::{
    betti_format, minimal_free_resolution, minimalize, schreyer_resolution, BettiFormat,
    FreeResolution,
};
pub use exactness::{
    be_exactness, be_minor_identity, minors_codimension, ExactnessReport, ExactnessStep,
    MinorIdentity,
};
pub use matrix::{determinant, minors, rank_of_matrix, subsets, GradedMatrix};

use crate::polyalg::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the unit ideal has no resolution of the quotient")]
    UnitIdeal,
    #[error("resolution is not minimal: a map has a unit entry")]
    NotMinimal,
    #[error("consecutive maps do not compose to zero")]
    NotAComplex,
    #[error("format {0:?} is not of the shape {{1,n,n,1}}")]
    RankMismatch(Vec<usize>),
    #[error("entry ({row},{col}) is not homogeneous of degree {formal_degree}")]
    NotHomogeneous {
        row: usize,
        col: usize,
        formal_degree: i64,
    },
    #[error("shape error: {0}")]
    Shape(String),
}
