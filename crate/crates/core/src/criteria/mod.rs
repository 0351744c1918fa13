//! Certificates that a numerical semigroup is not the Weierstrass
//! semigroup of a point on a smooth curve.

pub mod buchweitz;
pub mod castelnuovo;
pub mod degree_special;
pub mod family;
pub mod scan;

pub use buchweitz::{buchweitz_counts, buchweitz_test, gap_sum_count, BuchweitzEvidence};
pub use castelnuovo::{castelnuovo_pi0, torres_bound_check, CastelnuovoInput};
pub use degree_special::{
    certificate_from_resolution, conditions_1_and_2, find_degree_special_certificate,
    resolve_semigroup, resolve_semigroup_ordered, verify_1441_structure, Condition3,
    DegreeSpecialCertificate, Selection, Subcomplex, SPECIAL_FORMAT,
};
pub use family::family_6_9;
pub use scan::{conjecture_scan, scan_one, ScanReport, DEFAULT_SCAN_CAP};

use serde::Serialize;
use serde_json::{json, Value};

use crate::polyalg::PolyError;
use crate::resolution::ResolutionError;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error("genus {0} is too small; at least 2 is required")]
    GenusTooSmall(u32),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resource limit reached after {0} items")]
    ResourceLimit(u64),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    NotWeierstrass,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    DegreeSpecial(Box<DegreeSpecialCertificate>),
    Buchweitz(BuchweitzEvidence),
}

impl Reason {
    pub fn criterion(&self) -> &'static str {
        match self {
            Reason::DegreeSpecial(_) => "degree-special",
            Reason::Buchweitz(_) => "buchweitz",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Reason::DegreeSpecial(c) => {
                json!({"criterion": self.criterion(), "certificate": c.to_json()})
            }
            Reason::Buchweitz(e) => json!({"criterion": self.criterion(), "evidence": e}),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reasons: Vec<Reason>,
}

impl Verdict {
    pub fn from_reasons(reasons: Vec<Reason>) -> Self {
        let status = if reasons.is_empty() {
            Status::Unknown
        } else {
            Status::NotWeierstrass
        };
        Verdict { status, reasons }
    }
}

/// Runs the degree-special search and the gap-sum count. Never claims
/// that a semigroup is Weierstrass.
pub fn certify_not_weierstrass(s: &NumericalSemigroup) -> Verdict {
    let mut reasons = Vec::new();
    if let Some(cert) = find_degree_special_certificate(s) {
        reasons.push(Reason::DegreeSpecial(Box::new(cert)));
    }
    if let Ok(Some(e)) = buchweitz_test(s, 2) {
        reasons.push(Reason::Buchweitz(e));
    }
    Verdict::from_reasons(reasons)
}
