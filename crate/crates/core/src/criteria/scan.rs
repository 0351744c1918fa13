//! Exhaustive scans over four-generated semigroups.

use crate::semigroup::{enumerate_by_embedding_dimension, NumericalSemigroup};

use super::degree_special::{condition3, conditions_1_and_2, resolve_semigroup, Selection};
use super::CriteriaError;

/// Upper bound on the number of semigroups a scan will examine.
pub const DEFAULT_SCAN_CAP: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub examined: u64,
    /// Semigroups with at least one choice satisfying conditions (1) and (2).
    pub passing_conditions_1_2: Vec<NumericalSemigroup>,
    /// Choices satisfying (1) and (2) for which every route to (3) fails.
    pub counterexamples: Vec<(NumericalSemigroup, Selection)>,
}

/// Checks, for every four-generated semigroup up to `max_genus`, that
/// conditions (1) and (2) imply condition (3). Hits are reported, never
/// filtered.
pub fn conjecture_scan(max_genus: u32, cap: u64) -> Result<ScanReport, CriteriaError> {
    let all = enumerate_by_embedding_dimension(4, max_genus, 4..=max_genus + 1);
    if all.len() as u64 > cap {
        return Err(CriteriaError::ResourceLimit(cap));
    }
    let mut report = ScanReport {
        examined: 0,
        passing_conditions_1_2: Vec::new(),
        counterexamples: Vec::new(),
    };
    for s in all {
        report.examined += 1;
        let (passes, failures) = scan_one(&s)?;
        if passes {
            report.passing_conditions_1_2.push(s.clone());
        }
        report
            .counterexamples
            .extend(failures.into_iter().map(|sel| (s.clone(), sel)));
    }
    Ok(report)
}

/// Whether some choice satisfies (1) and (2), and the choices among those
/// for which (3) fails.
pub fn scan_one(s: &NumericalSemigroup) -> Result<(bool, Vec<Selection>), CriteriaError> {
    let res = resolve_semigroup(s)?;
    let sels = conditions_1_and_2(&res, s.multiplicity());
    let mut failures = Vec::new();
    for sel in &sels {
        if condition3(&res, sel)?.is_none() {
            failures.push(sel.clone());
        }
    }
    Ok((!sels.is_empty(), failures))
}
