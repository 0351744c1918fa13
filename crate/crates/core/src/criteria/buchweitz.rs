//! Counting sums of gaps against the dimension of spaces of
//! pluricanonical differentials.

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

use super::CriteriaError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuchweitzEvidence {
    pub n: u32,
    /// Number of distinct sums of `n` gaps, repetition allowed.
    pub count: u64,
    /// `(2n - 1)(g - 1)`.
    pub bound: u64,
    pub witness: bool,
    /// Set for `n > 2`, where the bound generalizes the classical case.
    pub extension: bool,
}

/// Distinct values of `a_1 + ... + a_n` with every `a_i` a gap.
pub fn gap_sum_count(s: &NumericalSemigroup, n: u32) -> u64 {
    let gaps = s.gaps();
    if gaps.is_empty() || n == 0 {
        return u64::from(n == 0);
    }
    let max = *gaps.last().unwrap() as usize;
    let mut reach = vec![false; max * n as usize + 1];
    reach[0] = true;
    let mut top = 0usize;
    for _ in 0..n {
        let mut next = vec![false; reach.len()];
        for v in 0..=top {
            if reach[v] {
                for &g in gaps {
                    next[v + g as usize] = true;
                }
            }
        }
        top += max;
        reach = next;
    }
    reach.iter().filter(|&&b| b).count() as u64
}

pub fn buchweitz_counts(
    s: &NumericalSemigroup,
    n: u32,
) -> Result<BuchweitzEvidence, CriteriaError> {
    if s.genus() < 2 {
        return Err(CriteriaError::GenusTooSmall(s.genus()));
    }
    if n < 2 {
        return Err(CriteriaError::InvalidParameter(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let count = gap_sum_count(s, n);
    let bound = u64::from(2 * n - 1) * u64::from(s.genus() - 1);
    Ok(BuchweitzEvidence {
        n,
        count,
        bound,
        witness: count > bound,
        extension: n > 2,
    })
}

/// The counts when they witness that `s` is not Weierstrass.
pub fn buchweitz_test(
    s: &NumericalSemigroup,
    n: u32,
) -> Result<Option<BuchweitzEvidence>, CriteriaError> {
    let e = buchweitz_counts(s, n)?;
    Ok(e.witness.then_some(e))
}
