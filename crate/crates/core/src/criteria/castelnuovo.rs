//! Castelnuovo's genus bound and the numeric gate of Torres's argument.

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

use super::CriteriaError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CastelnuovoInput {
    pub d: u64,
    pub r: u64,
    pub n: u64,
    pub epsilon: u64,
}

impl CastelnuovoInput {
    /// Writes `d - 1 = n(r - 1) + epsilon` with `0 <= epsilon <= r - 2`.
    pub fn new(d: u64, r: u64) -> Result<Self, CriteriaError> {
        if r < 2 {
            return Err(CriteriaError::DegenerateInput(format!(
                "r must be at least 2, got {r}"
            )));
        }
        if d == 0 {
            return Err(CriteriaError::DegenerateInput("d must be positive".into()));
        }
        let n = (d - 1) / (r - 1);
        let epsilon = (d - 1) % (r - 1);
        if n == 0 {
            return Err(CriteriaError::DegenerateInput(format!(
                "a nondegenerate curve in P^{r} has degree at least {r}, got {d}"
            )));
        }
        Ok(CastelnuovoInput { d, r, n, epsilon })
    }

    /// True when `epsilon = r - 2`, the one value admitted by the closed
    /// range but excluded by the strict one.
    pub fn epsilon_is_maximal(&self) -> bool {
        self.epsilon == self.r - 2
    }
}

/// `(r - 1) n (n - 1) / 2 + n epsilon`.
pub fn castelnuovo_pi0(inp: &CastelnuovoInput) -> u64 {
    (inp.r - 1) * inp.n * (inp.n - 1) / 2 + inp.n * inp.epsilon
}

/// Whether the genus of `lprime` exceeds the Castelnuovo bound for
/// degree `d` curves in `P^r`.
pub fn torres_bound_check(
    lprime: &NumericalSemigroup,
    d: u64,
    r: u64,
) -> Result<bool, CriteriaError> {
    let inp = CastelnuovoInput::new(d, r)?;
    Ok(u64::from(lprime.genus()) > castelnuovo_pi0(&inp))
}
