//! Exactness of free complexes via ranks and ideals of minors, and the
//! cofactor identity for self-dual complexes of format `{1,n,n,1}`.

use serde::{Deserialize, Serialize};

use crate::polyalg::{Coeff, Ideal, Polynomial};

use super::build::FreeResolution;
use super::matrix::{determinant, minors, rank_of_matrix, GradedMatrix};
use super::ResolutionError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessStep {
    /// Index of the map `phi_k`.
    pub k: usize,
    pub rank: usize,
    /// `rank F_k - rank phi_{k+1}`.
    pub expected_rank: usize,
    /// Codimension of the ideal of `rank`-minors; absent when the rank
    /// condition already failed.
    pub minors_codim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub exact: bool,
    pub steps: Vec<ExactnessStep>,
}

fn ideal_of_minors(m: &GradedMatrix, r: usize) -> Result<Ideal, ResolutionError> {
    let mut gens: Vec<Polynomial> = minors(m, r)
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    gens.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
    gens.dedup();
    Ok(Ideal::new(m.ring(), gens)?)
}

/// Codimension of the ideal of `r x r` minors of `m`.
pub fn minors_codimension(m: &GradedMatrix, r: usize) -> Result<usize, ResolutionError> {
    Ok(ideal_of_minors(m, r)?.codimension())
}

/// Acyclicity test: the complex is exact iff for every `k` the expected
/// ranks add up and the ideal of maximal nonvanishing minors of `phi_k`
/// has codimension at least `k`.
pub fn be_exactness(res: &FreeResolution) -> Result<ExactnessReport, ResolutionError> {
    if !res.is_complex() {
        return Err(ResolutionError::NotAComplex);
    }
    let len = res.length();
    let ranks: Vec<usize> = res.maps().iter().map(rank_of_matrix).collect();
    let mut steps = Vec::with_capacity(len);
    let mut exact = true;
    for k in (1..=len).rev() {
        let next = if k < len { ranks[k] } else { 0 };
        let expected = res.map(k).expect("k within length").ncols() - next;
        let rank = ranks[k - 1];
        let minors_codim = if rank == expected {
            let c = minors_codimension(res.map(k).expect("k within length"), rank)?;
            if c < k {
                exact = false;
            }
            Some(c)
        } else {
            exact = false;
            None
        };
        steps.push(ExactnessStep {
            k,
            rank,
            expected_rank: expected,
            minors_codim,
        });
    }
    steps.reverse();
    Ok(ExactnessReport { exact, steps })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorIdentity {
    /// The constant `u` with `phi1[a] * phi3[b] = u * (-1)^(a+b) * det phi2[rows != a, cols != b]`.
    pub unit: Option<Coeff>,
    pub holds: bool,
    pub pairs_checked: usize,
}

/// Checks the cofactor identity for a complex of format `{1,n,n,1}` over
/// every pair of indices.
pub fn be_minor_identity(res: &FreeResolution) -> Result<MinorIdentity, ResolutionError> {
    let ranks = res.ranks();
    if ranks.len() != 4 || ranks[1] != ranks[2] || ranks[3] != 1 {
        return Err(ResolutionError::RankMismatch(ranks));
    }
    let n = ranks[1];
    let (p1, p2, p3) = (
        res.map(1).unwrap(),
        res.map(2).unwrap(),
        res.map(3).unwrap(),
    );
    let ring = res.ring();
    let mut unit: Option<Coeff> = None;
    let mut holds = true;
    let mut pairs = 0;
    for a in 0..n {
        let rows: Vec<usize> = (0..n).filter(|&i| i != a).collect();
        for b in 0..n {
            pairs += 1;
            let cols: Vec<usize> = (0..n).filter(|&j| j != b).collect();
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| p2.entry(i, j).clone()).collect())
                .collect();
            let mut rhs = determinant(ring, &sub);
            if (a + b) % 2 == 1 {
                rhs = -&rhs;
            }
            let lhs = p1.entry(0, a) * p3.entry(b, 0);
            match (lhs.is_zero(), rhs.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => {
                    holds = false;
                    continue;
                }
                _ => {}
            }
            let ratio = lhs.div_exact(&rhs).and_then(|q| q.constant_value());
            match (&unit, ratio) {
                (_, None) => holds = false,
                (None, Some(u)) => unit = Some(u),
                (Some(u), Some(v)) => holds &= *u == v,
            }
        }
    }
    Ok(MinorIdentity {
        holds: holds && unit.is_some(),
        unit,
        pairs_checked: pairs,
    })
}
