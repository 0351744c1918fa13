//! Schreyer resolutions and their minimalization.

use serde_json::{json, Value};

use crate::polyalg::module::schreyer_step;
use crate::polyalg::{
    GradedRing, Ideal, ModuleElement, ModuleOrder, MonomialOrder, Polynomial, Ring,
};

use super::matrix::GradedMatrix;
use super::ResolutionError;

/// A graded free complex `F_0 <- F_1 <- ... <- F_L` with `F_0 = P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    ring: Ring,
    maps: Vec<GradedMatrix>,
}

/// Ranks of the nonzero modules `F_0, F_1, ...`.
#[derive(
    Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub struct BettiFormat(pub Vec<usize>);

impl std::fmt::Display for BettiFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FreeResolution {
    /// Wraps a list of maps; `maps[k]` is `phi_{k+1}: F_{k+1} -> F_k`.
    pub fn from_maps(ring: &Ring, maps: Vec<GradedMatrix>) -> Result<Self, ResolutionError> {
        for w in maps.windows(2) {
            if w[0].ncols() != w[1].nrows() || w[0].source() != w[1].target() {
                return Err(ResolutionError::Shape(
                    "consecutive maps do not share a module".into(),
                ));
            }
        }
        if let Some(first) = maps.first() {
            if first.nrows() != 1 {
                return Err(ResolutionError::Shape("F_0 must have rank 1".into()));
            }
        }
        if maps
            .iter()
            .any(|m| !std::sync::Arc::ptr_eq(m.ring(), ring) && **m.ring() != **ring)
        {
            return Err(crate::polyalg::PolyError::RingMismatch.into());
        }
        Ok(FreeResolution {
            ring: ring.clone(),
            maps,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `phi_k` for `k >= 1`.
    pub fn map(&self, k: usize) -> Option<&GradedMatrix> {
        k.checked_sub(1).and_then(|i| self.maps.get(i))
    }

    pub fn maps(&self) -> &[GradedMatrix] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Shifts of `F_k`.
    pub fn shifts(&self, k: usize) -> Vec<i64> {
        if k == 0 {
            return self.maps.first().map_or(vec![0], |m| m.target().to_vec());
        }
        self.maps
            .get(k - 1)
            .map_or_else(Vec::new, |m| m.source().to_vec())
    }

    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![1];
        out.extend(self.maps.iter().map(GradedMatrix::ncols));
        out
    }

    pub fn is_minimal(&self) -> bool {
        !self.maps.iter().any(GradedMatrix::has_unit_entry)
    }

    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }

    pub fn to_json(&self) -> Value {
        let ring = &self.ring;
        json!({
            "ring": {
                "variables": ring.names(),
                "weights": ring.weights(),
                "precedence": ring.order().precedence().iter().map(|&i| ring.names()[i].clone()).collect::<Vec<_>>(),
            },
            "format": self.ranks(),
            "maps": self.maps.iter().map(GradedMatrix::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, ResolutionError> {
        let bad = || ResolutionError::Shape("bad resolution JSON".into());
        let r = v.get("ring").ok_or_else(bad)?;
        let strings = |key: &str| -> Result<Vec<String>, ResolutionError> {
            r.get(key)
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_str().map(str::to_owned).ok_or_else(bad))
                .collect()
        };
        let names = strings("variables")?;
        let prec = strings("precedence")?;
        let weights = r
            .get("weights")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|w| u32::try_from(w).ok())
                    .ok_or_else(bad)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let prec_idx = prec
            .iter()
            .map(|p| names.iter().position(|n| n == p).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?;
        let ring = GradedRing::new(names, weights, MonomialOrder::weighted_revlex(prec_idx)?)?;
        let maps = v
            .get("maps")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|m| GradedMatrix::from_json(&ring, m))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_maps(&ring, maps)
    }

    /// Text block layout: `phi_1` transposed beside `phi_2`, with the
    /// transpose of `phi_3` underneath. Longer resolutions list the
    /// remaining maps afterwards.
    pub fn render(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let p1 = self.map(1);
        let p2 = self.map(2);
        if let Some(p1) = p1 {
            for i in 0..p1.ncols() {
                let mut row = vec![p1.entry(0, i).to_string()];
                if let Some(p2) = p2 {
                    row.push("|".into());
                    row.extend((0..p2.ncols()).map(|j| p2.entry(i, j).to_string()));
                }
                grid.push(row);
            }
        }
        if let (Some(p2), Some(p3)) = (p2, self.map(3)) {
            let width = 2 + p2.ncols();
            for j in 0..p3.ncols() {
                let mut row = vec![String::new(), "|".into()];
                row.extend((0..p3.nrows()).map(|i| p3.entry(i, j).to_string()));
                row.resize(width, String::new());
                grid.push(row);
            }
        }
        let mut out = render_grid(&grid);
        for k in 4..=self.length() {
            let m = self.map(k).expect("k within length");
            out.push_str(&format!("phi_{k}:\n"));
            let g: Vec<Vec<String>> = m
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            out.push_str(&render_grid(&g));
        }
        out
    }
}

fn render_grid(grid: &[Vec<String>]) -> String {
    let ncols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            grid.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:>w$}", w = widths[j]))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// The (usually non-minimal) resolution read off from iterated Schreyer
/// syzygies of the reduced Gröbner basis of `ideal`.
pub fn schreyer_resolution(ideal: &Ideal) -> Result<FreeResolution, ResolutionError> {
    let ring = ideal.ring().clone();
    if ideal.generators().iter().any(|g| !g.is_homogeneous()) {
        return Err(crate::polyalg::PolyError::NotHomogeneous.into());
    }
    if ideal.is_unit() {
        return Err(ResolutionError::UnitIdeal);
    }
    let mut gb: Vec<Polynomial> = ideal.groebner_basis().to_vec();
    if gb.is_empty() {
        return FreeResolution::from_maps(&ring, Vec::new());
    }
    gb.sort_by(|a, b| b.lm().expect("nonzero").cmp_lex(&a.lm().expect("nonzero")));

    let phi1 = GradedMatrix::from_columns(
        &ring,
        vec![0],
        &gb.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>(),
    )?;
    let mut maps = vec![phi1];
    let mut elements: Vec<ModuleElement> = gb
        .into_iter()
        .map(|g| ModuleElement::new(vec![g]))
        .collect();
    let mut order = ModuleOrder::term_over_position(1);
    loop {
        let step = schreyer_step(&elements, &order)?;
        if step.syzygies.is_empty() {
            break;
        }
        let target: Vec<i64> = step
            .order
            .totals()
            .iter()
            .map(|m| i64::from(m.degree()))
            .collect();
        let cols: Vec<Vec<Polynomial>> = step.syzygies.iter().map(|s| s.comps().to_vec()).collect();
        maps.push(GradedMatrix::from_columns(&ring, target, &cols)?);
        elements = step.syzygies;
        order = step.order;
    }
    FreeResolution::from_maps(&ring, maps)
}

/// Cancels unit entries until none remain, then orders every basis by
/// ascending shift.
pub fn minimalize(res: &FreeResolution) -> FreeResolution {
    let mut maps = res.maps.clone();
    'outer: loop {
        for k in 0..maps.len() {
            let found = (0..maps[k].nrows())
                .flat_map(|i| (0..maps[k].ncols()).map(move |j| (i, j)))
                .find(|&(i, j)| maps[k].entry(i, j).is_unit());
            if let Some((i, j)) = found {
                cancel(&mut maps, k, i, j);
                continue 'outer;
            }
        }
        break;
    }
    while maps.last().is_some_and(|m| m.ncols() == 0) {
        maps.pop();
    }
    for k in 0..maps.len() {
        let mut perm: Vec<usize> = (0..maps[k].ncols()).collect();
        perm.sort_by_key(|&j| maps[k].source()[j]);
        maps[k].permute_cols(&perm);
        if k + 1 < maps.len() {
            maps[k + 1].permute_rows(&perm);
        }
    }
    FreeResolution {
        ring: res.ring.clone(),
        maps,
    }
}

/// Splits off the trivial summand `P(-a) <- P(-a)` given by the unit at
/// `(i, j)` of `maps[k]`.
fn cancel(maps: &mut [GradedMatrix], k: usize, i: usize, j: usize) {
    let m = &mut maps[k];
    let c = m.entry(i, j).constant_value().expect("unit entry");
    let cinv = c.inv();
    let pivot_row: Vec<Polynomial> = m.rows()[i].clone();
    let nrows = m.nrows();
    let rows = m.rows_mut();
    for r in 0..nrows {
        if r == i || rows[r][j].is_zero() {
            continue;
        }
        let factor = rows[r][j].scale(&cinv);
        for (l, p) in pivot_row.iter().enumerate() {
            if l != j && !p.is_zero() {
                rows[r][l] = &rows[r][l] - &(&factor * p);
            }
        }
    }
    m.remove_row(i);
    m.remove_col(j);
    if let Some(next) = maps.get_mut(k + 1) {
        next.remove_row(j);
    }
    if k > 0 {
        maps[k - 1].remove_col(i);
    }
}

pub fn minimal_free_resolution(ideal: &Ideal) -> Result<FreeResolution, ResolutionError> {
    Ok(minimalize(&schreyer_resolution(ideal)?))
}

pub fn betti_format(res: &FreeResolution) -> Result<BettiFormat, ResolutionError> {
    if !res.is_minimal() {
        return Err(ResolutionError::NotMinimal);
    }
    Ok(BettiFormat(res.ranks()))
}
