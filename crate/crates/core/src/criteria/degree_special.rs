//! Degree-special detection on the minimal resolution of the semigroup
//! ring, and the {1,4,4,1} subcomplex it singles out.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::polyalg::{
    is_regular_sequence, parse_polynomial, semigroup_ring, toric_ideal, Ideal, Polynomial,
};
use crate::resolution::{
    be_exactness, betti_format, minimal_free_resolution, minors_codimension, BettiFormat,
    ExactnessReport, FreeResolution, GradedMatrix,
};
use crate::semigroup::NumericalSemigroup;

use super::CriteriaError;

/// The Betti format a degree-special semigroup ring must have.
pub const SPECIAL_FORMAT: [usize; 4] = [1, 6, 8, 3];

/// How acyclicity of the {1,4,4,1} subcomplex was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Condition3 {
    /// The 2x2 minors of the complementary 4x2 block of `phi_3` have
    /// codimension at least 2.
    ComplementMinors { codim: usize },
    /// Row `row` of `phi_2'` has two zeros, its other two entries form a
    /// regular sequence, and the 2x2 minors of the 3x2 block under the
    /// zeros have the degrees of the remaining generators.
    ZeroPattern {
        row: usize,
        zero_columns: [usize; 2],
        minor_degrees: Vec<i64>,
    },
    /// Direct exactness check of the subcomplex.
    Exactness { report: ExactnessReport },
}

impl Condition3 {
    pub fn name(&self) -> &'static str {
        match self {
            Condition3::ComplementMinors { .. } => "complement_minors",
            Condition3::ZeroPattern { .. } => "zero_pattern",
            Condition3::Exactness { .. } => "exactness",
        }
    }
}

/// The direct-summand subcomplex `P <- P^4 <- P^4 <- P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub phi1: GradedMatrix,
    pub phi2: GradedMatrix,
    pub phi3: GradedMatrix,
}

impl Subcomplex {
    pub fn as_resolution(&self) -> Result<FreeResolution, CriteriaError> {
        Ok(FreeResolution::from_maps(
            self.phi1.ring(),
            vec![self.phi1.clone(), self.phi2.clone(), self.phi3.clone()],
        )?)
    }

    /// The ideal generated by the entries of `phi_3'`.
    pub fn j_ideal(&self) -> Result<Ideal, CriteriaError> {
        Ok(Ideal::new(self.phi3.ring(), self.phi3.column(0))?)
    }
}

/// Selections made by conditions (1) and (2) on a {1,6,8,3} resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    /// Column of `phi_3` whose other rows have negative formal degree.
    pub distinguished_column: usize,
    /// The 4 rows of `phi_3` (basis elements of `F_2`) with non-negative
    /// formal degree in that column.
    pub support_rows: Vec<usize>,
    /// The 2 rows of `phi_2` (basis elements of `F_1`) vanishing on the
    /// support columns.
    pub zero_rows_phi2: [usize; 2],
    /// Formal degrees of the two rows in the support columns.
    pub zero_row_degrees: [[i64; 4]; 2],
}

impl Selection {
    pub fn kept_rows_phi2(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|i| !self.zero_rows_phi2.contains(i))
            .collect()
    }

    pub fn subcomplex(&self, res: &FreeResolution) -> Subcomplex {
        let (p1, p2, p3) = maps(res);
        let kept = self.kept_rows_phi2(p2.nrows());
        Subcomplex {
            phi1: p1.submatrix(&[0], &kept),
            phi2: p2.submatrix(&kept, &self.support_rows),
            phi3: p3.submatrix(&self.support_rows, &[self.distinguished_column]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpecialCertificate {
    pub semigroup: NumericalSemigroup,
    pub resolution: FreeResolution,
    pub selection: Selection,
    pub condition3: Condition3,
    /// The entries of `phi_3'`, a regular sequence.
    pub regular_sequence_witness: Vec<Polynomial>,
}

fn maps(res: &FreeResolution) -> (&GradedMatrix, &GradedMatrix, &GradedMatrix) {
    (
        res.map(1).expect("phi_1"),
        res.map(2).expect("phi_2"),
        res.map(3).expect("phi_3"),
    )
}

fn has_special_format(res: &FreeResolution) -> bool {
    matches!(betti_format(res), Ok(BettiFormat(f)) if f == SPECIAL_FORMAT)
}

/// All choices satisfying conditions (1) and (2), in search order: columns
/// of `phi_3` ascending, then pairs of `phi_2` rows lexicographically.
pub fn conditions_1_and_2(res: &FreeResolution, multiplicity: u32) -> Vec<Selection> {
    let mut out = Vec::new();
    if !has_special_format(res) {
        return out;
    }
    let (_, p2, p3) = maps(res);
    let m = i64::from(multiplicity);
    for c in 0..p3.ncols() {
        let support: Vec<usize> = (0..p3.nrows())
            .filter(|&i| p3.formal_degree(i, c) >= 0)
            .collect();
        if support.len() != 4 {
            continue;
        }
        let row_ok = |r: usize| {
            support
                .iter()
                .filter(|&&j| p2.formal_degree(r, j) < m)
                .count()
                >= 3
        };
        let candidates: Vec<usize> = (0..p2.nrows()).filter(|&r| row_ok(r)).collect();
        for (a, &p) in candidates.iter().enumerate() {
            for &q in &candidates[a + 1..] {
                // the entries are forced to vanish; confirm on the matrix
                if support
                    .iter()
                    .any(|&j| !p2.entry(p, j).is_zero() || !p2.entry(q, j).is_zero())
                {
                    continue;
                }
                let degs = |r: usize| {
                    let mut d = [0i64; 4];
                    for (k, &j) in support.iter().enumerate() {
                        d[k] = p2.formal_degree(r, j);
                    }
                    d
                };
                out.push(Selection {
                    distinguished_column: c,
                    support_rows: support.clone(),
                    zero_rows_phi2: [p, q],
                    zero_row_degrees: [degs(p), degs(q)],
                });
            }
        }
    }
    out
}

/// Condition (3), trying the two sufficient conditions before the direct
/// exactness check.
pub fn condition3(
    res: &FreeResolution,
    sel: &Selection,
) -> Result<Option<Condition3>, CriteriaError> {
    if let Some(c) = complement_minors_branch(res, sel)? {
        return Ok(Some(c));
    }
    let sub = sel.subcomplex(res);
    if let Some(c) = zero_pattern_branch(&sub)? {
        return Ok(Some(c));
    }
    exactness_branch(&sub)
}

pub fn complement_minors_branch(
    res: &FreeResolution,
    sel: &Selection,
) -> Result<Option<Condition3>, CriteriaError> {
    let (_, _, p3) = maps(res);
    let rows: Vec<usize> = (0..p3.nrows())
        .filter(|i| !sel.support_rows.contains(i))
        .collect();
    let cols: Vec<usize> = (0..p3.ncols())
        .filter(|&j| j != sel.distinguished_column)
        .collect();
    let codim = minors_codimension(&p3.submatrix(&rows, &cols), 2)?;
    Ok((codim >= 2).then_some(Condition3::ComplementMinors { codim }))
}

pub fn zero_pattern_branch(sub: &Subcomplex) -> Result<Option<Condition3>, CriteriaError> {
    let p2 = &sub.phi2;
    for row in 0..p2.nrows() {
        let zeros: Vec<usize> = (0..p2.ncols())
            .filter(|&j| p2.entry(row, j).is_zero())
            .collect();
        if zeros.len() != 2 {
            continue;
        }
        let others: Vec<Polynomial> = (0..p2.ncols())
            .filter(|j| !zeros.contains(j))
            .map(|j| p2.entry(row, j).clone())
            .collect();
        if !is_regular_sequence(&others)? {
            continue;
        }
        let rest: Vec<usize> = (0..p2.nrows()).filter(|&i| i != row).collect();
        let block = p2.submatrix(&rest, &zeros);
        let mut minor_degrees = Vec::with_capacity(3);
        let mut ok = true;
        for skip in 0..3 {
            let rr: Vec<usize> = (0..3).filter(|&i| i != skip).collect();
            let det = crate::resolution::determinant(
                p2.ring(),
                &rr.iter()
                    .map(|&i| block.rows()[i].clone())
                    .collect::<Vec<_>>(),
            );
            match det.degree() {
                Some(d) if !det.is_zero() => minor_degrees.push(i64::from(d)),
                _ => ok = false,
            }
        }
        if !ok {
            continue;
        }
        let mut want: Vec<i64> = rest.iter().map(|&i| sub.phi1.source()[i]).collect();
        let mut got = minor_degrees.clone();
        want.sort_unstable();
        got.sort_unstable();
        if want == got {
            return Ok(Some(Condition3::ZeroPattern {
                row,
                zero_columns: [zeros[0], zeros[1]],
                minor_degrees,
            }));
        }
    }
    Ok(None)
}

pub fn exactness_branch(sub: &Subcomplex) -> Result<Option<Condition3>, CriteriaError> {
    let report = be_exactness(&sub.as_resolution()?)?;
    Ok(report.exact.then_some(Condition3::Exactness { report }))
}

/// Searches the minimal resolution of `s` for a degree-special
/// certificate. The first hit in the fixed search order is returned.
pub fn find_degree_special_certificate(s: &NumericalSemigroup) -> Option<DegreeSpecialCertificate> {
    if s.embedding_dimension() != 4 {
        return None;
    }
    let res = resolve_semigroup(s).ok()?;
    certificate_from_resolution(s, &res).ok().flatten()
}

/// The minimal resolution of the semigroup ring in the default variable order.
pub fn resolve_semigroup(s: &NumericalSemigroup) -> Result<FreeResolution, CriteriaError> {
    resolve_semigroup_ordered(s, None)
}

/// The minimal resolution with a chosen variable precedence.
pub fn resolve_semigroup_ordered(
    s: &NumericalSemigroup,
    precedence: Option<&[String]>,
) -> Result<FreeResolution, CriteriaError> {
    let ring = semigroup_ring(s, precedence)?;
    Ok(minimal_free_resolution(&toric_ideal(&ring)?)?)
}

pub fn certificate_from_resolution(
    s: &NumericalSemigroup,
    res: &FreeResolution,
) -> Result<Option<DegreeSpecialCertificate>, CriteriaError> {
    for sel in conditions_1_and_2(res, s.multiplicity()) {
        let sub = sel.subcomplex(res);
        let witness = sub.phi3.column(0);
        if !is_regular_sequence(&witness)? {
            continue;
        }
        if let Some(c3) = condition3(res, &sel)? {
            return Ok(Some(DegreeSpecialCertificate {
                semigroup: s.clone(),
                resolution: res.clone(),
                selection: sel,
                condition3: c3,
                regular_sequence_witness: witness,
            }));
        }
    }
    Ok(None)
}

/// Ideal-membership check: entries of `phi_2'` lie in `J` and entries of
/// `phi_1'` lie in `J^2`, where `J` is generated by the entries of `phi_3'`.
pub fn verify_1441_structure(sub: &Subcomplex) -> bool {
    let check = || -> Result<bool, CriteriaError> {
        let j = sub.j_ideal()?;
        if j.is_unit() {
            return Ok(false);
        }
        let j2 = j.power(2)?;
        for e in sub.phi2.rows().iter().flatten() {
            if !j.contains(e)? {
                return Ok(false);
            }
        }
        for e in sub.phi1.rows().iter().flatten() {
            if !j2.contains(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    check().unwrap_or(false)
}

impl DegreeSpecialCertificate {
    pub fn subcomplex(&self) -> Subcomplex {
        self.selection.subcomplex(&self.resolution)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "semigroup": self.semigroup,
            "resolution": self.resolution.to_json(),
            "selection": self.selection,
            "condition3": self.condition3,
            "regular_sequence_witness": self.regular_sequence_witness.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CriteriaError> {
        let bad =
            |what: &str| CriteriaError::InvalidCertificate(format!("missing or malformed {what}"));
        let semigroup: NumericalSemigroup = serde_json::from_value(
            v.get("semigroup")
                .cloned()
                .ok_or_else(|| bad("semigroup"))?,
        )
        .map_err(|e| CriteriaError::InvalidCertificate(e.to_string()))?;
        let resolution =
            FreeResolution::from_json(v.get("resolution").ok_or_else(|| bad("resolution"))?)?;
        let selection: Selection = serde_json::from_value(
            v.get("selection")
                .cloned()
                .ok_or_else(|| bad("selection"))?,
        )
        .map_err(|e| CriteriaError::InvalidCertificate(e.to_string()))?;
        let condition3: Condition3 = serde_json::from_value(
            v.get("condition3")
                .cloned()
                .ok_or_else(|| bad("condition3"))?,
        )
        .map_err(|e| CriteriaError::InvalidCertificate(e.to_string()))?;
        let regular_sequence_witness = v
            .get("regular_sequence_witness")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("regular_sequence_witness"))?
            .iter()
            .map(|p| {
                let text = p.as_str().ok_or_else(|| bad("witness entry"))?;
                Ok(parse_polynomial(resolution.ring(), text)?)
            })
            .collect::<Result<Vec<_>, CriteriaError>>()?;
        Ok(DegreeSpecialCertificate {
            semigroup,
            resolution,
            selection,
            condition3,
            regular_sequence_witness,
        })
    }

    /// Re-checks every claim of the certificate from its own data: that
    /// `phi_1` generates the toric ideal of the semigroup, that the maps
    /// form a minimal complex of format {1,6,8,3}, and conditions (1)-(3).
    pub fn validate(&self) -> Result<(), CriteriaError> {
        let fail = |msg: &str| Err(CriteriaError::InvalidCertificate(msg.to_owned()));
        let res = &self.resolution;
        let s = &self.semigroup;
        if !has_special_format(res) {
            return fail("resolution is not minimal of format {1,6,8,3}");
        }
        if !res.is_complex() {
            return fail("maps do not compose to zero");
        }
        let names = res.ring().names();
        let precedence: Vec<String> = res
            .ring()
            .order()
            .precedence()
            .iter()
            .map(|&i| names[i].clone())
            .collect();
        let ring = semigroup_ring(s, Some(&precedence))?;
        if **res.ring() != *ring {
            return fail("resolution ring does not match the semigroup");
        }
        let toric = toric_ideal(&ring)?;
        let phi1 = Ideal::new(&ring, res.map(1).expect("phi_1").rows()[0].clone())?;
        if !phi1.same_ideal(&toric)? {
            return fail("phi_1 does not generate the toric ideal");
        }
        let sel = &self.selection;
        let (_, p2, p3) = maps(res);
        let c = sel.distinguished_column;
        if c >= p3.ncols()
            || sel.support_rows.len() != 4
            || sel.support_rows.iter().any(|&i| i >= p3.nrows())
        {
            return fail("selection indices out of range");
        }
        for i in 0..p3.nrows() {
            let nonneg = p3.formal_degree(i, c) >= 0;
            if nonneg != sel.support_rows.contains(&i) {
                return fail("condition (1) fails");
            }
        }
        let m = i64::from(s.multiplicity());
        for (k, &r) in sel.zero_rows_phi2.iter().enumerate() {
            if r >= p2.nrows() || sel.zero_rows_phi2[0] == sel.zero_rows_phi2[1] {
                return fail("selected phi_2 rows invalid");
            }
            let degs: Vec<i64> = sel
                .support_rows
                .iter()
                .map(|&j| p2.formal_degree(r, j))
                .collect();
            if degs != sel.zero_row_degrees[k] || degs.iter().filter(|&&d| d < m).count() < 3 {
                return fail("condition (2) degree bound fails");
            }
            if sel.support_rows.iter().any(|&j| !p2.entry(r, j).is_zero()) {
                return fail("condition (2) entries are not zero");
            }
        }
        let sub = self.subcomplex();
        if sub.phi3.column(0) != self.regular_sequence_witness
            || !is_regular_sequence(&self.regular_sequence_witness)?
        {
            return fail("phi_3' entries are not the claimed regular sequence");
        }
        let recomputed = match &self.condition3 {
            Condition3::ComplementMinors { .. } => complement_minors_branch(res, sel)?,
            Condition3::ZeroPattern { .. } => zero_pattern_branch(&sub)?,
            Condition3::Exactness { .. } => exactness_branch(&sub)?,
        };
        match recomputed {
            Some(c3) if c3 == self.condition3 => Ok(()),
            _ => fail("condition (3) evidence does not re-verify"),
        }
    }
}
