//! Homogeneous matrices between shifted free modules.

use serde_json::{json, Value};

use crate::polyalg::{parse_polynomial, ModuleElement, PolyError, Polynomial, Ring};

use super::ResolutionError;

/// A homogeneous map `⊕ P(-source[j]) -> ⊕ P(-target[i])`; entry `(i, j)` is
/// zero or homogeneous of degree `source[j] - target[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Ring,
    source: Vec<i64>,
    target: Vec<i64>,
    rows: Vec<Vec<Polynomial>>,
}

impl GradedMatrix {
    pub fn new(
        ring: &Ring,
        target: Vec<i64>,
        source: Vec<i64>,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self, ResolutionError> {
        if rows.len() != target.len() || rows.iter().any(|r| r.len() != source.len()) {
            return Err(ResolutionError::Shape(format!(
                "{}x{} shifts for a {}-row matrix",
                target.len(),
                source.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.same_ring(&Polynomial::zero(ring)) {
                    return Err(PolyError::RingMismatch.into());
                }
                if e.is_zero() {
                    continue;
                }
                let want = source[j] - target[i];
                if e.degree().map(i64::from) != Some(want) {
                    return Err(ResolutionError::NotHomogeneous {
                        row: i,
                        col: j,
                        formal_degree: want,
                    });
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            source,
            target,
            rows,
        })
    }

    /// Builds a matrix from polynomials, deriving the source shifts from
    /// the column degrees. Zero columns get the shift of their first target.
    pub fn from_columns(
        ring: &Ring,
        target: Vec<i64>,
        columns: &[Vec<Polynomial>],
    ) -> Result<Self, ResolutionError> {
        let nrows = target.len();
        let mut source = Vec::with_capacity(columns.len());
        for col in columns {
            let shift = col
                .iter()
                .enumerate()
                .find_map(|(i, e)| e.degree().map(|d| i64::from(d) + target[i]))
                .unwrap_or_else(|| target.first().copied().unwrap_or(0));
            source.push(shift);
        }
        let rows = (0..nrows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Self::new(ring, target, source, rows)
    }

    /// Parses a matrix given as rows of text polynomials.
    pub fn parse(ring: &Ring, target: Vec<i64>, rows: &[&[&str]]) -> Result<Self, ResolutionError> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); ncols];
        for row in rows {
            if row.len() != ncols {
                return Err(ResolutionError::Shape("ragged rows".into()));
            }
            for (j, s) in row.iter().enumerate() {
                cols[j].push(parse_polynomial(ring, s)?);
            }
        }
        Self::from_columns(ring, target, &cols)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns_as_elements(&self) -> Vec<ModuleElement> {
        (0..self.ncols())
            .map(|j| ModuleElement::new(self.column(j)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Polynomial::is_zero)
    }

    pub fn formal_degree(&self, i: usize, j: usize) -> i64 {
        self.source[j] - self.target[i]
    }

    /// `source[j] - target[i]` for every position.
    pub fn formal_degree_table(&self) -> Vec<Vec<i64>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|j| self.formal_degree(i, j))
                    .collect()
            })
            .collect()
    }

    pub fn has_unit_entry(&self) -> bool {
        self.rows.iter().flatten().any(Polynomial::is_unit)
    }

    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix, ResolutionError> {
        if self.ncols() != other.nrows() {
            return Err(ResolutionError::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut rows = Vec::with_capacity(self.nrows());
        for i in 0..self.nrows() {
            let mut row = Vec::with_capacity(other.ncols());
            for j in 0..other.ncols() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.ncols() {
                    let (a, b) = (&self.rows[i][k], &other.rows[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(GradedMatrix {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            rows,
        })
    }

    /// Rows `rows` and columns `cols`, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            source: cols.iter().map(|&j| self.source[j]).collect(),
            target: rows.iter().map(|&i| self.target[i]).collect(),
            rows: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Scales column `j` by `f`, shifting its source degree.
    pub fn scale_column(&self, j: usize, f: &Polynomial) -> GradedMatrix {
        let mut out = self.clone();
        for row in out.rows.iter_mut() {
            row[j] = &row[j] * f;
        }
        out.source[j] += i64::from(f.degree().unwrap_or(0));
        out
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Polynomial>> {
        &mut self.rows
    }

    pub(crate) fn remove_row(&mut self, i: usize) {
        self.rows.remove(i);
        self.target.remove(i);
    }

    pub(crate) fn remove_col(&mut self, j: usize) {
        for r in self.rows.iter_mut() {
            r.remove(j);
        }
        self.source.remove(j);
    }

    pub(crate) fn permute_rows(&mut self, perm: &[usize]) {
        self.rows = perm.iter().map(|&i| self.rows[i].clone()).collect();
        self.target = perm.iter().map(|&i| self.target[i]).collect();
    }

    pub(crate) fn permute_cols(&mut self, perm: &[usize]) {
        for r in self.rows.iter_mut() {
            *r = perm.iter().map(|&j| r[j].clone()).collect();
        }
        self.source = perm.iter().map(|&j| self.source[j]).collect();
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target,
            "source": self.source,
            "entries": self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(ring: &Ring, v: &Value) -> Result<Self, ResolutionError> {
        let bad = || ResolutionError::Shape(format!("bad matrix JSON {v}"));
        let shifts = |key: &str| -> Result<Vec<i64>, ResolutionError> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect()
        };
        let target = shifts("target")?;
        let source = shifts("source")?;
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| Ok(parse_polynomial(ring, e.as_str().ok_or_else(bad)?)?))
                    .collect::<Result<Vec<_>, ResolutionError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, target, source, rows)
    }
}

/// Fraction-free elimination on a copy of `rows`, pivoting on the first
/// nonzero entry of the remaining block in row-major order. Returns the
/// rank and, for square input, the determinant.
fn bareiss(rows: &[Vec<Polynomial>], ring: &Ring) -> (usize, Polynomial) {
    let mut a: Vec<Vec<Polynomial>> = rows.to_vec();
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut prev = Polynomial::one(ring);
    let mut sign_flip = false;
    let mut r = 0;
    while r < n.min(m) {
        let pivot = (r..n)
            .flat_map(|i| (r..m).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        if pi != r {
            a.swap(pi, r);
            sign_flip = !sign_flip;
        }
        if pj != r {
            for row in a.iter_mut() {
                row.swap(pj, r);
            }
            sign_flip = !sign_flip;
        }
        for i in r + 1..n {
            for j in r + 1..m {
                let num = &(&a[r][r] * &a[i][j]) - &(&a[i][r] * &a[r][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][r] = Polynomial::zero(ring);
        }
        prev = a[r][r].clone();
        r += 1;
    }
    let det = if n == m && r == n {
        if n == 0 {
            Polynomial::one(ring)
        } else if sign_flip {
            -&a[n - 1][n - 1]
        } else {
            a[n - 1][n - 1].clone()
        }
    } else {
        Polynomial::zero(ring)
    };
    (r, det)
}

/// Rank over the fraction field of the polynomial ring.
pub fn rank_of_matrix(m: &GradedMatrix) -> usize {
    bareiss(&m.rows, &m.ring).0
}

pub fn determinant(ring: &Ring, rows: &[Vec<Polynomial>]) -> Polynomial {
    assert!(
        rows.iter().all(|r| r.len() == rows.len()),
        "determinant of a non-square matrix"
    );
    match rows.len() {
        0 => Polynomial::one(ring),
        1 => rows[0][0].clone(),
        2 => &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]),
        _ => bareiss(rows, ring).1,
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All `r x r` minors, row subsets outermost, including zero minors.
pub fn minors(m: &GradedMatrix, r: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for rs in subsets(m.nrows(), r) {
        for cs in subsets(m.ncols(), r) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m.rows[i][j].clone()).collect())
                .collect();
            out.push(determinant(&m.ring, &sub));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::GradedRing;

    #[test]
    fn rank_and_determinant() {
        let r = GradedRing::standard(3);
        let m = GradedMatrix::parse(&r, vec![0, 0], &[&["x0"], &["0"]]).unwrap();
        assert_eq!(rank_of_matrix(&m), 1);
        let z = GradedMatrix::parse(&r, vec![0, 0], &[&["0", "0"], &["0", "0"]]).unwrap();
        assert_eq!(rank_of_matrix(&z), 0);
        // rank 2: third row is x2 * first + x0 * second
        let k = GradedMatrix::parse(
            &r,
            vec![1, 1, 0],
            &[
                &["x0", "x1", "0"],
                &["0", "x2", "x1"],
                &["x0*x2", "x1*x2+x0*x2", "x0*x1"],
            ],
        )
        .unwrap();
        assert_eq!(rank_of_matrix(&k), 2);
        let d = determinant(&r, k.rows());
        assert!(d.is_zero());
        let sq = GradedMatrix::parse(
            &r,
            vec![0, 0, 0],
            &[&["0", "x0", "0"], &["x1", "0", "0"], &["0", "0", "x2"]],
        )
        .unwrap();
        assert_eq!(determinant(&r, sq.rows()).to_string(), "-x0*x1*x2");
        let rows: Vec<Vec<Polynomial>> = sq.rows().to_vec();
        assert_eq!(bareiss(&rows, &r).1.to_string(), "-x0*x1*x2");
    }

    #[test]
    fn formal_degrees_come_from_shifts() {
        let r = GradedRing::standard(2);
        let z = GradedMatrix::new(
            &r,
            vec![1, 3],
            vec![2, 5, 0],
            vec![vec![Polynomial::zero(&r); 3]; 2],
        )
        .unwrap();
        assert_eq!(
            z.formal_degree_table(),
            vec![vec![1, 4, -1], vec![-1, 2, -3]]
        );
    }

    #[test]
    fn inhomogeneous_entries_are_rejected() {
        let r = GradedRing::standard(2);
        let e = GradedMatrix::parse(&r, vec![0], &[&["x0+x1^2"]]);
        assert!(e.is_err());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
