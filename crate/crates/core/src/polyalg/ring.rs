//! Monomials, monomial orders and weighted polynomial rings.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::PolyError;

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 12;

/// A monomial with its weighted degree cached.
///
/// Exponent slots beyond the ring's variable count are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: usize) -> u32 {
        u32::from(self.exps[var])
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| u32::from(e)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn support(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("exponent overflow");
        }
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            debug_assert!(*e >= *s);
            *e -= *s;
        }
        Monomial {
            degree: other.degree - self.degree,
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Lexicographic comparison of exponent vectors, variable 0 most significant.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}@{}", &self.exps[..last], self.degree)
    }
}

/// Weighted degree order with optional elimination block and a
/// reverse-lexicographic tie-break.
///
/// Monomials are compared by weighted degree, then by the total exponent of
/// the eliminated variables (more is larger), then reverse-lexicographically
/// with `precedence` listing the variables from largest to smallest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
    eliminate: Vec<usize>,
}

impl MonomialOrder {
    /// Reverse-lexicographic tie-break with `precedence[0]` the largest variable.
    pub fn weighted_revlex(precedence: Vec<usize>) -> Result<Self, PolyError> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &v in &precedence {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(PolyError::InvalidOrder(format!(
                    "{precedence:?} is not a permutation"
                )));
            }
        }
        Ok(MonomialOrder {
            precedence,
            eliminate: Vec::new(),
        })
    }

    /// Variables ordered by index, variable 0 largest.
    pub fn default_for(nvars: usize) -> Self {
        MonomialOrder {
            precedence: (0..nvars).collect(),
            eliminate: Vec::new(),
        }
    }

    /// Same order, but the given variables are eliminated first among
    /// monomials of equal degree. Only an elimination order for
    /// homogeneous input.
    pub fn eliminating(mut self, vars: Vec<usize>) -> Self {
        self.eliminate = vars;
        self
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn eliminated(&self) -> &[usize] {
        &self.eliminate
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree.cmp(&b.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        if !self.eliminate.is_empty() {
            let ea: u32 = self.eliminate.iter().map(|&v| u32::from(a.exps[v])).sum();
            let eb: u32 = self.eliminate.iter().map(|&v| u32::from(b.exps[v])).sum();
            match ea.cmp(&eb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for &v in self.precedence.iter().rev() {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

/// Polynomial ring over the rationals with a positive grading and a fixed
/// monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRing {
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub type Ring = Arc<GradedRing>;

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Ring, PolyError> {
        if names.len() != weights.len() || order.nvars() != names.len() {
            return Err(PolyError::InvalidRing(
                "names, weights and order disagree on the variable count".into(),
            ));
        }
        if names.len() > MAX_VARS {
            return Err(PolyError::InvalidRing(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(PolyError::InvalidRing("weights must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = !n.is_empty()
                && n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::InvalidRing(format!(
                    "duplicate variable name `{n}`"
                )));
            }
        }
        Ok(Arc::new(GradedRing {
            names,
            weights,
            order,
        }))
    }

    /// Standard-graded ring `x0..x{n-1}` with the default order.
    pub fn standard(nvars: usize) -> Ring {
        GradedRing::new(
            (0..nvars).map(|i| format!("x{i}")).collect(),
            vec![1; nvars],
            MonomialOrder::default_for(nvars),
        )
        .expect("valid standard ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring, PolyError> {
        GradedRing::new(self.names.clone(), self.weights.clone(), order)
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial, PolyError> {
        if exps.len() != self.nvars() {
            return Err(PolyError::RingMismatch);
        }
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e)
                .map_err(|_| PolyError::InvalidRing(format!("exponent {e} too large")))?;
            m.degree += self.weights[i] * e;
        }
        Ok(m)
    }

    pub fn var_monomial(&self, var: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[var] = 1;
        m.degree = self.weights[var];
        m
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..self.nvars() {
            m.exps[i] = a.exps[i].max(b.exps[i]);
            m.degree += self.weights[i] * u32::from(m.exps[i]);
        }
        m
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exps[i] {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
