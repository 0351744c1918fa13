//! Sparse polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::coeff::Coeff;
use super::ring::{Monomial, Ring};
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A polynomial in a [`Ring`]. Terms are kept sorted ascending in the ring's
/// monomial order, so the leading term is the last element.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::term(ring, c, Monomial::one())
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Ring, var: usize) -> Self {
        Self::term(ring, Coeff::one(), ring.var_monomial(var))
    }

    pub fn term(ring: &Ring, coeff: Coeff, mono: Monomial) -> Self {
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Coeff, Monomial)>) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| Term { coeff, mono })
            .collect();
        raw.sort_by(|a, b| ring.cmp(&a.mono, &b.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Builds `Σ c * x^e` from exponent vectors.
    pub fn from_exponents(ring: &Ring, terms: &[(i64, &[u32])]) -> Result<Self, PolyError> {
        let mut ts = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            ts.push((Coeff::from_int(*c), ring.monomial(e)?));
        }
        Ok(Self::from_terms(ring, ts))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn lm(&self) -> Option<Monomial> {
        self.terms.last().map(|t| t.mono)
    }

    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.last().map(|t| &t.coeff)
    }

    /// Terms in descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Term> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [t] if t.mono.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Weighted degree, if the polynomial is nonzero and homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let d = self.terms.first()?.mono.degree();
        self.terms.iter().all(|t| t.mono.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, t| acc | t.mono.support())
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(Coeff::is_one)
    }

    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono,
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    /// `self + c * m * g`, computed by a single merge.
    pub fn add_mul_term(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert!(self.same_ring(g));
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                mono: t.mono.mul(m),
            })
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => ring.cmp(&x.mono, &y.mono),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = &x.coeff + &y.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            coeff: s,
                            mono: x.mono,
                        });
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Polynomial {
        let mut p = self.clone();
        p.terms.pop();
        p
    }

    pub(crate) fn pop_lead(&mut self) -> Option<Term> {
        self.terms.pop()
    }

    /// Builds from terms already in descending order with no duplicates or zeros.
    pub(crate) fn from_descending(ring: &Ring, mut desc: Vec<Term>) -> Polynomial {
        desc.reverse();
        debug_assert!(desc
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Less));
        Polynomial {
            ring: ring.clone(),
            terms: desc,
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv()));
        }
        let dl = d.lead().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.lead() {
            if !dl.mono.divides(&t.mono) {
                return None;
            }
            let qc = &t.coeff / &dl.coeff;
            let qm = dl.mono.quotient_of(&t.mono);
            rem = rem.add_mul_term(&-&qc, &qm, d);
            quot.push((qc, qm));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `var_map[i]` (or to zero when `None`).
    pub fn map_vars(
        &self,
        target: &Ring,
        var_map: &[Option<usize>],
    ) -> Result<Polynomial, PolyError> {
        if var_map.len() != self.ring.nvars() {
            return Err(PolyError::RingMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        'term: for t in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &dst) in var_map.iter().enumerate() {
                let e = t.mono.exponent(i);
                if e == 0 {
                    continue;
                }
                match dst {
                    Some(j) if j < exps.len() => exps[j] += e,
                    Some(_) => return Err(PolyError::RingMismatch),
                    None => continue 'term,
                }
            }
            terms.push((t.coeff.clone(), target.monomial(&exps)?));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// The same polynomial re-sorted in another ring with the same variables.
    pub fn with_ring(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = (0..self.ring.nvars()).map(Some).collect();
        if target.nvars() != self.ring.nvars() || target.weights() != self.ring.weights() {
            return Err(PolyError::RingMismatch);
        }
        self.map_vars(target, &map)
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::RingMismatch);
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or(PolyError::RingMismatch)?;
        if images.iter().any(|p| !p.same_ring(&images[0])) {
            return Err(PolyError::RingMismatch);
        }
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, img) in images.iter().enumerate() {
                let e = t.mono.exponent(i);
                if e > 0 {
                    prod = &prod * &img.pow(e);
                }
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_mul_term(&Coeff::one(), &Monomial::one(), rhs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_mul_term(&Coeff::from_int(-1), &Monomial::one(), rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.same_ring(rhs));
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() < rhs.terms.len() {
            return rhs * self;
        }
        let mut acc = Polynomial::zero(&self.ring);
        for t in &rhs.terms {
            acc = acc.add_mul_term(&t.coeff, &t.mono, self);
        }
        acc
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Coeff::from_int(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
