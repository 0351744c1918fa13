//! Ideals with cached Gröbner bases, codimension, regular sequences and
//! the toric ideal of a numerical semigroup.

use std::sync::{Arc, OnceLock};

use super::groebner::{buchberger, minimal_generators, normal_form};
use super::poly::Polynomial;
use super::ring::{GradedRing, MonomialOrder, Ring};
use super::PolyError;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        if generators
            .iter()
            .any(|g| !(Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring))
        {
            return Err(PolyError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    /// An ideal whose reduced Gröbner basis is already known.
    pub fn with_groebner_basis(
        ring: &Ring,
        generators: Vec<Polynomial>,
        gb: Vec<Polynomial>,
    ) -> Result<Self, PolyError> {
        let ideal = Self::new(ring, generators)?;
        let _ = ideal.gb.set(gb);
        Ok(ideal)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis in the ring's order, computed once.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            buchberger(&self.generators).expect("generators share the ideal's ring")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Polynomial::is_unit)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        if !(Arc::ptr_eq(f.ring(), &self.ring) || **f.ring() == *self.ring) {
            return Err(PolyError::RingMismatch);
        }
        Ok(normal_form(f, self.groebner_basis())?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, PolyError> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool, PolyError> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if *self.ring != *other.ring {
            return Err(PolyError::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                let p = a * b;
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, k: u32) -> Result<Ideal, PolyError> {
        let mut acc = Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)])?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Krull dimension of ring/I, read off the leading-term ideal as the
    /// largest set of variables containing no leading-monomial support.
    /// The zero ideal has dimension `nvars`; the unit ideal reports 0.
    pub fn dimension(&self) -> usize {
        let n = self.ring.nvars();
        let gb = self.groebner_basis();
        if gb.is_empty() {
            return n;
        }
        if gb.iter().any(Polynomial::is_unit) {
            return 0;
        }
        let supports: Vec<u32> = gb.iter().map(|g| g.lm().unwrap().support()).collect();
        (0u32..1 << n)
            .filter(|sigma| supports.iter().all(|s| s & !sigma != 0))
            .map(|sigma| sigma.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `nvars - dimension`; 0 for the zero ideal and `nvars` for the unit ideal.
    pub fn codimension(&self) -> usize {
        self.ring.nvars() - self.dimension()
    }
}

/// Whether the homogeneous polynomials `fs` form a regular sequence, that is
/// whether the ideal they generate has codimension `fs.len()`.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool, PolyError> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    if fs.iter().any(Polynomial::is_zero) {
        return Ok(false);
    }
    let ideal = Ideal::new(first.ring(), fs.to_vec())?;
    if ideal.is_unit() {
        return Ok(false);
    }
    Ok(ideal.codimension() == fs.len())
}

/// Variable name for a generator: `x<residue mod multiplicity>`.
pub fn residue_name(generator: u32, multiplicity: u32) -> String {
    format!("x{}", generator % multiplicity)
}

/// The polynomial ring of a semigroup: one variable per minimal generator,
/// in generator order, named by residue class and weighted by the generator.
///
/// `precedence` lists variable names from largest to smallest for the
/// reverse-lexicographic tie-break. By default the variable with the larger
/// residue class is larger.
pub fn semigroup_ring(
    s: &NumericalSemigroup,
    precedence: Option<&[String]>,
) -> Result<Ring, PolyError> {
    let m = s.multiplicity();
    let names: Vec<String> = s.generators().iter().map(|&g| residue_name(g, m)).collect();
    let order = match precedence {
        Some(p) => {
            let idx = p
                .iter()
                .map(|name| {
                    names.iter().position(|n| n == name).ok_or_else(|| {
                        PolyError::InvalidOrder(format!("unknown variable `{name}`"))
                    })
                })
                .collect::<Result<Vec<usize>, _>>()?;
            MonomialOrder::weighted_revlex(idx)?
        }
        None => {
            let mut idx: Vec<usize> = (0..names.len()).collect();
            idx.sort_by_key(|&i| std::cmp::Reverse(s.generators()[i] % m));
            MonomialOrder::weighted_revlex(idx)?
        }
    };
    GradedRing::new(names, s.generators().to_vec(), order)
}

/// Kernel of `x_j -> t^{s_j}`, by eliminating `t` from `<x_j - t^{s_j}>`.
///
/// Returns the ideal with its reduced Gröbner basis in the ring's order
/// attached; the listed generators are a minimal binomial generating set.
pub fn toric_ideal(ring: &Ring) -> Result<Ideal, PolyError> {
    let n = ring.nvars();
    let mut names = ring.names().to_vec();
    names.push("t".into());
    let mut weights = ring.weights().to_vec();
    weights.push(1);
    let mut precedence = vec![n];
    precedence.extend_from_slice(ring.order().precedence());
    let order = MonomialOrder::weighted_revlex(precedence)?.eliminating(vec![n]);
    let ext = GradedRing::new(names, weights, order)?;
    let gens: Vec<Polynomial> = (0..n)
        .map(|j| {
            let mut t_exps = vec![0u32; n + 1];
            t_exps[n] = ring.weights()[j];
            let mut x_exps = vec![0u32; n + 1];
            x_exps[j] = 1;
            Polynomial::from_exponents(&ext, &[(1, &x_exps), (-1, &t_exps)])
        })
        .collect::<Result<_, _>>()?;
    let gb = buchberger(&gens)?;
    let back: Vec<Option<usize>> = (0..=n).map(|i| (i < n).then_some(i)).collect();
    let t_mask = 1u32 << n;
    let mut eliminated: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.support() & t_mask == 0)
        .map(|g| g.map_vars(ring, &back))
        .collect::<Result<_, _>>()?;
    eliminated.sort_by(|a, b| ring.cmp(&a.lm().unwrap(), &b.lm().unwrap()));
    let minimal = minimal_generators(&eliminated)?;
    Ideal::with_groebner_basis(ring, minimal, eliminated)
}
