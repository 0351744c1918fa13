//! Submodules of graded free modules: module orders, division with
//! quotients, Buchberger for modules and Schreyer syzygies.

use std::cmp::Ordering;

use super::coeff::Coeff;
use super::poly::{Polynomial, Term};
use super::ring::{Monomial, Ring};
use super::PolyError;

/// A vector of polynomials, one per basis element of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    comps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        assert!(
            !comps.is_empty(),
            "module elements need at least one component"
        );
        ModuleElement { comps }
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        ModuleElement {
            comps: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn ring(&self) -> &Ring {
        self.comps[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        ModuleElement {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `self + c * m * other`.
    pub fn add_mul_term(&self, c: &Coeff, m: &Monomial, other: &ModuleElement) -> Self {
        ModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add_mul_term(c, m, b))
                .collect(),
        }
    }

    fn add_mul_term_in_place(&mut self, c: &Coeff, m: &Monomial, other: &ModuleElement) {
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            if !b.is_zero() {
                *a = a.add_mul_term(c, m, b);
            }
        }
    }
}

/// Order on the terms `m * e_i` of a free module: compare `m * totals[i]`
/// in the ring order, then prefer the smaller rank.
///
/// With all totals equal to 1 this is a term-over-position order; the
/// Schreyer order induced by a Gröbner basis stores the basis leading
/// monomials as totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    totals: Vec<Monomial>,
    ranks: Vec<u32>,
}

impl ModuleOrder {
    pub fn term_over_position(rank: usize) -> Self {
        ModuleOrder {
            totals: vec![Monomial::one(); rank],
            ranks: (0..rank as u32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.totals.len()
    }

    pub fn totals(&self) -> &[Monomial] {
        &self.totals
    }

    #[inline]
    pub fn cmp_terms(&self, ring: &Ring, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ta = a.0.mul(&self.totals[a.1]);
        let tb = b.0.mul(&self.totals[b.1]);
        ring.cmp(&ta, &tb)
            .then_with(|| self.ranks[b.1].cmp(&self.ranks[a.1]))
    }

    /// Leading term as `(component, monomial, coefficient)`.
    pub fn lead(&self, v: &ModuleElement) -> Option<(usize, Monomial, Coeff)> {
        let ring = v.ring();
        let mut best: Option<(usize, &Term)> = None;
        for (i, p) in v.comps.iter().enumerate() {
            if let Some(t) = p.lead() {
                let better = match best {
                    None => true,
                    Some((j, b)) => {
                        self.cmp_terms(ring, (&t.mono, i), (&b.mono, j)) == Ordering::Greater
                    }
                };
                if better {
                    best = Some((i, t));
                }
            }
        }
        best.map(|(i, t)| (i, t.mono, t.coeff.clone()))
    }
}

struct Reducers<'a> {
    gens: &'a [ModuleElement],
    leads: Vec<(usize, Monomial, Coeff)>,
    by_comp: Vec<Vec<usize>>,
}

impl<'a> Reducers<'a> {
    fn new(gens: &'a [ModuleElement], order: &ModuleOrder) -> Self {
        let leads: Vec<_> = gens
            .iter()
            .map(|g| order.lead(g).expect("nonzero reducer"))
            .collect();
        let mut by_comp = vec![Vec::new(); order.rank()];
        for (u, l) in leads.iter().enumerate() {
            by_comp[l.0].push(u);
        }
        Reducers {
            gens,
            leads,
            by_comp,
        }
    }

    fn find(&self, comp: usize, mono: &Monomial) -> Option<usize> {
        self.by_comp[comp]
            .iter()
            .copied()
            .find(|&u| self.leads[u].1.divides(mono))
    }
}

struct Reduction {
    remainder: ModuleElement,
    quotients: Vec<Vec<(Coeff, Monomial)>>,
}

fn reduce(v: &ModuleElement, reducers: &Reducers, order: &ModuleOrder, full: bool) -> Reduction {
    let ring = v.ring().clone();
    let mut cur = v.clone();
    let mut quotients = vec![Vec::new(); reducers.gens.len()];
    let mut rem: Vec<Vec<Term>> = vec![Vec::new(); v.rank()];
    while let Some((comp, mono, coeff)) = order.lead(&cur) {
        match reducers.find(comp, &mono) {
            Some(u) => {
                let (_, lm, lc) = &reducers.leads[u];
                let qc = &coeff / lc;
                let qm = lm.quotient_of(&mono);
                cur.add_mul_term_in_place(&-&qc, &qm, &reducers.gens[u]);
                quotients[u].push((qc, qm));
            }
            None if full => {
                let t = cur.comps[comp].pop_lead().unwrap();
                rem[comp].push(t);
            }
            None => break,
        }
    }
    let remainder = if full {
        ModuleElement {
            comps: rem
                .into_iter()
                .map(|desc| Polynomial::from_descending(&ring, desc))
                .collect(),
        }
    } else {
        cur
    };
    Reduction {
        remainder,
        quotients,
    }
}

fn check_rank(elems: &[ModuleElement], order: &ModuleOrder) -> Result<(), PolyError> {
    let ring = elems.first().map(|e| e.ring().clone());
    for e in elems {
        if e.rank() != order.rank() || ring.as_ref().is_some_and(|r| **e.ring() != **r) {
            return Err(PolyError::RingMismatch);
        }
    }
    Ok(())
}

/// Remainder of `v` on full division by `basis`.
pub fn module_normal_form(
    v: &ModuleElement,
    basis: &[ModuleElement],
    order: &ModuleOrder,
) -> Result<ModuleElement, PolyError> {
    check_rank(std::slice::from_ref(v), order)?;
    check_rank(basis, order)?;
    let nonzero: Vec<ModuleElement> = basis.iter().filter(|b| !b.is_zero()).cloned().collect();
    let reducers = Reducers::new(&nonzero, order);
    Ok(reduce(v, &reducers, order, true).remainder)
}

fn s_vector(
    a: &ModuleElement,
    la: &(usize, Monomial, Coeff),
    b: &ModuleElement,
    lb: &(usize, Monomial, Coeff),
) -> ModuleElement {
    let ring = a.ring();
    let l = ring.lcm(&la.1, &lb.1);
    let first =
        ModuleElement::zero(ring, a.rank()).add_mul_term(&la.2.inv(), &la.1.quotient_of(&l), a);
    first.add_mul_term(&-&lb.2.inv(), &lb.1.quotient_of(&l), b)
}

/// A Gröbner basis of the submodule generated by `gens` (Buchberger's
/// algorithm, pairs with equal leading component only).
pub fn module_groebner(
    gens: &[ModuleElement],
    order: &ModuleOrder,
) -> Result<Vec<ModuleElement>, PolyError> {
    check_rank(gens, order)?;
    let mut basis: Vec<ModuleElement> = Vec::new();
    let mut pending: Vec<ModuleElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    pending.reverse();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    loop {
        let candidate = if let Some(g) = pending.pop() {
            g
        } else if let Some((i, j)) = pairs.pop() {
            let (li, lj) = (
                order.lead(&basis[i]).unwrap(),
                order.lead(&basis[j]).unwrap(),
            );
            s_vector(&basis[i], &li, &basis[j], &lj)
        } else {
            break;
        };
        let reducers = Reducers::new(&basis, order);
        let h = reduce(&candidate, &reducers, order, true).remainder;
        if h.is_zero() {
            continue;
        }
        let lh = order.lead(&h).unwrap();
        let h = h.scale(&lh.2.inv());
        for (i, b) in basis.iter().enumerate() {
            if order.lead(b).unwrap().0 == lh.0 {
                pairs.push((i, basis.len()));
            }
        }
        basis.push(h);
    }
    Ok(basis)
}

/// Syzygies of a Gröbner basis, and the Schreyer order they are a Gröbner
/// basis for.
#[derive(Clone, Debug)]
pub struct SyzygyStep {
    /// Generators of the syzygy module, as elements of the free module with
    /// one basis vector per input element.
    pub syzygies: Vec<ModuleElement>,
    /// Schreyer order on that free module.
    pub order: ModuleOrder,
}

/// Schreyer's algorithm: the reduced S-pair relations of a Gröbner basis
/// generate its syzygy module and form a Gröbner basis for it in the
/// induced order.
///
/// Relations whose leading term is a multiple of another's are dropped, and
/// the result is sorted by leading component and then by descending
/// lexicographic leading monomial, which bounds the length of iterated
/// syzygies by the number of variables.
pub fn schreyer_step(gens: &[ModuleElement], order: &ModuleOrder) -> Result<SyzygyStep, PolyError> {
    check_rank(gens, order)?;
    if gens.iter().any(ModuleElement::is_zero) {
        return Err(PolyError::NotGroebner);
    }
    let n = gens.len();
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Ok(SyzygyStep {
            syzygies: Vec::new(),
            order: ModuleOrder::term_over_position(0),
        });
    };
    let reducers = Reducers::new(gens, order);
    let leads = &reducers.leads;

    let totals: Vec<Monomial> = leads
        .iter()
        .map(|(c, m, _)| m.mul(&order.totals[*c]))
        .collect();
    let mut by_rank: Vec<usize> = (0..n).collect();
    by_rank.sort_by_key(|&i| (order.ranks[leads[i].0], i));
    let mut ranks = vec![0u32; n];
    for (r, &i) in by_rank.iter().enumerate() {
        ranks[i] = r as u32;
    }
    let new_order = ModuleOrder { totals, ranks };

    let mut syzygies: Vec<(usize, Monomial, ModuleElement)> = Vec::new();
    for i in 0..n {
        let mut cands: Vec<(usize, Monomial)> = (i + 1..n)
            .filter(|&j| leads[j].0 == leads[i].0)
            .map(|j| {
                (
                    j,
                    leads[i].1.quotient_of(&ring.lcm(&leads[i].1, &leads[j].1)),
                )
            })
            .collect();
        // keep the minimal generators of the monomial ideal of leading terms
        let all = cands.clone();
        cands.retain(|(j, m)| !all.iter().any(|(k, q)| q.divides(m) && (q != m || k < j)));
        for (j, m_ji) in cands {
            let s = s_vector(&gens[i], &leads[i], &gens[j], &leads[j]);
            let red = reduce(&s, &reducers, order, false);
            if !red.remainder.is_zero() {
                return Err(PolyError::NotGroebner);
            }
            let l = ring.lcm(&leads[i].1, &leads[j].1);
            let mut terms: Vec<Vec<(Coeff, Monomial)>> = red.quotients;
            for t in terms.iter_mut() {
                for (c, _) in t.iter_mut() {
                    *c = -&*c;
                }
            }
            terms[i].push((leads[i].2.inv(), m_ji));
            terms[j].push((-&leads[j].2.inv(), leads[j].1.quotient_of(&l)));
            let comps: Vec<Polynomial> = terms
                .into_iter()
                .map(|t| Polynomial::from_terms(&ring, t))
                .collect();
            let tau = ModuleElement { comps }.scale(&leads[i].2);
            debug_assert_eq!(new_order.lead(&tau).map(|l| (l.0, l.1)), Some((i, m_ji)));
            syzygies.push((i, m_ji, tau));
        }
    }
    syzygies.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp_lex(&a.1)));
    Ok(SyzygyStep {
        syzygies: syzygies.into_iter().map(|(_, _, t)| t).collect(),
        order: new_order,
    })
}

/// Generators of the syzygy module of `columns`, which must be a Gröbner
/// basis of the submodule they generate with respect to `order`.
pub fn syzygies(
    columns: &[ModuleElement],
    order: &ModuleOrder,
) -> Result<Vec<ModuleElement>, PolyError> {
    Ok(schreyer_step(columns, order)?.syzygies)
}

/// Syzygies of polynomials forming a Gröbner basis of an ideal.
pub fn polynomial_syzygies(gb: &[Polynomial]) -> Result<Vec<ModuleElement>, PolyError> {
    let cols: Vec<ModuleElement> = gb
        .iter()
        .map(|g| ModuleElement::new(vec![g.clone()]))
        .collect();
    syzygies(&cols, &ModuleOrder::term_over_position(1))
}
