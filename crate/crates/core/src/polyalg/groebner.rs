//! Division, Buchberger's algorithm and minimal generators.

use super::poly::{Polynomial, Term};
use super::ring::{Monomial, Ring};
use super::PolyError;

fn check_rings<'a>(
    polys: impl IntoIterator<Item = &'a Polynomial>,
    ring: &Ring,
) -> Result<(), PolyError> {
    for p in polys {
        if !(std::sync::Arc::ptr_eq(p.ring(), ring) || **p.ring() == **ring) {
            return Err(PolyError::RingMismatch);
        }
    }
    Ok(())
}

/// Remainder of `f` on division by `basis`.
///
/// Reducers are tried in list order against the current leading term; terms
/// that no leading term divides move to the remainder.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial, PolyError> {
    check_rings(basis, f.ring())?;
    Ok(reduce(f, basis, true))
}

/// Reduces only while the leading term is divisible.
pub fn lead_reduce(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial, PolyError> {
    check_rings(basis, f.ring())?;
    Ok(reduce(f, basis, false))
}

fn reduce(f: &Polynomial, basis: &[Polynomial], full: bool) -> Polynomial {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.lead() {
        let reducer = basis
            .iter()
            .find(|g| g.lm().is_some_and(|m| m.divides(&lt.mono)));
        match reducer {
            Some(g) => {
                let gl = g.lead().unwrap();
                let c = -(&lt.coeff / &gl.coeff);
                let m = gl.mono.quotient_of(&lt.mono);
                p = p.add_mul_term(&c, &m, g);
            }
            None if full => rem.push(p.pop_lead().unwrap()),
            None => break,
        }
    }
    if rem.is_empty() {
        return p;
    }
    // everything left in p is smaller than every remainder term
    let mut desc = rem;
    desc.extend(p.terms().cloned());
    Polynomial::from_descending(&ring, desc)
}

/// S-polynomial of `f` and `g` (both nonzero).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (fl, gl) = (f.lead().unwrap(), g.lead().unwrap());
    let l = ring.lcm(&fl.mono, &gl.mono);
    let a = f.mul_term(&fl.coeff.inv(), &fl.mono.quotient_of(&l));
    a.add_mul_term(&-&gl.coeff.inv(), &gl.mono.quotient_of(&l), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: Option<usize>,
    lcm: Monomial,
}

struct Engine {
    ring: Ring,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, i: usize) -> Monomial {
        self.basis[i].lm().unwrap()
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let hm = self.lm(h);
        let cands: Vec<Pair> = (0..h)
            .filter(|&k| self.active[k])
            .map(|k| Pair {
                i: k,
                j: Some(h),
                lcm: self.ring.lcm(&self.lm(k), &hm),
            })
            .collect();
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (idx, p) in cands.iter().enumerate() {
            let coprime = self.lm(p.i).is_coprime(&hm);
            let dominated = cands[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push((p.clone(), coprime));
            }
        }
        let ring = self.ring.clone();
        let basis = &self.basis;
        self.pairs.retain(|p| match p.j {
            None => true,
            Some(j) => {
                !hm.divides(&p.lcm)
                    || ring.lcm(&basis[p.i].lm().unwrap(), &hm) == p.lcm
                    || ring.lcm(&basis[j].lm().unwrap(), &hm) == p.lcm
            }
        });
        self.pairs.extend(
            kept.into_iter()
                .filter(|(_, coprime)| !coprime)
                .map(|(p, _)| p),
        );
        for k in 0..h {
            if self.active[k] && hm.divides(&self.lm(k)) {
                self.active[k] = false;
            }
        }
    }

    fn next_pair(&mut self, max_degree: Option<u32>) -> Option<Pair> {
        let ring = &self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| max_degree.is_none_or(|d| p.lcm.degree() <= d))
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// ascending leading monomial. Uses the normal selection strategy with
/// Buchberger's criteria in Gebauer–Möller form.
pub fn buchberger(gens: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
    buchberger_truncated(gens, None)
}

/// Like [`buchberger`], but ignores S-pairs and generators above
/// `max_degree`. For homogeneous input the result agrees with the full
/// basis in all degrees up to `max_degree`.
pub fn buchberger_truncated(
    gens: &[Polynomial],
    max_degree: Option<u32>,
) -> Result<Vec<Polynomial>, PolyError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    check_rings(gens, &ring)?;
    if max_degree.is_some() && gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(PolyError::NotHomogeneous);
    }
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        let (la, lb) = (a.lm().unwrap(), b.lm().unwrap());
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| ring.cmp(&la, &lb))
    });
    let mut eng = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut next_input = 0;
    loop {
        let pending_deg = input.get(next_input).map(|g| g.lm().unwrap().degree());
        let pair = eng.next_pair(max_degree);
        let take_input = match (&pair, pending_deg) {
            (_, Some(d)) if max_degree.is_some_and(|m| d > m) => false,
            (None, Some(_)) => true,
            (Some(p), Some(d)) => d <= p.lcm.degree(),
            _ => false,
        };
        let candidate = if take_input {
            if let Some(p) = pair {
                eng.pairs.push(p);
            }
            next_input += 1;
            input[next_input - 1].clone()
        } else {
            match pair {
                Some(Pair { i, j: Some(j), .. }) => s_polynomial(&eng.basis[i], &eng.basis[j]),
                Some(Pair { j: None, .. }) => unreachable!(),
                None => break,
            }
        };
        let h = reduce(&candidate, &eng.basis, true);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        eng.basis.push(h.monic());
        eng.active.push(true);
        let idx = eng.basis.len() - 1;
        eng.update(idx);
    }
    let mut minimal: Vec<Polynomial> = eng
        .basis
        .iter()
        .zip(&eng.active)
        .filter(|(_, &a)| a)
        .map(|(g, _)| g.clone())
        .collect();
    minimal.sort_by(|a, b| ring.cmp(&a.lm().unwrap(), &b.lm().unwrap()));
    Ok(interreduce(minimal))
}

/// Tail-reduces a minimal Gröbner basis (distinct, mutually non-dividing
/// leading monomials) into the reduced basis.
fn interreduce(minimal: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out = minimal.clone();
    for i in 0..out.len() {
        let others: Vec<Polynomial> = out
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        out[i] = reduce(&out[i], &others, true).monic();
    }
    out
}

/// Whether `basis` is a Gröbner basis of the ideal it generates.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<Polynomial> = nonzero.iter().map(|g| (*g).clone()).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let (a, b) = (nonzero[i].lm().unwrap(), nonzero[j].lm().unwrap());
            if a.is_coprime(&b) {
                continue;
            }
            if !reduce(&s_polynomial(nonzero[i], nonzero[j]), &owned, false).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A minimal homogeneous generating set drawn from `gens`, in ascending
/// degree order.
pub fn minimal_generators(gens: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(PolyError::NotHomogeneous);
    }
    let mut sorted: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if let Some(first) = sorted.first() {
        let ring = first.ring().clone();
        check_rings(&sorted, &ring)?;
        sorted.sort_by(|a, b| {
            let (la, lb) = (a.lm().unwrap(), b.lm().unwrap());
            la.degree()
                .cmp(&lb.degree())
                .then_with(|| ring.cmp(&la, &lb))
        });
    }
    let mut kept: Vec<Polynomial> = Vec::new();
    for f in sorted {
        let redundant = if kept.is_empty() {
            false
        } else {
            let gb = buchberger_truncated(&kept, f.degree())?;
            reduce(&f, &gb, true).is_zero()
        };
        if !redundant {
            kept.push(f);
        }
    }
    Ok(kept)
}
