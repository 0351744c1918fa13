//! Numerical semigroups: construction from generators, Apéry sets, gaps and
//! enumeration by genus.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Node cap used by [`GenusTree`] unless configured otherwise.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyInput,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, so the complement is infinite")]
    NonCofiniteInput(u32),
    #[error("enumeration exceeded the node cap of {0}")]
    ResourceLimit(u64),
    #[error("cannot parse semigroup `{0}`")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A numerical semigroup, stored through its minimal generators together
/// with the derived data every consumer needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    multiplicity: u32,
    frobenius: i64,
    gaps: Vec<u32>,
    genus: u32,
    apery: Vec<u32>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `raw`, reduced to its minimal generators.
    pub fn from_generators(raw: &[u32]) -> Result<Self, SemigroupError> {
        if raw.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut gens = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(SemigroupError::NonCofiniteInput(g));
        }
        let m = gens[0];
        let apery = apery_sieve(&gens);
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            multiplicity: m,
            frobenius: i64::from(*apery.iter().max().unwrap()) - i64::from(m),
            gaps: Vec::new(),
            genus: apery.iter().map(|&w| w / m).sum(),
            apery,
        };
        s.gaps = (1..=s.frobenius.max(0) as u32)
            .filter(|&n| !s.contains(i64::from(n)))
            .collect();
        s.generators = gens
            .iter()
            .copied()
            .filter(|&x| {
                !(m..=x.saturating_sub(m))
                    .any(|a| s.contains(i64::from(a)) && s.contains(i64::from(x - a)))
            })
            .collect();
        Ok(s)
    }

    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("valid")
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Largest gap, or −1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `apery()[i]` is the least element congruent to `i` modulo the multiplicity.
    pub fn apery(&self) -> &[u32] {
        &self.apery
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = i64::from(self.multiplicity);
        n >= i64::from(self.apery[(n % m) as usize])
    }

    pub fn is_symmetric(&self) -> bool {
        self.frobenius >= 0 && 2 * i64::from(self.genus) == self.frobenius + 1
    }

    /// Children in the genus tree: remove a minimal generator larger than
    /// the Frobenius number. Ordered by the removed generator.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        self.generators
            .iter()
            .copied()
            .filter(|&x| i64::from(x) > self.frobenius)
            .map(|x| self.remove_generator(x))
            .collect()
    }

    fn remove_generator(&self, x: u32) -> NumericalSemigroup {
        let mut raw: Vec<u32> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| g != x)
            .collect();
        raw.extend(self.generators.iter().filter(|&&g| g != x).map(|&g| g + x));
        raw.extend([2 * x, 3 * x]);
        Self::from_generators(&raw)
            .expect("removing a generator above the Frobenius number keeps a numerical semigroup")
    }

    /// The semigroup generated by twice the generators of `self` and the odd
    /// number `2x + 1`.
    pub fn double_plus_odd(&self, x: u32) -> Result<NumericalSemigroup, SemigroupError> {
        let mut raw: Vec<u32> = self.generators.iter().map(|&g| 2 * g).collect();
        raw.push(2 * x + 1);
        Self::from_generators(&raw)
    }
}

/// Least element in each residue class modulo the smallest generator, by
/// sieving the membership bitmap until every class is hit.
fn apery_sieve(sorted_gens: &[u32]) -> Vec<u32> {
    let m = sorted_gens[0] as usize;
    let mut apery = vec![u32::MAX; m];
    apery[0] = 0;
    let mut found = 1;
    let mut member = vec![true];
    let mut n = 0usize;
    while found < m {
        n += 1;
        let hit = sorted_gens
            .iter()
            .take_while(|&&g| g as usize <= n)
            .any(|&g| member[n - g as usize]);
        member.push(hit);
        if hit && apery[n % m] == u32::MAX {
            apery[n % m] = n as u32;
            found += 1;
        }
    }
    apery
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    /// Accepts `<6,9,13,16>`, `{6, 9, 13, 16}` or a bare list.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['<', '{', '['])
            .trim_end_matches(['>', '}', ']']);
        let gens = inner
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| SemigroupError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generators(&gens)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupJson {
    generators: Vec<u32>,
    genus: u32,
    multiplicity: u32,
    gaps: Vec<u32>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SemigroupJson {
            generators: self.generators.clone(),
            genus: self.genus,
            multiplicity: self.multiplicity,
            gaps: self.gaps.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SemigroupJson::deserialize(deserializer)?;
        let s = NumericalSemigroup::from_generators(&raw.generators)
            .map_err(serde::de::Error::custom)?;
        if s.genus != raw.genus || s.multiplicity != raw.multiplicity || s.gaps != raw.gaps {
            return Err(serde::de::Error::custom(
                "derived fields disagree with the generators",
            ));
        }
        Ok(s)
    }
}

/// Depth-first walk of the genus tree down to `max_genus`, children ordered
/// by the removed generator. Yields every semigroup of genus at most
/// `max_genus` exactly once.
pub struct GenusTree {
    max_genus: u32,
    stack: Vec<NumericalSemigroup>,
    visited: u64,
    cap: u64,
}

impl GenusTree {
    pub fn new(max_genus: u32) -> Self {
        Self::with_cap(max_genus, DEFAULT_NODE_CAP)
    }

    pub fn with_cap(max_genus: u32, cap: u64) -> Self {
        GenusTree {
            max_genus,
            stack: vec![NumericalSemigroup::naturals()],
            visited: 0,
            cap,
        }
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }
}

impl Iterator for GenusTree {
    type Item = Result<NumericalSemigroup, SemigroupError>;

    fn next(&mut self) -> Option<Self::Item> {
        let node = self.stack.pop()?;
        if self.visited >= self.cap {
            self.stack.clear();
            return Some(Err(SemigroupError::ResourceLimit(self.cap)));
        }
        self.visited += 1;
        if node.genus < self.max_genus {
            let mut children = node.children();
            children.reverse();
            self.stack.extend(children);
        }
        Some(Ok(node))
    }
}

/// Counts of semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(max_genus: u32, cap: u64) -> Result<Vec<u64>, SemigroupError> {
    let mut counts = vec![0u64; max_genus as usize + 1];
    for s in GenusTree::with_cap(max_genus, cap) {
        counts[s?.genus() as usize] += 1;
    }
    Ok(counts)
}

/// All semigroups with exactly `embedding_dimension` minimal generators,
/// multiplicity in `multiplicities` and genus at most `max_genus`, sorted by
/// genus and then generators.
///
/// Generators are chosen in increasing order; a candidate is kept only if it
/// is not already in the semigroup spanned by the smaller ones, which makes
/// every generating set minimal by construction.
pub fn enumerate_by_embedding_dimension(
    embedding_dimension: usize,
    max_genus: u32,
    multiplicities: std::ops::RangeInclusive<u32>,
) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    if embedding_dimension == 0 {
        return out;
    }
    for m in multiplicities {
        if m == 0 || (m as usize) < embedding_dimension || m > max_genus + 1 {
            continue;
        }
        // minimal generators are at most F + m <= 2g - 1 + m
        let bound = (2 * max_genus + m) as usize;
        let mut member = vec![false; bound + 1];
        for k in (0..=bound).step_by(m as usize) {
            member[k] = true;
        }
        let mut chosen = vec![m];
        extend_generators(
            &mut chosen,
            &member,
            embedding_dimension,
            max_genus,
            bound,
            &mut out,
        );
    }
    out.sort_by(|a, b| {
        a.genus
            .cmp(&b.genus)
            .then_with(|| a.generators.cmp(&b.generators))
    });
    out
}

fn extend_generators(
    chosen: &mut Vec<u32>,
    member: &[bool],
    target: usize,
    max_genus: u32,
    bound: usize,
    out: &mut Vec<NumericalSemigroup>,
) {
    if chosen.len() == target {
        if let Ok(s) = NumericalSemigroup::from_generators(chosen) {
            if s.genus <= max_genus {
                debug_assert_eq!(s.generators, *chosen);
                out.push(s);
            }
        }
        return;
    }
    let start = *chosen.last().unwrap() as usize + 1;
    let mut gaps_below = member[1..start].iter().filter(|&&b| !b).count() as u32;
    for x in start..=bound {
        if gaps_below > max_genus {
            break;
        }
        if member[x] {
            continue;
        }
        // every remaining candidate stays a gap of the final semigroup
        gaps_below += 1;
        let mut next = member.to_vec();
        for n in x..=bound {
            if next[n - x] {
                next[n] = true;
            }
        }
        chosen.push(x as u32);
        extend_generators(chosen, &next, target, max_genus, bound, out);
        chosen.pop();
    }
}
