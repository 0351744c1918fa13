//! Enumeration and certification behind `wsg search`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use wsg_core::criteria::{buchweitz_test, find_degree_special_certificate, resolve_semigroup};
use wsg_core::resolution::betti_format;
use wsg_core::semigroup::{enumerate_by_embedding_dimension, GenusTree, SemigroupError};
use wsg_core::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    DegreeSpecial,
    Buchweitz,
    /// Either criterion.
    Any,
    /// No certification; list every candidate passing the filters.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub max_genus: u32,
    pub criterion: Criterion,
    pub generators: Option<usize>,
    pub format: Option<Vec<usize>>,
    pub min_multiplicity: u32,
    pub max_multiplicity: Option<u32>,
    pub smallest_per_multiplicity: bool,
    pub max_nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub generators: Vec<u32>,
    pub genus: u32,
    pub multiplicity: u32,
    pub criteria: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: u32,
    pub parameters: SearchParams,
    /// False when the node cap stopped enumeration early.
    pub complete: bool,
    pub examined: u64,
    pub results: Vec<Hit>,
}

fn candidates(p: &SearchParams) -> (Vec<NumericalSemigroup>, bool) {
    let lo = p.min_multiplicity.max(1);
    let hi = p
        .max_multiplicity
        .unwrap_or(p.max_genus + 1)
        .min(p.max_genus + 1);
    // a resolution of an e-generated semigroup ring has length e - 1
    let direct = match (p.criterion, p.generators, &p.format) {
        (_, Some(e), _) => Some(e),
        (_, None, Some(f)) => Some(f.len()),
        // only four-generated semigroups can have format {1,6,8,3}
        (Criterion::DegreeSpecial, None, None) => Some(4),
        _ => None,
    };
    let mut complete = true;
    let mut out = match direct {
        Some(e) => {
            let mut v = enumerate_by_embedding_dimension(e, p.max_genus, lo..=hi);
            if v.len() as u64 > p.max_nodes {
                v.truncate(p.max_nodes as usize);
                complete = false;
            }
            v
        }
        None => {
            let mut v = Vec::new();
            for s in GenusTree::with_cap(p.max_genus, p.max_nodes) {
                match s {
                    Ok(s) => {
                        if (lo..=hi).contains(&s.multiplicity()) {
                            v.push(s);
                        }
                    }
                    Err(SemigroupError::ResourceLimit(_)) => {
                        complete = false;
                        break;
                    }
                    Err(_) => unreachable!("the genus tree only reports resource limits"),
                }
            }
            v
        }
    };
    out.sort_by(|a, b| {
        a.genus()
            .cmp(&b.genus())
            .then_with(|| a.generators().cmp(b.generators()))
    });
    (out, complete)
}

fn certify(s: &NumericalSemigroup, p: &SearchParams) -> Option<Hit> {
    if let Some(f) = &p.format {
        let ok = s.embedding_dimension() == f.len()
            && s.embedding_dimension() < wsg_core::polyalg::MAX_VARS
            && resolve_semigroup(s)
                .ok()
                .and_then(|r| betti_format(&r).ok())
                .is_some_and(|b| &b.0 == f);
        if !ok {
            return None;
        }
    }
    let mut criteria = Vec::new();
    let want_ds = matches!(p.criterion, Criterion::DegreeSpecial | Criterion::Any);
    let want_bw = matches!(p.criterion, Criterion::Buchweitz | Criterion::Any);
    if want_ds && find_degree_special_certificate(s).is_some() {
        criteria.push("degree-special".to_owned());
    }
    if want_bw && matches!(buchweitz_test(s, 2), Ok(Some(_))) {
        criteria.push("buchweitz".to_owned());
    }
    if criteria.is_empty() && p.criterion != Criterion::None {
        return None;
    }
    Some(Hit {
        generators: s.generators().to_vec(),
        genus: s.genus(),
        multiplicity: s.multiplicity(),
        criteria,
    })
}

pub fn run(p: &SearchParams, jobs: usize, quiet: bool) -> Result<SearchReport, String> {
    let (cands, complete) = candidates(p);
    let total = cands.len() as u64;
    if !quiet {
        eprintln!(
            "searching {total} candidates up to genus {} with {jobs} job(s)",
            p.max_genus
        );
    }
    let done = AtomicU64::new(0);
    let step = (total / 10).max(1000);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let mut hits: Vec<Hit> = pool.install(|| {
        cands
            .par_iter()
            .filter_map(|s| {
                let hit = certify(s, p);
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if !quiet && n % step == 0 {
                    eprintln!("  {n}/{total}");
                }
                hit
            })
            .collect()
    });
    hits.sort_by(|a, b| {
        a.genus
            .cmp(&b.genus)
            .then_with(|| a.generators.cmp(&b.generators))
    });
    if p.smallest_per_multiplicity {
        let mut best: BTreeMap<u32, u32> = BTreeMap::new();
        for h in &hits {
            let g = best.entry(h.multiplicity).or_insert(h.genus);
            *g = (*g).min(h.genus);
        }
        hits.retain(|h| best[&h.multiplicity] == h.genus);
        hits.sort_by(|a, b| {
            a.multiplicity
                .cmp(&b.multiplicity)
                .then_with(|| a.generators.cmp(&b.generators))
        });
    }
    if !quiet {
        eprintln!(
            "{} hit(s) among {total} candidates{}",
            hits.len(),
            if complete { "" } else { " (node cap reached)" }
        );
    }
    Ok(SearchReport {
        schema: crate::analyze::SCHEMA,
        parameters: p.clone(),
        complete,
        examined: total,
        results: hits,
    })
}

fn tuple(gens: &[u32]) -> String {
    format!(
        "{{{}}}",
        gens.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

pub fn render_text(r: &SearchReport) -> String {
    let mut out = String::new();
    if r.parameters.smallest_per_multiplicity {
        for h in &r.results {
            out.push_str(&format!(
                "m = {}: {}, g = {}\n",
                h.multiplicity,
                tuple(&h.generators),
                h.genus
            ));
        }
    } else {
        let mut by_genus: BTreeMap<u32, Vec<&Hit>> = BTreeMap::new();
        for h in &r.results {
            by_genus.entry(h.genus).or_default().push(h);
        }
        for (g, hs) in by_genus {
            let parts: Vec<String> = hs.iter().map(|h| tuple(&h.generators)).collect();
            out.push_str(&format!("g = {g}: {}\n", parts.join(", ")));
        }
    }
    if !r.complete {
        out.push_str("# incomplete: node cap reached\n");
    }
    out
}
