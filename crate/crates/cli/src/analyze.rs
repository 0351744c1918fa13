//! The single-semigroup pipeline behind `wsg analyze`.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use wsg_core::criteria::{
    buchweitz_counts, certificate_from_resolution, verify_1441_structure, BuchweitzEvidence,
    CriteriaError, DegreeSpecialCertificate, Reason, Verdict,
};
use wsg_core::polyalg::{semigroup_ring, toric_ideal, Ideal, MAX_VARS};
use wsg_core::resolution::{be_exactness, betti_format, minimal_free_resolution, FreeResolution};
use wsg_core::NumericalSemigroup;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub generators: Vec<u32>,
    pub genus: u32,
    pub multiplicity: u32,
    pub frobenius: i64,
    pub embedding_dimension: usize,
    pub symmetric: bool,
    pub gaps: Vec<u32>,
}

impl SemigroupSummary {
    pub fn of(s: &NumericalSemigroup) -> Self {
        SemigroupSummary {
            generators: s.generators().to_vec(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            embedding_dimension: s.embedding_dimension(),
            symmetric: s.is_symmetric(),
            gaps: s.gaps().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    /// Variables from highest to lowest precedence.
    pub precedence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub distinguished_column: usize,
    pub support_rows: Vec<usize>,
    pub zero_rows_phi2: [usize; 2],
    pub condition3: String,
    pub regular_sequence_witness: Vec<String>,
    /// Codimension of the ideal generated by the witness.
    pub witness_codim: usize,
    pub subcomplex_exact: bool,
    /// Entries of `phi_2'` lie in `J` and entries of `phi_1'` in `J^2`.
    pub structure_1441: bool,
    /// Self-contained certificate, re-checkable with `wsg verify`.
    pub data: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub status: String,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub semigroup: SemigroupSummary,
    pub ring: Option<RingSummary>,
    pub toric_ideal: Option<Vec<String>>,
    pub betti_format: Option<Vec<usize>>,
    pub shifts: Option<Vec<Vec<i64>>>,
    pub resolution: Option<Value>,
    pub certificate: Option<CertificateSummary>,
    pub buchweitz: Option<BuchweitzEvidence>,
    pub verdict: VerdictSummary,
    pub notes: Vec<String>,
    pub timing_us: Option<u64>,
}

pub struct AnalyzeOptions {
    pub order: Option<Vec<String>>,
    pub include_resolution: bool,
    pub timing: bool,
}

pub struct Analysis {
    pub report: AnalysisReport,
    pub verdict: Verdict,
    pub resolution: Option<FreeResolution>,
}

pub fn analyze(s: &NumericalSemigroup, opts: &AnalyzeOptions) -> Result<Analysis, CriteriaError> {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut reasons = Vec::new();
    let mut ring_summary = None;
    let mut toric = None;
    let mut resolution = None;
    let mut certificate = None;

    if s.embedding_dimension() < MAX_VARS {
        let ring = semigroup_ring(s, opts.order.as_deref())?;
        let names = ring.names();
        ring_summary = Some(RingSummary {
            variables: names.to_vec(),
            weights: ring.weights().to_vec(),
            precedence: ring
                .order()
                .precedence()
                .iter()
                .map(|&i| names[i].clone())
                .collect(),
        });
        let ideal: Ideal = toric_ideal(&ring)?;
        toric = Some(ideal.generators().iter().map(ToString::to_string).collect());
        let res = minimal_free_resolution(&ideal)?;
        if let Some(cert) = certificate_from_resolution(s, &res)? {
            certificate = Some(summarize(&cert)?);
            reasons.push(Reason::DegreeSpecial(Box::new(cert)));
        }
        resolution = Some(res);
    } else {
        notes.push(format!(
            "toric ideal and resolution skipped: at most {} generators are supported",
            MAX_VARS - 1
        ));
    }
    if s.embedding_dimension() != 4 {
        notes.push("degree-special criterion needs exactly 4 generators".into());
    }

    let buchweitz = match buchweitz_counts(s, 2) {
        Ok(e) => {
            if e.witness {
                reasons.push(Reason::Buchweitz(e.clone()));
            }
            Some(e)
        }
        Err(CriteriaError::GenusTooSmall(g)) => {
            notes.push(format!(
                "gap-sum count needs genus at least 2, genus is {g}"
            ));
            None
        }
        Err(e) => return Err(e),
    };

    let verdict = Verdict::from_reasons(reasons);
    let report = AnalysisReport {
        schema: SCHEMA,
        semigroup: SemigroupSummary::of(s),
        ring: ring_summary,
        toric_ideal: toric,
        betti_format: resolution
            .as_ref()
            .map(|r| betti_format(r).map(|f| f.0))
            .transpose()?,
        shifts: resolution
            .as_ref()
            .map(|r| (0..=r.length()).map(|k| r.shifts(k)).collect()),
        resolution: if opts.include_resolution {
            resolution.as_ref().map(FreeResolution::to_json)
        } else {
            None
        },
        certificate,
        buchweitz,
        verdict: VerdictSummary {
            status: format!("{:?}", verdict.status),
            reasons: verdict
                .reasons
                .iter()
                .map(|r| r.criterion().to_owned())
                .collect(),
        },
        notes,
        timing_us: opts.timing.then(|| start.elapsed().as_micros() as u64),
    };
    Ok(Analysis {
        report,
        verdict,
        resolution,
    })
}

fn summarize(cert: &DegreeSpecialCertificate) -> Result<CertificateSummary, CriteriaError> {
    let sub = cert.subcomplex();
    let j = sub.j_ideal()?;
    let exact = be_exactness(&sub.as_resolution()?)?.exact;
    Ok(CertificateSummary {
        distinguished_column: cert.selection.distinguished_column,
        support_rows: cert.selection.support_rows.clone(),
        zero_rows_phi2: cert.selection.zero_rows_phi2,
        condition3: cert.condition3.name().to_owned(),
        regular_sequence_witness: cert
            .regular_sequence_witness
            .iter()
            .map(ToString::to_string)
            .collect(),
        witness_codim: j.codimension(),
        subcomplex_exact: exact,
        structure_1441: verify_1441_structure(&sub),
        data: cert.to_json(),
    })
}

fn braces(v: &[usize]) -> String {
    format!(
        "{{{}}}",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

pub fn render_text(a: &Analysis) -> String {
    let r = &a.report;
    let s = &r.semigroup;
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<16}{v}\n"));
    let gens: Vec<String> = s.generators.iter().map(ToString::to_string).collect();
    line("semigroup", format!("<{}>", gens.join(",")));
    line("genus", s.genus.to_string());
    line("multiplicity", s.multiplicity.to_string());
    line("frobenius", s.frobenius.to_string());
    line("symmetric", s.symmetric.to_string());
    if let Some(ring) = &r.ring {
        line("variables", ring.variables.join(" "));
        line("precedence", ring.precedence.join(" > "));
    }
    if let Some(t) = &r.toric_ideal {
        line("toric ideal", t.join(", "));
    }
    if let Some(f) = &r.betti_format {
        line("format", braces(f));
    }
    match &r.certificate {
        Some(c) => {
            line(
                "degree-special",
                format!(
                    "yes: column {} of phi_3, rows {:?} of phi_2 vanish, condition (3) by {}",
                    c.distinguished_column, c.zero_rows_phi2, c.condition3
                ),
            );
            line(
                "phi_3'",
                format!(
                    "{} (codimension {})",
                    c.regular_sequence_witness.join(", "),
                    c.witness_codim
                ),
            );
            line(
                "subcomplex",
                format!(
                    "{}; phi_2' in J and phi_1' in J^2: {}",
                    if c.subcomplex_exact {
                        "exact"
                    } else {
                        "not exact"
                    },
                    c.structure_1441
                ),
            );
        }
        None if r.ring.is_some() => line("degree-special", "no".into()),
        None => {}
    }
    if let Some(b) = &r.buchweitz {
        line(
            "gap sums",
            format!(
                "count {} bound {}{}",
                b.count,
                b.bound,
                if b.witness { " WITNESS" } else { "" }
            ),
        );
    }
    let why = if r.verdict.reasons.is_empty() {
        String::new()
    } else {
        format!(" ({})", r.verdict.reasons.join(", "))
    };
    line("verdict", format!("{}{}", r.verdict.status, why));
    for n in &r.notes {
        line("note", n.clone());
    }
    if let Some(t) = r.timing_us {
        line("time", format!("{t} us"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
        let opts = AnalyzeOptions {
            order: None,
            include_resolution: true,
            timing: false,
        };
        let a = analyze(&s, &opts).unwrap();
        let text = serde_json::to_string(&a.report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a.report);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn verdict_matches_evidence() {
        for gens in ["6,9,13,16", "2,3", "3,5,7", "13,14,15,16,17,18,20,22,23"] {
            let s: NumericalSemigroup = gens.parse().unwrap();
            let r = analyze(
                &s,
                &AnalyzeOptions {
                    order: None,
                    include_resolution: false,
                    timing: false,
                },
            )
            .unwrap()
            .report;
            let evidence = r.certificate.is_some() as usize
                + r.buchweitz.as_ref().is_some_and(|b| b.witness) as usize;
            assert_eq!(r.verdict.reasons.len(), evidence);
            assert_eq!(r.verdict.status == "NotWeierstrass", evidence > 0);
        }
    }

    #[test]
    fn custom_order_still_certifies() {
        let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
        let order: Vec<String> = ["x3", "x1", "x4", "x0"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let r = analyze(
            &s,
            &AnalyzeOptions {
                order: Some(order.clone()),
                include_resolution: false,
                timing: false,
            },
        )
        .unwrap()
        .report;
        assert_eq!(r.ring.unwrap().precedence, order);
        assert_eq!(r.betti_format, Some(vec![1, 6, 8, 3]));
        assert!(r.certificate.is_some());
    }
}
