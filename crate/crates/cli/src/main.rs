//! `wsg`: certify that numerical semigroups are not Weierstrass.
//!
//! Exit codes: 0 certified, 1 unknown, 2 usage error, 3 resource limit.

mod analyze;
mod config;
mod search;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use wsg_core::criteria::{
    buchweitz_counts, castelnuovo_pi0, CastelnuovoInput, CriteriaError, DegreeSpecialCertificate,
    Status,
};
use wsg_core::semigroup::{count_by_genus, SemigroupError, DEFAULT_NODE_CAP};
use wsg_core::NumericalSemigroup;

use crate::analyze::{AnalyzeOptions, SCHEMA};
use crate::config::{split_names, Config};
use crate::search::{Criterion, SearchParams};

const EXIT_CERTIFIED: u8 = 0;
const EXIT_UNKNOWN: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wsg",
    version,
    about = "Non-Weierstrass certificates for numerical semigroups"
)]
struct Cli {
    /// Defaults as `key = value` lines (order, jobs, max_nodes, json, quiet).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every criterion on one semigroup.
    Analyze {
        /// Generators, as separate numbers or a comma list.
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        /// Variable precedence, highest first, e.g. `x3,x1,x4,x0`.
        #[arg(long)]
        order: Option<String>,
        /// Include the minimal resolution.
        #[arg(long)]
        resolution: bool,
        /// Record the running time.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate semigroups up to a genus and list those certified.
    Search {
        #[arg(long)]
        max_genus: u32,
        #[arg(long, value_enum, default_value = "any")]
        criterion: Criterion,
        /// Only semigroups with this many minimal generators.
        #[arg(long)]
        generators: Option<usize>,
        /// Only semigroups whose resolution has this format, e.g. `1,6,8,3`.
        #[arg(long)]
        format: Option<String>,
        #[arg(long, default_value_t = 1)]
        min_multiplicity: u32,
        #[arg(long)]
        max_multiplicity: Option<u32>,
        /// Keep only the smallest genus found for each multiplicity.
        #[arg(long)]
        smallest_per_multiplicity: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Cap on enumerated semigroups.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// No progress on stderr.
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Castelnuovo's bound for degree-d curves in P^r.
    Pi0 {
        d: u64,
        r: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Count sums of n gaps against (2n-1)(g-1).
    Buchweitz {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Count semigroups of a given genus.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Re-check a certificate, or the certificate inside an analyze report.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<CriteriaError> for Failure {
    fn from(e: CriteriaError) -> Self {
        match e {
            CriteriaError::ResourceLimit(_)
            | CriteriaError::Semigroup(SemigroupError::ResourceLimit(_)) => {
                Failure::Resource(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_semigroup(parts: &[String]) -> Result<NumericalSemigroup, Failure> {
    parts
        .join(",")
        .parse()
        .map_err(|e: SemigroupError| Failure::Usage(e.to_string()))
}

fn print_json(v: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("reports serialize")
    );
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    let json_default = cfg.json.unwrap_or(false);
    match cli.command {
        Command::Analyze {
            generators,
            order,
            resolution,
            timing,
            out,
        } => {
            let s = parse_semigroup(&generators)?;
            let order = order.map(|o| split_names(&o)).or(cfg.order.clone());
            let opts = AnalyzeOptions {
                order,
                include_resolution: resolution,
                timing,
            };
            let a = analyze::analyze(&s, &opts)?;
            if out.json || json_default {
                print_json(&a.report);
            } else {
                print!("{}", analyze::render_text(&a));
                if resolution {
                    if let Some(r) = &a.resolution {
                        print!("\n{}", r.render());
                    }
                }
            }
            Ok(if a.verdict.status == Status::NotWeierstrass {
                EXIT_CERTIFIED
            } else {
                EXIT_UNKNOWN
            })
        }
        Command::Search {
            max_genus,
            criterion,
            generators,
            format,
            min_multiplicity,
            max_multiplicity,
            smallest_per_multiplicity,
            jobs,
            max_nodes,
            quiet,
            out,
        } => {
            let format = format
                .map(|f| {
                    f.trim_matches(|c| c == '{' || c == '}')
                        .split(',')
                        .map(|x| x.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| Failure::Usage(format!("bad --format: {e}")))
                })
                .transpose()?;
            let params = SearchParams {
                max_genus,
                criterion,
                generators,
                format,
                min_multiplicity,
                max_multiplicity,
                smallest_per_multiplicity,
                max_nodes: max_nodes.or(cfg.max_nodes).unwrap_or(DEFAULT_NODE_CAP),
            };
            let jobs = jobs.or(cfg.jobs).unwrap_or(1).max(1);
            let report = search::run(&params, jobs, quiet || cfg.quiet.unwrap_or(false))
                .map_err(Failure::Usage)?;
            if out.json || json_default {
                print_json(&report);
            } else {
                print!("{}", search::render_text(&report));
            }
            Ok(if report.complete {
                EXIT_CERTIFIED
            } else {
                EXIT_RESOURCE
            })
        }
        Command::Pi0 { d, r, out } => {
            let inp = CastelnuovoInput::new(d, r)?;
            let pi0 = castelnuovo_pi0(&inp);
            if out.json || json_default {
                print_json(&json!({
                    "schema": SCHEMA, "d": d, "r": r, "n": inp.n, "epsilon": inp.epsilon, "pi0": pi0,
                    "epsilon_is_maximal": inp.epsilon_is_maximal(),
                }));
            } else {
                println!("{pi0}");
                eprintln!("n = {}, epsilon = {}", inp.n, inp.epsilon);
                if inp.epsilon_is_maximal() {
                    eprintln!(
                        "note: epsilon = r - 2 lies outside the strict range epsilon < r - 2"
                    );
                }
            }
            Ok(EXIT_CERTIFIED)
        }
        Command::Buchweitz { generators, n, out } => {
            let s = parse_semigroup(&generators)?;
            let e = buchweitz_counts(&s, n)?;
            if out.json || json_default {
                print_json(
                    &json!({"schema": SCHEMA, "generators": s.generators(), "genus": s.genus(), "evidence": e}),
                );
            } else {
                println!(
                    "count {} bound {}{}",
                    e.count,
                    e.bound,
                    if e.witness { " WITNESS" } else { "" }
                );
                if e.extension {
                    eprintln!("note: n > 2 uses the generalized bound (2n-1)(g-1)");
                }
            }
            Ok(if e.witness {
                EXIT_CERTIFIED
            } else {
                EXIT_UNKNOWN
            })
        }
        Command::Enumerate {
            genus,
            max_nodes,
            out,
        } => {
            let cap = max_nodes.or(cfg.max_nodes).unwrap_or(DEFAULT_NODE_CAP);
            let counts = count_by_genus(genus, cap).map_err(|e| match e {
                SemigroupError::ResourceLimit(_) => Failure::Resource(e.to_string()),
                other => Failure::Usage(other.to_string()),
            })?;
            let count = counts[genus as usize];
            if out.json || json_default {
                print_json(&json!({"schema": SCHEMA, "genus": genus, "count": count}));
            } else {
                println!("{count}");
            }
            Ok(EXIT_CERTIFIED)
        }
        Command::Verify { file, out } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            let v: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))?;
            let data = v.pointer("/certificate/data").unwrap_or(&v);
            let result =
                DegreeSpecialCertificate::from_json(data).and_then(|c| c.validate().map(|_| c));
            let (valid, message) = match &result {
                Ok(c) => (
                    true,
                    format!("valid degree-special certificate for {}", c.semigroup),
                ),
                Err(e) => (false, e.to_string()),
            };
            if out.json || json_default {
                print_json(&json!({"schema": SCHEMA, "valid": valid, "message": message}));
            } else {
                println!("{message}");
            }
            Ok(if valid { EXIT_CERTIFIED } else { EXIT_UNKNOWN })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
