//! Command-line surface: JSON in, JSON out, one document per invocation.
//!
//! Exit codes: 0 success (including a verified certificate), 10 a
//! counterexample report (still a success document), 1 computation failure,
//! 2 argument or JSON parse failure.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::certify::{
    certify, verify_certificate, verify_counterexample, Certificate, CounterexampleReport,
    Outcome,
};
use crate::characters;
use crate::group_algebra::DEFAULT_PRODUCT_CAP;
use crate::lr;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::as_i64_pair;
use crate::superspace::{self, SuperSpaceSpec, DEFAULT_DIM_CAP};
use crate::trace_poly;

const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 10;

#[derive(Parser, Debug)]
#[command(name = "schurcert", version, about = "Exact Schur-functor semisimplicity certificates")]
pub struct Cli {
    /// Field characteristic: 0 or a prime larger than the partition size.
    #[arg(long = "char", default_value_t = 0, global = true)]
    pub characteristic: u64,

    /// Overrides the brute-force degree cap for group-algebra expansions.
    #[arg(long, global = true)]
    pub max_m: Option<usize>,

    /// Pretty-print the JSON document.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Compact JSON (the default).
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Forbidden dimension set of a partition, e.g. `fset [1,1,1]`.
    Fset { lambda: String },
    /// Trace polynomial of a partition as [numerator, denominator] pairs in
    /// ascending degree; cross-checked against the character-sum route, and
    /// against brute-force expansion when --alpha is given.
    Poly {
        beta: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Character values: the full row over cycle types, or one value when a
    /// cycle type is given.
    Char {
        beta: String,
        cycle_type: Option<String>,
    },
    /// Littlewood-Richardson coefficient by both methods.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
    },
    /// Emit a certificate (exit 0) or counterexample report (exit 10).
    Certify {
        lambda: String,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Re-check a certificate or counterexample document (file or stdin).
    Verify { input: Option<PathBuf> },
    /// Run the concrete-oracle invariant suite for the given bounds.
    OracleCheck {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_rs: usize,
    },
}

#[derive(Serialize)]
struct FsetDoc {
    version: &'static str,
    lambda: Partition,
    #[serde(rename = "F")]
    forbidden: Vec<i64>,
}

#[derive(Serialize)]
struct PolyDoc {
    version: &'static str,
    beta: Partition,
    p: Vec<[i64; 2]>,
    roots: Vec<i64>,
    methods: Vec<&'static str>,
}

#[derive(Serialize)]
struct CharEntry {
    cycle_type: Partition,
    class_size: u64,
    value: i64,
}

#[derive(Serialize)]
struct CharDoc {
    version: &'static str,
    beta: Partition,
    dimension: u64,
    values: Vec<CharEntry>,
}

#[derive(Serialize)]
struct LrDoc {
    version: &'static str,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    #[serde(rename = "N")]
    coefficient: u64,
    methods: Vec<&'static str>,
    agree: bool,
}

#[derive(Serialize)]
struct WrappedDoc<T: Serialize> {
    version: &'static str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct VerifyDoc {
    version: &'static str,
    kind: &'static str,
    valid: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct OracleCheckEntry {
    name: &'static str,
    cases: usize,
    pass: bool,
}

#[derive(Serialize)]
struct OracleCheckDoc {
    version: &'static str,
    max_n: usize,
    max_rs: usize,
    checks: Vec<OracleCheckEntry>,
    all_pass: bool,
}

enum VerifyInput {
    Certificate(Certificate),
    Counterexample(CounterexampleReport),
}

/// Certificates carry witnesses, reports carry a family; dispatch on shape.
fn parse_verify_input(text: &str) -> Result<VerifyInput, RunError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| RunError::Parse(format!("document: {e}")))?;
    if value.get("family").is_some() {
        serde_json::from_value(value)
            .map(VerifyInput::Counterexample)
            .map_err(|e| RunError::Parse(format!("counterexample document: {e}")))
    } else {
        serde_json::from_value(value)
            .map(VerifyInput::Certificate)
            .map_err(|e| RunError::Parse(format!("certificate document: {e}")))
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(RunError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            EXIT_PARSE
        }
        Err(RunError::Compute(msg)) => {
            eprintln!("error: {msg}");
            EXIT_ERROR
        }
    }
}

enum RunError {
    Parse(String),
    Compute(String),
}

impl From<crate::error::Error> for RunError {
    fn from(e: crate::error::Error) -> Self {
        RunError::Compute(e.to_string())
    }
}

fn parse_partition(text: &str) -> Result<Partition, RunError> {
    serde_json::from_str::<Partition>(text)
        .map_err(|e| RunError::Parse(format!("partition {text:?}: {e}")))
}

fn emit<T: Serialize>(doc: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(doc).expect("documents serialize")
    } else {
        serde_json::to_string(doc).expect("documents serialize")
    };
    println!("{text}");
}

fn poly_pairs(p: &crate::polynomial::RationalPolynomial) -> Result<Vec<[i64; 2]>, RunError> {
    p.coeffs()
        .iter()
        .map(|c| {
            as_i64_pair(c)
                .map(|(n, d)| [n, d])
                .ok_or_else(|| RunError::Compute("coefficient exceeds i64".into()))
        })
        .collect()
}

fn execute(cli: &Cli) -> Result<i32, RunError> {
    match &cli.command {
        Command::Fset { lambda } => {
            let lambda = parse_partition(lambda)?;
            let doc = FsetDoc {
                version: VERSION,
                forbidden: lambda.forbidden_dimensions().into_iter().collect(),
                lambda,
            };
            emit(&doc, cli.pretty);
            Ok(EXIT_OK)
        }
        Command::Poly { beta, alpha } => {
            let beta = parse_partition(beta)?;
            let closed = trace_poly::trace_polynomial(&beta)?;
            let by_chars = trace_poly::trace_polynomial_by_characters(&beta)?;
            if closed != by_chars {
                return Err(RunError::Compute(format!(
                    "internal disagreement between polynomial routes at {beta}"
                )));
            }
            let mut methods = vec!["contents", "characters"];
            if let Some(alpha) = alpha {
                let alpha = parse_partition(alpha)?;
                let cap = cli.max_m.unwrap_or(DEFAULT_PRODUCT_CAP);
                let expanded = trace_poly::trace_polynomial_by_expansion(&alpha, &beta, cap)?;
                if expanded != closed {
                    return Err(RunError::Compute(format!(
                        "expansion route disagrees at ({alpha}, {beta})"
                    )));
                }
                methods.push("expansion");
            }
            let doc = PolyDoc {
                version: VERSION,
                p: poly_pairs(&closed)?,
                roots: trace_poly::root_set(&beta).into_iter().collect(),
                methods,
                beta,
            };
            emit(&doc, cli.pretty);
            Ok(EXIT_OK)
        }
        Command::Char { beta, cycle_type } => {
            let beta = parse_partition(beta)?;
            let types = match cycle_type {
                Some(t) => vec![parse_partition(t)?],
                None => Partition::all_of(beta.size()),
            };
            let values = types
                .into_iter()
                .map(|t| {
                    let value = characters::chi(&beta, &t)?;
                    Ok(CharEntry {
                        class_size: characters::class_size(&t),
                        cycle_type: t,
                        value,
                    })
                })
                .collect::<Result<Vec<_>, crate::error::Error>>()?;
            let doc = CharDoc {
                version: VERSION,
                dimension: characters::irrep_dimension(&beta),
                beta,
                values,
            };
            emit(&doc, cli.pretty);
            Ok(EXIT_OK)
        }
        Command::Lr { lambda, mu, nu } => {
            let lambda = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let by_chars = lr::coefficient(&lambda, &mu, &nu);
            let by_tableaux = if lambda.contains(&mu) {
                lr::coefficient_by_tableaux(&lambda, &mu, &nu)?
            } else {
                0
            };
            let doc = LrDoc {
                version: VERSION,
                coefficient: by_chars,
                methods: vec!["characters", "tableaux"],
                agree: by_chars == by_tableaux,
                lambda,
                mu,
                nu,
            };
            let ok = doc.agree;
            emit(&doc, cli.pretty);
            Ok(if ok { EXIT_OK } else { EXIT_ERROR })
        }
        Command::Certify { lambda, d } => {
            let lambda = parse_partition(lambda)?;
            match certify(&lambda, *d, cli.characteristic)? {
                Outcome::Certificate(cert) => {
                    emit(
                        &WrappedDoc {
                            version: VERSION,
                            body: cert,
                        },
                        cli.pretty,
                    );
                    Ok(EXIT_OK)
                }
                Outcome::Counterexample(report) => {
                    emit(
                        &WrappedDoc {
                            version: VERSION,
                            body: report,
                        },
                        cli.pretty,
                    );
                    Ok(EXIT_COUNTEREXAMPLE)
                }
            }
        }
        Command::Verify { input } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| RunError::Parse(format!("{}: {e}", path.display())))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| RunError::Parse(e.to_string()))?;
                    buf
                }
            };
            let parsed = parse_verify_input(&text)?;
            let (kind, result) = match &parsed {
                VerifyInput::Certificate(cert) => ("certificate", verify_certificate(cert)),
                VerifyInput::Counterexample(report) => {
                    ("counterexample", verify_counterexample(report))
                }
            };
            let doc = VerifyDoc {
                version: VERSION,
                kind,
                valid: result.ok(),
                failures: result.failures.clone(),
            };
            emit(&doc, cli.pretty);
            Ok(if result.ok() { EXIT_OK } else { EXIT_ERROR })
        }
        Command::OracleCheck { max_n, max_rs } => {
            let doc = oracle_check(*max_n, *max_rs);
            let all_pass = doc.all_pass;
            emit(&doc, cli.pretty);
            Ok(if all_pass { EXIT_OK } else { EXIT_ERROR })
        }
    }
}

fn all_specs(max_rs: usize) -> Vec<SuperSpaceSpec> {
    let mut out = Vec::new();
    for total in 1..=max_rs {
        for r in 0..=total {
            out.push(SuperSpaceSpec::new(r, total - r).expect("positive total"));
        }
    }
    out
}

fn oracle_check(max_n: usize, max_rs: usize) -> OracleCheckDoc {
    let specs = all_specs(max_rs);
    let mut checks = Vec::new();

    // Partial traces of permutations are powers of the superdimension.
    let mut cases = 0;
    let mut pass = true;
    for v in &specs {
        for m in 1..=max_n {
            if v.total_dim().pow(m as u32) > DEFAULT_DIM_CAP {
                continue;
            }
            for sigma in Permutation::all(m) {
                cases += 1;
                let ok = superspace::permutation_action(&sigma, v, DEFAULT_DIM_CAP)
                    .and_then(|a| superspace::partial_trace_last(&a, v, m))
                    .ok()
                    .and_then(|t| t.as_scalar_identity())
                    .is_some_and(|scalar| {
                        let d = crate::rational::q_int(v.superdim());
                        let mut expected = crate::rational::q_int(1);
                        for _ in 0..sigma.cycle_count() - 1 {
                            expected *= &d;
                        }
                        scalar == expected
                    });
                pass &= ok;
            }
        }
    }
    checks.push(OracleCheckEntry {
        name: "partial_trace_counts_cycles",
        cases,
        pass,
    });

    // Schur projector vanishes exactly at shapes containing the marker box.
    let mut cases = 0;
    let mut pass = true;
    for v in &specs {
        for n in 1..=max_n {
            if v.total_dim().pow(n as u32) > DEFAULT_DIM_CAP {
                continue;
            }
            for lambda in Partition::all_of(n) {
                cases += 1;
                let ok = superspace::schur_rank(&lambda, v, DEFAULT_DIM_CAP)
                    .map(|profile| {
                        (profile.total == 0) == lambda.contains_box(v.even() + 1, v.odd() + 1)
                    })
                    .unwrap_or(false);
                pass &= ok;
            }
        }
    }
    checks.push(OracleCheckEntry {
        name: "schur_rank_vanishing",
        cases,
        pass,
    });

    // Graded rank difference equals the content-polynomial superdimension.
    let mut cases = 0;
    let mut pass = true;
    for v in &specs {
        for n in 1..=max_n {
            if v.total_dim().pow(n as u32) > DEFAULT_DIM_CAP {
                continue;
            }
            let fact: i64 = (1..=n as i64).product();
            for lambda in Partition::all_of(n) {
                cases += 1;
                let expected = trace_poly::content_polynomial(&lambda).eval_int(v.superdim())
                    * crate::rational::q_ratio(
                        characters::irrep_dimension(&lambda) as i64,
                        fact,
                    );
                let ok = superspace::schur_rank(&lambda, v, DEFAULT_DIM_CAP)
                    .map(|profile| {
                        crate::rational::q_int(profile.even as i64 - profile.odd as i64)
                            == expected
                    })
                    .unwrap_or(false);
                pass &= ok;
            }
        }
    }
    checks.push(OracleCheckEntry {
        name: "graded_rank_superdimension",
        cases,
        pass,
    });

    // Measured partial-trace scalars match the trace polynomial.
    let mut cases = 0;
    let mut pass = true;
    for m in 1..=max_n.min(4) {
        for beta in Partition::all_of(m) {
            let poly = match trace_poly::trace_polynomial_by_characters(&beta) {
                Ok(p) => p,
                Err(_) => continue,
            };
            for alpha in beta.remove_boxes(1).unwrap_or_default() {
                for v in &specs {
                    if v.total_dim().pow(m as u32) > DEFAULT_DIM_CAP {
                        continue;
                    }
                    cases += 1;
                    let ok = superspace::measure_trace_scalar(&alpha, &beta, v, DEFAULT_DIM_CAP)
                        .map(|scalar| scalar == poly.eval_int(v.superdim()))
                        .unwrap_or(false);
                    pass &= ok;
                }
            }
        }
    }
    checks.push(OracleCheckEntry {
        name: "measured_scalar_matches_polynomial",
        cases,
        pass,
    });

    // Conjugating the shape and swapping parities preserves the rank.
    let mut cases = 0;
    let mut pass = true;
    for v in &specs {
        for n in 1..=max_n {
            if v.total_dim().pow(n as u32) > DEFAULT_DIM_CAP {
                continue;
            }
            let swapped = SuperSpaceSpec::new(v.odd(), v.even()).expect("positive total");
            for lambda in Partition::all_of(n) {
                cases += 1;
                let direct = superspace::schur_rank(&lambda, v, DEFAULT_DIM_CAP);
                let mirrored =
                    superspace::schur_rank(&lambda.conjugate(), &swapped, DEFAULT_DIM_CAP);
                pass &= matches!((direct, mirrored), (Ok(a), Ok(b)) if a.total == b.total);
            }
        }
    }
    checks.push(OracleCheckEntry {
        name: "conjugation_parity_symmetry",
        cases,
        pass,
    });

    let all_pass = checks.iter().all(|c| c.pass);
    OracleCheckDoc {
        version: VERSION,
        max_n,
        max_rs,
        checks,
        all_pass,
    }
}
