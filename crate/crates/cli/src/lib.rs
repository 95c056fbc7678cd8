//! Library side of the `menage` command: term computation with caching,
//! output rendering and cross-method verification.

pub mod cache;
pub mod method;
pub mod sequence;

use std::fmt::{self, Write as _};
use std::time::Instant;

use clap::ValueEnum;
use menage_core::ExactInt;
use serde::Serialize;

pub use cache::{Cache, TermRecord};
pub use method::Method;
pub use sequence::{Normalization, SequenceId, SequenceSpec};

/// Why a command failed, mapped onto the exit status contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad arguments or an inapplicable method: exit 2.
    Usage(String),
    /// Methods disagree: exit 1.
    Mismatch(String),
    /// An engine error or non-integral normalization: exit 1.
    Compute(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) | Failure::Compute(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Mismatch(m) => write!(f, "mismatch: {m}"),
            Failure::Compute(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for Failure {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Bfile,
    Json,
}

/// Raw seating count for one `n`, served from `cache` when present unless
/// `recompute` is set. Fresh values are appended to the cache.
pub fn raw_term(
    k: usize,
    n: usize,
    method: Method,
    cache: Option<&mut Cache>,
    recompute: bool,
) -> Result<ExactInt, Failure> {
    if let (Some(c), false) = (cache.as_deref(), recompute) {
        if let Some(v) = c.get(k, n, method).and_then(TermRecord::parsed_value) {
            log::info!("k={k} n={n} {method}: cache hit");
            return Ok(v);
        }
    }
    let start = Instant::now();
    let value = method.seatings(k, n)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    log::info!("k={k} n={n} {method}: {elapsed_ms} ms");
    if let Some(c) = cache {
        if let Err(e) = c.store(TermRecord::new(k, n, &value, method, elapsed_ms)) {
            log::warn!("could not write cache: {e}");
        }
    }
    Ok(value)
}

/// Normalized terms `n_from..=n_to` of `spec`, in ascending `n`.
pub fn compute_terms(
    spec: &SequenceSpec,
    n_from: usize,
    n_to: usize,
    method: Method,
    mut cache: Option<&mut Cache>,
    recompute: bool,
) -> Result<Vec<(usize, ExactInt)>, Failure> {
    if n_from > n_to {
        return Err(Failure::Usage(format!("empty range {n_from}..={n_to}")));
    }
    if n_from < spec.min_n() {
        return Err(Failure::Usage(format!(
            "{spec} is normalized and undefined or non-integral below n = {}",
            spec.min_n()
        )));
    }
    method.check(spec.k, n_to)?;
    (n_from..=n_to)
        .map(|n| {
            let raw = raw_term(spec.k, n, method, cache.as_deref_mut(), recompute)?;
            Ok((n, spec.normalize(n, &raw)?))
        })
        .collect()
}

#[derive(Serialize)]
struct JsonTerm {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    k: usize,
    sequence: String,
    method: &'a str,
    terms: Vec<JsonTerm>,
}

/// Renders terms; the payload carries no timing so output is reproducible.
pub fn render(spec: &SequenceSpec, method: Method, terms: &[(usize, ExactInt)], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for (_, v) in terms {
                writeln!(out, "{v}").unwrap();
            }
        }
        Format::Bfile => {
            for (n, v) in terms {
                writeln!(out, "{n} {v}").unwrap();
            }
        }
        Format::Json => {
            let doc = JsonOutput {
                k: spec.k,
                sequence: spec.to_string(),
                method: method.name(),
                terms: terms.iter().map(|(n, v)| JsonTerm { n: *n, value: v.to_string() }).collect(),
            };
            out = serde_json::to_string(&doc).expect("plain data serializes");
            out.push('\n');
        }
    }
    out
}

/// Outcome of a `verify` run: the report text plus whether all agreed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub text: String,
    pub mismatches: Vec<usize>,
}

impl VerifyReport {
    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Computes raw counts for `n_min..=n_max` with every method and compares.
pub fn verify(k: usize, n_min: usize, n_max: usize, methods: &[Method]) -> Result<VerifyReport, Failure> {
    let mut distinct: Vec<Method> = Vec::new();
    for &m in methods {
        if !distinct.contains(&m) {
            distinct.push(m);
        }
    }
    if distinct.len() < 2 {
        return Err(Failure::Usage("verify needs at least two distinct methods".into()));
    }
    if n_min > n_max {
        return Err(Failure::Usage(format!("empty range {n_min}..={n_max}")));
    }
    for m in &distinct {
        m.check(k, n_max)?;
    }
    let mut text = String::new();
    let mut mismatches = Vec::new();
    for n in n_min..=n_max {
        let values =
            distinct.iter().map(|&m| raw_term(k, n, m, None, true)).collect::<Result<Vec<_>, _>>()?;
        let agree = values.iter().all(|v| v == &values[0]);
        write!(text, "n={n}").unwrap();
        for (m, v) in distinct.iter().zip(&values) {
            write!(text, " {m}={v}").unwrap();
        }
        writeln!(text, " {}", if agree { "ok" } else { "MISMATCH" }).unwrap();
        if !agree {
            mismatches.push(n);
        }
    }
    Ok(VerifyReport { text, mismatches })
}
