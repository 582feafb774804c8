//! Commands behind the `gridcycles` binary.
//!
//! Each `cmd_*` function returns an [`Outcome`]: the output document and the
//! status that decides the exit code. [`run`] parses arguments, runs
//! one command and renders it; the binary is a one-line wrapper around it.

pub mod args;
pub mod cache;
pub mod oeis;
pub mod output;

use std::io::Write;
use std::str::FromStr;

use indexmap::IndexMap;
use serde_json::{json, Value};

use crate::arith::ExactInt;
use crate::closedforms::{c, FormulaVariant};
use crate::equivalence::{self, Counter, EquivalenceReport};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::perms::Signature;
use crate::record::{Method, VerificationRecord};
use crate::verify::{self, Target};

pub use cache::Cache;
pub use output::{Format, OutputDocument, Row};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NETWORK: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Parse(_) => EXIT_USAGE,
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Network(_) | Error::MalformedResponse { .. } => EXIT_NETWORK,
        Error::Cache(_) | Error::Io(_) => EXIT_VERIFICATION_FAILURE,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Formula,
    Oracle,
    Both,
}

impl CountMethod {
    fn as_str(self) -> &'static str {
        match self {
            CountMethod::Formula => "formula",
            CountMethod::Oracle => "oracle",
            CountMethod::Both => "both",
        }
    }

    /// Formula for the eight table signatures, oracle otherwise.
    pub fn default_for(sigma: &Signature) -> Self {
        if sigma.table_index().is_some() {
            CountMethod::Formula
        } else {
            CountMethod::Oracle
        }
    }
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(CountMethod::Formula),
            "oracle" => Ok(CountMethod::Oracle),
            "both" => Ok(CountMethod::Both),
            other => Err(Error::Parse(format!(
                "unknown method {other:?}; expected formula, oracle or both"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    Complement,
    Alternating,
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complement" => Ok(Conjecture::Complement),
            "alternating" => Ok(Conjecture::Alternating),
            other => Err(Error::Parse(format!(
                "unknown conjecture {other:?}; expected complement or alternating"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A mismatch that is not a documented discrepancy.
    VerificationFailure,
    /// Part of the requested range exceeded the oracle budget.
    Incomplete,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::VerificationFailure => EXIT_VERIFICATION_FAILURE,
            Status::Incomplete => EXIT_BUDGET,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: OutputDocument,
    pub status: Status,
}

impl Outcome {
    fn ok(document: OutputDocument) -> Self {
        Outcome {
            document,
            status: Status::Ok,
        }
    }
}

/// Everything a command needs besides its own parameters.
#[derive(Clone, Debug, Default)]
pub struct Context {
    pub oracle: Oracle,
    pub cache: Option<Cache>,
    pub network: bool,
    pub oeis_url: Option<String>,
}

impl Context {
    /// Serves a cached document if present, else computes and stores it.
    /// Only documents with status [`Status::Ok`] are stored.
    fn cached(
        &self,
        command: &str,
        params: &IndexMap<String, Value>,
        compute: impl FnOnce() -> Result<Outcome>,
    ) -> Result<Outcome> {
        let Some(cache) = &self.cache else {
            return compute();
        };
        let key = Cache::key(command, params, TOOL_VERSION);
        if let Some(text) = cache.get(&key)? {
            if let Ok(document) = OutputDocument::from_json(&text) {
                return Ok(Outcome::ok(document));
            }
        }
        let outcome = compute()?;
        if outcome.status == Status::Ok {
            cache.put(&key, &outcome.document.to_json())?;
        }
        Ok(outcome)
    }
}

fn params(pairs: &[(&str, Value)]) -> IndexMap<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn count_row(sigma: &Signature, n: usize, value: &ExactInt, method: Method) -> Row {
    let mut row = Row::new();
    row.insert("sigma".into(), sigma.to_string().into());
    row.insert("label".into(), sigma.label().into());
    row.insert("n".into(), n.into());
    row.insert("value".into(), output::exact(value));
    row.insert("method".into(), method.as_str().into());
    row
}

fn formula_count(sigma: &Signature, n: usize) -> Result<ExactInt> {
    let index = sigma.table_index().ok_or_else(|| {
        Error::Domain(format!(
            "closed forms cover the eight length-3 signatures only, not {sigma}; use the oracle"
        ))
    })?;
    c(index, n, FormulaVariant::AsPrinted)
}

/// Counts for one `(σ, n)`, plus the verdict when both methods ran.
fn counts_at(
    ctx: &Context,
    sigma: &Signature,
    n: usize,
    method: CountMethod,
) -> Result<(Vec<Row>, Option<Value>, Status)> {
    let formula = match method {
        CountMethod::Formula | CountMethod::Both => Some(formula_count(sigma, n)?),
        CountMethod::Oracle => None,
    };
    let oracle = match method {
        CountMethod::Oracle | CountMethod::Both => {
            Some(ctx.oracle.count_cyclic_in_class(sigma, n)?)
        }
        CountMethod::Formula => None,
    };
    let mut rows = Vec::new();
    if let Some(v) = &formula {
        rows.push(count_row(sigma, n, v, Method::Formula));
    }
    if let Some(v) = &oracle {
        rows.push(count_row(sigma, n, v, Method::Oracle));
    }
    let (verdict, status) = match (&formula, &oracle) {
        (Some(f), Some(o)) if f == o => (Some(json!({"n": n, "verdict": "match"})), Status::Ok),
        (Some(_), Some(_)) if matches!(sigma.table_index(), Some(1 | 2)) => (
            Some(json!({
                "n": n,
                "verdict": "mismatch",
                "known_discrepancy": true,
                "note": "the printed c_1/c_2 expression counts cycles with exactly two \
                         descents/ascents, not the whole class; run `verify c12_report`",
            })),
            Status::Ok,
        ),
        (Some(_), Some(_)) => (
            Some(json!({"n": n, "verdict": "mismatch", "known_discrepancy": false})),
            Status::VerificationFailure,
        ),
        _ => (None, Status::Ok),
    };
    Ok((rows, verdict, status))
}

/// `|C_n^σ|` by closed form, oracle, or both with a verdict.
pub fn cmd_count(
    ctx: &Context,
    sigma: &Signature,
    n: usize,
    method: CountMethod,
) -> Result<Outcome> {
    let p = params(&[
        ("sigma", sigma.to_string().into()),
        ("n", n.into()),
        ("method", method.as_str().into()),
    ]);
    ctx.cached("count", &p.clone(), || {
        let (rows, verdict, status) = counts_at(ctx, sigma, n, method)?;
        let mut document = OutputDocument::new("count", p).with_provenance("value", "method");
        document.payload.rows = rows;
        document.payload.summary = verdict;
        Ok(Outcome { document, status })
    })
}

/// `|C_n^σ|` for `n = 3..=n_max`.
pub fn cmd_sequence(
    ctx: &Context,
    sigma: &Signature,
    n_max: usize,
    method: CountMethod,
) -> Result<Outcome> {
    let p = params(&[
        ("sigma", sigma.to_string().into()),
        ("n_max", n_max.into()),
        ("method", method.as_str().into()),
    ]);
    ctx.cached("sequence", &p.clone(), || {
        let mut document = OutputDocument::new("sequence", p).with_provenance("value", "method");
        let mut verdicts = Vec::new();
        let mut status = Status::Ok;
        for n in equivalence::N_MIN..=n_max {
            let (rows, verdict, s) = counts_at(ctx, sigma, n, method)?;
            // columns n, value, method; σ is in the parameters
            document.payload.rows.extend(rows.into_iter().map(|mut r| {
                r.shift_remove("sigma");
                r.shift_remove("label");
                r
            }));
            verdicts.extend(verdict);
            if s != Status::Ok {
                status = s;
            }
        }
        if method == CountMethod::Both {
            document.payload.summary = Some(Value::Array(verdicts));
        }
        Ok(Outcome { document, status })
    })
}

fn records_summary(records: &[VerificationRecord]) -> Value {
    json!({
        "records": records.len(),
        "matches": records.iter().filter(|r| r.is_match()).count(),
        "known_discrepancies": records.iter().filter(|r| !r.is_match() && r.known_discrepancy).count(),
        "failures": records.iter().filter(|r| r.is_failure()).count(),
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn records_document(
    command: &str,
    p: IndexMap<String, Value>,
    records: &[VerificationRecord],
) -> OutputDocument {
    let mut document = OutputDocument::new(command, p)
        .with_provenance("left", "left_method")
        .with_provenance("right", "right_method");
    document.payload.rows = records.iter().map(output::record_row).collect();
    document
}

/// Runs a verification suite. Never cached.
pub fn cmd_verify(ctx: &Context, target: Target, n_max: usize) -> Result<Outcome> {
    let report = verify::run(target, n_max, &ctx.oracle)?;
    let p = params(&[("target", target.as_str().into()), ("n_max", n_max.into())]);
    let mut document = records_document("verify", p, &report.records);
    document.payload.summary = Some(merge(
        json!({
            "target": target.as_str(),
            "n_max": report.n_max,
            "n_max_run": report.n_max_run,
            "complete": report.complete,
        }),
        records_summary(&report.records),
    ));
    let status = if !report.passed() {
        Status::VerificationFailure
    } else if !report.complete {
        Status::Incomplete
    } else {
        Status::Ok
    };
    Ok(Outcome { document, status })
}

fn literal_classes(classes: &[Vec<Signature>]) -> Vec<Vec<String>> {
    classes
        .iter()
        .map(|class| class.iter().map(Signature::to_string).collect())
        .collect()
}

/// c-Wilf and weak c-Wilf classes of `signatures` over `3..=n_max`.
pub fn cmd_classes(
    ctx: &Context,
    signatures: &[Signature],
    n_max: usize,
    counter: Counter,
) -> Result<Outcome> {
    let counter_name = match counter {
        Counter::Formula => "formula",
        Counter::Oracle => "oracle",
    };
    let p = params(&[
        (
            "signatures",
            signatures
                .iter()
                .map(Signature::to_string)
                .collect::<Vec<_>>()
                .into(),
        ),
        ("n_max", n_max.into()),
        ("counter", counter_name.into()),
    ]);
    ctx.cached("classes", &p.clone(), || {
        let report = equivalence::classify(signatures, n_max, counter, &ctx.oracle)?;
        let mut document = OutputDocument::new("classes", p).with_provenance("value", "method");
        for seq in &report.sequences {
            for term in &seq.terms {
                document.payload.rows.push(count_row(
                    &seq.signature,
                    term.n,
                    &term.value,
                    term.method,
                ));
            }
        }
        let pairs: Vec<Value> = report
            .pairs
            .iter()
            .map(|pc| {
                json!({
                    "first": pc.first.to_string(),
                    "second": pc.second.to_string(),
                    "first_disagreement": pc.first_disagreement,
                    "first_weak_disagreement": pc.first_weak_disagreement,
                })
            })
            .collect();
        document.payload.summary = Some(json!({
            "n_min": report.n_min,
            "n_max": report.n_max,
            "counter": counter_name,
            "full_classes": literal_classes(&report.full_classes),
            "weak_classes": literal_classes(&report.weak_classes),
            "full_classes_labelled": EquivalenceReport::labelled(&report.full_classes),
            "weak_classes_labelled": EquivalenceReport::labelled(&report.weak_classes),
            "pairs": pairs,
        }));
        Ok(Outcome::ok(document))
    })
}

/// One of the two conjecture experiments. Counterexamples are results, not
/// failures; only an incomplete range changes the status.
pub fn cmd_conjecture(
    ctx: &Context,
    which: Conjecture,
    k_max: usize,
    n_max: usize,
) -> Result<Outcome> {
    let name = match which {
        Conjecture::Complement => "complement",
        Conjecture::Alternating => "alternating",
    };
    let p = params(&[
        ("conjecture", name.into()),
        ("k_max", k_max.into()),
        ("n_max", n_max.into()),
    ]);
    ctx.cached("conjecture", &p.clone(), || {
        let report = match which {
            Conjecture::Complement => {
                equivalence::conjecture_complement(k_max, n_max, &ctx.oracle)?
            }
            Conjecture::Alternating => {
                equivalence::conjecture_alternating(k_max, n_max, &ctx.oracle)?
            }
        };
        let mut document = records_document("conjecture", p, &report.records);
        let counterexamples: Vec<Value> = report
            .counterexamples()
            .map(|r| Value::Object(output::record_row(r).into_iter().collect()))
            .collect();
        document.payload.summary = Some(merge(
            json!({
                "conjecture": name,
                "k_max": report.k_max,
                "n_min": report.n_min,
                "n_max": report.n_max,
                "complete": report.complete,
                "skipped_n": report.skipped_n,
                "counterexamples": counterexamples,
            }),
            records_summary(&report.records),
        ));
        let status = if report.complete {
            Status::Ok
        } else {
            Status::Incomplete
        };
        Ok(Outcome { document, status })
    })
}

/// OEIS lookup of `terms`. Without network access enabled this returns a
/// "not queried" document and touches nothing.
pub fn cmd_oeis(ctx: &Context, terms: &[String]) -> Result<Outcome> {
    for t in terms {
        t.parse::<ExactInt>()
            .map_err(|_| Error::Parse(format!("OEIS terms must be integers, got {t:?}")))?;
    }
    oeis::check_terms(terms)?;
    let p = params(&[("terms", terms.to_vec().into())]);
    let mut document = OutputDocument::new("oeis", p);
    if !ctx.network {
        document.payload.summary = Some(json!({
            "status": "not queried",
            "reason": "network access is off; pass --enable-network",
        }));
        return Ok(Outcome::ok(document));
    }
    let url = ctx.oeis_url.clone().unwrap_or_else(oeis::endpoint);
    let hits = oeis::query(&url, terms)?;
    for hit in &hits {
        let mut row = Row::new();
        row.insert("id".into(), hit.id.clone().into());
        row.insert("name".into(), hit.name.clone().into());
        document.payload.rows.push(row);
    }
    document.payload.summary = Some(json!({
        "status": "queried",
        "endpoint": url,
        "hits": hits.len(),
    }));
    Ok(Outcome::ok(document))
}

/// A JSON description of `err`, keeping the raw body of malformed responses.
pub fn error_document(command: &str, err: &Error) -> OutputDocument {
    let kind = match err {
        Error::Domain(_) => "domain",
        Error::Parse(_) => "parse",
        Error::Budget { .. } => "budget",
        Error::Network(_) => "network",
        Error::MalformedResponse { .. } => "malformed_response",
        Error::Cache(_) => "cache",
        Error::Io(_) => "io",
    };
    let mut detail = json!({"kind": kind, "message": err.to_string(), "exit_code": exit_code(err)});
    if let Error::MalformedResponse { raw_body, .. } = err {
        detail["raw_body"] = raw_body.clone().into();
    }
    let mut document = OutputDocument::new(command, IndexMap::new());
    document.payload.summary = Some(json!({ "error": detail }));
    document
}

/// Parses `argv`, runs one command and writes its rendering to `out`.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;

    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let command = cli.command.name();
    let result = cli.context().and_then(|ctx| cli.command.execute(&ctx));
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.document.render(cli.format).as_bytes());
            outcome.status.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = out.write_all(error_document(command, &e).to_json().as_bytes());
            exit_code(&e)
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn main_from_env() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
