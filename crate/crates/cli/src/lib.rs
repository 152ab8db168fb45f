//! Command-line front end for `floer-core`.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` the input is
//! outside the domain (structured JSON error on stderr), `64` usage error.

pub mod args;
pub mod document;
pub mod sampler;
pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use floer_core::invariants::{additivity_table, InvariantReport, MuBarMethod};
use floer_core::plumbing::build_plumbing;
use floer_core::{SeifertData, TorusKnotReport};
use rayon::prelude::*;
use serde::Serialize;

use args::{Cli, Command, DinvArgs, Format, InvariantsArgs, TableArgs, TableFormat, VerifyArgs};
use document::{betti_array, DinvDoc, ErrorDoc, InvariantsDoc, SplitDoc, TableRow, VerifyDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "FLOER_CALC_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] floer_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } | CliError::Output(_) => "io",
        }
    }
}

/// Rendered output plus whether every embedded check passed.
struct Rendered {
    text: String,
    ok: bool,
}

/// Parses `args`, runs the command and writes to the given streams.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli) {
        Ok(rendered) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &rendered.text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                }),
                None => stdout
                    .write_all(rendered.text.as_bytes())
                    .map_err(|e| CliError::Output(e.to_string())),
            };
            match written {
                Ok(()) if rendered.ok => EXIT_OK,
                Ok(()) => EXIT_VERIFICATION,
                Err(e) => report_error(stderr, &e),
            }
        }
        Err(e) => report_error(stderr, &e),
    }
}

fn report_error(stderr: &mut dyn Write, e: &CliError) -> i32 {
    let doc = ErrorDoc::new(e.kind(), e.to_string());
    let _ = writeln!(stderr, "{}", serde_json::to_string(&doc).expect("error document serializes"));
    e.exit_code()
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Output(e.to_string()))
}

fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    let pool = thread_pool()?;
    let start = cli.timing.then(Instant::now);
    let elapsed = || start.map(|s| s.elapsed().as_millis());
    pool.install(|| match &cli.command {
        Command::Invariants(a) => invariants(a, elapsed),
        Command::Dinv(a) => dinv(a, elapsed),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a, elapsed),
    })
}

fn json_line<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Output(e.to_string()))
}

fn json_pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Output(e.to_string()))
}

fn csv_text<H, R>(header: H, rows: impl IntoIterator<Item = R>) -> Result<String, CliError>
where
    H: IntoIterator,
    H::Item: AsRef<[u8]>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

fn render<T: Serialize>(
    format: Format,
    doc: &T,
    header: &[&str],
    row: Vec<String>,
) -> Result<String, CliError> {
    match format {
        Format::Json => json_pretty(doc),
        Format::Jsonl => json_line(doc),
        Format::Csv => csv_text(header, [row]),
    }
}

fn invariants(a: &InvariantsArgs, elapsed: impl Fn() -> Option<u128>) -> Result<Rendered, CliError> {
    let data = SeifertData::normalize(&a.seifert)?;
    let method: MuBarMethod = a.mu_method.into();
    let report = InvariantReport::compute(&data, method)?;
    let mut doc = InvariantsDoc::new(&a.seifert, &report)?;
    let mut ok = doc.lambda_sw_consistent;

    if a.check_additivity {
        let rows = additivity_table(&data)?;
        if rows.is_empty() {
            return Err(floer_core::Error::SplitIndex { j: 2, max: data.len().saturating_sub(2) }.into());
        }
        let mut splits = Vec::with_capacity(rows.len());
        for (j, left, right, additive) in rows {
            let (l, r) = data.splice_split(j)?;
            ok &= additive;
            splits.push(SplitDoc {
                j,
                left: l.multiplicities().to_vec(),
                right: r.multiplicities().to_vec(),
                left_betti: betti_array(&left),
                right_betti: betti_array(&right),
                additive,
            });
        }
        doc.additivity = Some(splits);
    }
    if let Some(path) = &a.dump_plumbing {
        let text = document::plumbing_text(&data, &build_plumbing(&data));
        fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    doc.timing_ms = elapsed();
    let header = InvariantsDoc::CSV_HEADER;
    let row = doc.csv_row();
    Ok(Rendered {
        text: render(a.format, &doc, &header, row)?,
        ok,
    })
}

fn dinv(a: &DinvArgs, elapsed: impl Fn() -> Option<u128>) -> Result<Rendered, CliError> {
    let [p, q] = a.torus[..] else {
        return Err(CliError::Usage(format!(
            "--torus expects exactly two values p,q, got {}",
            a.torus.len()
        )));
    };
    let report = TorusKnotReport::compute(p, q)?;
    let mut doc = DinvDoc::new(&a.torus, &report);
    doc.timing_ms = elapsed();
    let ok = doc.routes_agree && doc.arf_consistent;
    let row = doc.csv_row();
    Ok(Rendered {
        text: render(a.format, &doc, &DinvDoc::CSV_HEADER, row)?,
        ok,
    })
}

fn table(a: &TableArgs) -> Result<Rendered, CliError> {
    let n = a.n as usize;
    let tuples = sampler::coprime_tuples(n, a.max_a);
    let reports: Vec<TableRow> = tuples
        .par_iter()
        .map(|t| {
            let data = SeifertData::normalize(t)?;
            InvariantReport::compute(&data, MuBarMethod::Dedekind).map(|r| TableRow::new(&r))
        })
        .collect::<Result<_, _>>()?;
    let text = match a.format {
        TableFormat::Csv => csv_text(TableRow::csv_header(n), reports.iter().map(TableRow::csv_row))?,
        TableFormat::Jsonl => reports
            .iter()
            .map(json_line)
            .collect::<Result<Vec<_>, _>>()?
            .concat(),
    };
    Ok(Rendered { text, ok: true })
}

fn verify(a: &VerifyArgs, elapsed: impl Fn() -> Option<u128>) -> Result<Rendered, CliError> {
    let outcome = suites::run(a.suite, a.limit, a.seed);
    let doc = VerifyDoc {
        schema_version: document::SCHEMA_VERSION,
        command: "verify",
        suite: suites::suite_name(a.suite),
        limit: a.limit,
        seed: a.seed,
        checks: outcome.checks,
        passed: outcome.passed(),
        failed: outcome.failed(),
        failures: outcome.reported(),
        timing_ms: elapsed(),
    };
    Ok(Rendered {
        text: json_pretty(&doc)?,
        ok: outcome.failed() == 0,
    })
}
