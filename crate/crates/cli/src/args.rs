use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "floer-calc",
    version,
    about = "Instanton Floer, Casson and μ̄ invariants of Seifert fibered homology spheres, and d-invariants of torus knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the document to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Add wall-clock timings to the output (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant of Σ(a₁,…,aₙ), with all routes cross-checked.
    Invariants(InvariantsArgs),
    /// The d-invariant of the torus knot T(p,q) by four routes.
    Dinv(DinvArgs),
    /// One row per pairwise-coprime n-tuple with product at most N.
    Table(TableArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MuMethod {
    Plumbing,
    Dedekind,
    Trig,
}

impl From<MuMethod> for floer_core::MuBarMethod {
    fn from(m: MuMethod) -> Self {
        match m {
            MuMethod::Plumbing => Self::Plumbing,
            MuMethod::Dedekind => Self::Dedekind,
            MuMethod::Trig => Self::Trig,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct InvariantsArgs {
    /// Comma-separated multiplicities a₁,…,aₙ.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub seifert: Vec<u64>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Route used for the reported μ̄; all routes are still computed.
    #[arg(long, value_enum, default_value_t = MuMethod::Dedekind)]
    pub mu_method: MuMethod,

    /// Check additivity of the Betti numbers under every splice split.
    #[arg(long)]
    pub check_additivity: bool,

    /// Write the plumbing graph to FILE in the plain-text graph format.
    #[arg(long, value_name = "FILE")]
    pub dump_plumbing: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct DinvArgs {
    /// The pair p,q.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub torus: Vec<u64>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    /// Upper bound on the product a₁⋯aₙ.
    #[arg(long, value_name = "N")]
    pub max_a: u64,

    /// Number of fibers.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=5))]
    pub n: u8,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Reciprocity,
    Fourier,
    MuRoutes,
    Additivity,
    DinvRoutes,
    Lemmas,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,

    /// Scale of the suite; its meaning depends on the suite.
    #[arg(long, value_name = "N")]
    pub limit: u64,

    /// Seed for suites that sample random tuples.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
