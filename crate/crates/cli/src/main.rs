mod commands;
mod error;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specjoin::{Family, JoinKind};

use crate::error::{CliError, CliResult};

const DEFAULT_TOL: f64 = 1e-9;

/// Subdivision joins of graphs: construction, normalized Laplacian spectra,
/// spanning trees, degree-Kirchhoff indices and cospectrality certificates.
///
/// Graph arguments are graph6 files; "-" reads standard input.
/// SPECJOIN_THREADS sets the worker thread count (0 = automatic).
#[derive(Debug, Parser)]
#[command(name = "specjoin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named graph in graph6.
    Gen(GenArgs),
    /// Build a subdivision-vertex or subdivision-edge join.
    Join(JoinArgs),
    /// Normalized Laplacian spectrum, direct or from the closed forms.
    Spectrum(SpectrumArgs),
    /// Evaluate a closed form next to its independent oracle.
    Verify(VerifyArgs),
    /// Compare two normalized Laplacian spectra.
    Cospectral(CospectralArgs),
    /// Spanning-tree count and degree-Kirchhoff index.
    Invariants(InvariantsArgs),
    /// Build the order-50 cospectral pairs from the 4-cube and K2.
    Example32(Example32Args),
}

#[derive(Debug, Args)]
struct GenArgs {
    /// cycle, path, complete, complete_bipartite, hypercube, petersen, empty, shrikhande, rook4x4
    #[arg(value_parser = parse_family)]
    family: Family,
    params: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Sv,
    Se,
}

impl From<KindArg> for JoinKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sv => JoinKind::Sv,
            KindArg::Se => JoinKind::Se,
        }
    }
}

#[derive(Debug, Args)]
struct JoinArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    g1: String,
    g2: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// write the vertex block labels as JSON to this file
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    ClosedSv,
    ClosedSe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    /// the graph, or the first factor for closed methods
    graph: String,
    #[arg(long, value_enum, default_value = "direct")]
    method: MethodArg,
    /// second factor, required by the closed methods
    #[arg(long)]
    g2: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// tolerance for grouping eigenvalues into multiplicities
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// subdivision-vertex join spectrum
    #[value(name = "2.3")]
    SvSpectrum,
    /// subdivision-edge join spectrum
    #[value(name = "2.4")]
    SeSpectrum,
    /// degree-Kirchhoff index of both joins
    #[value(name = "3.3")]
    Kirchhoff,
    /// spanning-tree count of both joins
    #[value(name = "3.4")]
    Trees,
    /// adjacency spectrum of the line graph of a regular graph
    #[value(name = "lemma2.1")]
    LineGraph,
    /// det(xI − A − αJ) = (1 − αΓ) det(xI − A)
    #[value(name = "lemma2.2")]
    RankOne,
    /// coronal of a regular graph's normalized Laplacian
    #[value(name = "eq1")]
    Coronal,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    g1: String,
    /// second factor; not used by lemma2.1, lemma2.2 and eq1
    g2: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
struct CospectralArgs {
    g: String,
    h: String,
    /// exact certificate from det(xD − A) instead of a numerical comparison
    #[arg(long)]
    exact: bool,
    /// also decide isomorphism
    #[arg(long)]
    iso: bool,
    /// size guard for the exact certificate
    #[arg(long, default_value_t = specjoin::linalg::DEFAULT_SIZE_GUARD)]
    limit: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
struct InvariantsArgs {
    /// the graph, or the first factor with --closed
    graph: String,
    /// evaluate the closed forms for the join of GRAPH and --g2
    #[arg(long, value_enum, requires = "g2")]
    closed: Option<KindArg>,
    #[arg(long)]
    g2: Option<String>,
}

#[derive(Debug, Args)]
struct Example32Args {
    #[arg(long)]
    json: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: specjoin::Error| e.to_string())
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("SPECJOIN_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("SPECJOIN_THREADS must be a non-negative integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match cli.command {
        Command::Gen(a) => commands::gen(a.family, &a.params, a.out.as_deref()),
        Command::Join(a) => commands::join(a.kind.into(), &a.g1, &a.g2, a.out.as_deref(), a.labels.as_deref()),
        Command::Spectrum(a) => commands::spectrum(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Cospectral(a) => commands::cospectral(&a),
        Command::Invariants(a) => commands::invariants(&a),
        Command::Example32(a) => commands::example32(a.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
