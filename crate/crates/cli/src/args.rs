use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starlike_core::{FamilyId, SamplingGrid, Theorem};

const BETA_HELP: &str = "\
Admissible β:
  theorem 1            1 < β < 3
  theorem 2            β ≤ -1 or β > 1
  ex1_high             2 ≤ β < 3   (theorem 1 family)
  ex1_low              1 < β ≤ 2   (theorem 1 family)
  ex2_pos              β > 1       (theorem 2 family)
  ex2_neg              β ≤ -1      (theorem 2 family)
  builtin_*            no parameter of their own; β only selects the criterion

Builtins: builtin_koebe, builtin_halfplane, builtin_quadratic,
builtin_identity, builtin_monomial:<n> (z + zⁿ/n).

Exit status: 0 all checks pass, 1 a check failed, 2 usage or domain error.";

#[derive(Debug, Parser)]
#[command(name = "starlike", version)]
#[command(about = "Grid checks of convexity-to-starlikeness criteria on the unit disk")]
#[command(after_help = BETA_HELP)]
pub struct Cli {
    /// Worker threads for grid evaluation (default: one per core). Outputs do not depend on it.
    #[arg(long, global = true, value_parser = parse_positive)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check hypothesis and conclusion of a criterion for one function and β
    #[command(after_help = BETA_HELP)]
    Verify(VerifyArgs),
    /// Tabulate bound, margin, max |w| and order estimate over a β range
    #[command(after_help = BETA_HELP)]
    Sweep(SweepArgs),
    /// Probe z₀w'(z₀)/w(z₀) where |w| peaks on a circle
    Jack(JackArgs),
    /// Re-derive a criterion's sharp bound from its boundary value formula
    #[command(name = "proof-scan", after_help = BETA_HELP)]
    ProofScan(ProofScanArgs),
    /// Draw the image curves of zf'/f against the target region as SVG
    #[command(after_help = BETA_HELP)]
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    /// Criterion: 1 (upper bound on Re p) or 2 (lower bound); inferred for parametric families.
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: Option<Theorem>,

    /// Function to test: ex1_high, ex1_low, ex2_pos, ex2_neg or a builtin_* name.
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyId,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Comma-separated, strictly increasing radii in (0, 1).
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.9,0.99")]
    pub radii: Vec<f64>,

    /// Equally spaced angles per circle (at least 8).
    #[arg(long, default_value_t = SamplingGrid::DEFAULT_ANGLES)]
    pub angles: usize,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Allowed excess of max |w|/r over 1.
    #[arg(long, default_value_t = 1e-6)]
    pub schwarz_tol: f64,

    /// Allowed shortfall of the order estimate below (β+1)/(2β) (criterion 2).
    #[arg(long, default_value_t = 1e-2)]
    pub order_tol: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub function: FunctionArgs,

    /// Criterion parameter.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub tol: ToleranceArgs,

    /// Report format: json or csv (per-radius table). Default json.
    #[arg(long)]
    pub format: Option<Format>,

    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Fill duration_ms in the report (makes the bytes run-dependent).
    #[arg(long)]
    pub record_timing: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub function: FunctionArgs,

    /// First β of the range.
    #[arg(long, allow_negative_numbers = true)]
    pub beta_min: f64,

    /// Last β of the range; must lie in the same admissible interval as --beta-min.
    #[arg(long, allow_negative_numbers = true)]
    pub beta_max: f64,

    /// Number of equally spaced β values, endpoints included.
    #[arg(long, default_value_t = 10, value_parser = parse_positive)]
    pub steps: usize,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub tol: ToleranceArgs,

    /// csv (default) or json.
    #[arg(long)]
    pub format: Option<Format>,

    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct JackArgs {
    /// monomial:<n>, blaschke:<a> or blaschke:<re>,<im>, induced:t<1|2>:<family>:<β>.
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,

    /// Radius of the circle, in (0, 1).
    #[arg(long, default_value_t = 0.9)]
    pub r: f64,

    /// Coarse angles before refinement (at least 256).
    #[arg(long, default_value_t = SamplingGrid::DEFAULT_ANGLES)]
    pub angles: usize,

    /// Tolerance on |Im ratio| and on k ≥ 1.
    #[arg(long, default_value_t = starlike_core::jack::PROBE_TOL)]
    pub tol: f64,

    /// Also write the probe as JSON to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProofScanArgs {
    /// Criterion whose boundary formula is scanned.
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: Theorem,

    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,

    /// Coarse θ samples before refinement (at least 256).
    #[arg(long, default_value_t = 4096)]
    pub theta_steps: usize,

    /// Also write the scan as JSON to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub function: FunctionArgs,

    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Visible rectangle xmin,xmax,ymin,ymax of the complex plane.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "-0.5,2.5,-1.5,1.5"
    )]
    pub view: Vec<f64>,

    /// Output file, written atomically; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: starlike_core::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e: starlike_core::Error| e.to_string())
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}
