use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

/// Tridiagonal representations of [Z, X] = Z² + Δ and their orthogonal polynomials.
#[derive(Debug, Parser)]
#[command(name = "tridirep", version, propagate_version = true)]
pub struct Cli {
    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build X and Z on the first SIZE basis vectors and write the representation.
    Build(BuildArgs),
    /// Recompute the defining-relation residual of a saved representation.
    Verify(VerifyArgs),
    /// Compare the general solution against a family's closed-form coefficients.
    Family(FamilyArgs),
    /// Eigenvalues of the Jacobi matrix.
    Spectrum(SpectrumArgs),
    /// Gaussian quadrature nodes and weights from the Jacobi matrix.
    Quadrature(QuadratureArgs),
    /// List the truncation conditions satisfied by a seed.
    Truncations(TruncationArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    #[value(alias = "jacobi")]
    Jacobi,
    #[value(alias = "continuous_hahn")]
    ContinuousHahn,
    #[value(alias = "hahn")]
    Hahn,
    #[value(alias = "para_krawtchouk")]
    ParaKrawtchouk,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum GaugeKind {
    #[default]
    SplitSqrt,
    UnitW,
    Custom,
}

/// Output destination and encoding.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Algebra seed. Complex values are written as `re+imi`.
#[derive(Debug, Default, Args)]
pub struct SeedArgs {
    /// Deformation parameter Δ.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub phi0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b0: Option<Complex64>,
}

impl SeedArgs {
    pub fn is_empty(&self) -> bool {
        self.delta.is_none() && self.phi0.is_none() && self.delta0.is_none() && self.v0.is_none() && self.b0.is_none()
    }
}

/// Family selection, either from flags or from a JSON file.
#[derive(Debug, Default, Args)]
pub struct FamilySelect {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,

    /// Family specification as JSON, e.g. {"family":"hahn","params":{"alpha":0.3,"beta":0.7,"N":8}}.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub spec: Option<PathBuf>,

    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Highest index of a finite family (Hahn, para-Krawtchouk).
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Para-Krawtchouk regularization; 0 takes the limit.
    #[arg(long, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<Complex64>,
}

impl FamilySelect {
    pub fn is_set(&self) -> bool {
        self.family.is_some() || self.spec.is_some()
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub family: FamilySelect,

    /// Number of retained basis vectors.
    #[arg(long, default_value_t = 20)]
    pub size: usize,

    #[arg(long, value_enum, default_value_t = GaugeKind::SplitSqrt)]
    pub gauge: GaugeKind,

    /// Comma-separated w₀, w₁, … for the custom gauge.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub w_seeds: Vec<f64>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A `.rep.json` file written by `build`.
    pub input: PathBuf,

    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Compare the residual divided by 1 + (largest entry)² instead.
    #[arg(long)]
    pub relative: bool,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub family: FamilySelect,

    /// Highest index compared; defaults to N for finite families and 50 otherwise.
    #[arg(long)]
    pub nmax: Option<usize>,

    /// Pass threshold; defaults to 1e-6 for the para-Krawtchouk limit and 1e-12 otherwise.
    #[arg(long)]
    pub tol: Option<f64>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub family: FamilySelect,

    /// Jacobi matrix dimension; defaults to N + 1 for finite families.
    #[arg(long)]
    pub dim: Option<usize>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct QuadratureArgs {
    #[command(flatten)]
    pub spectrum: SpectrumArgs,

    /// Total mass of the measure.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
}

#[derive(Debug, Args)]
pub struct TruncationArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub family: FamilySelect,

    /// Largest N searched.
    #[arg(long, default_value_t = 1024)]
    pub nmax: usize,

    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,

    #[command(flatten)]
    pub out: OutputArgs,
}
