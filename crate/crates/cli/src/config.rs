use std::path::PathBuf;

use appell_core::families::read_custom_family;
use appell_core::{FamilySpec, Kernel, Rational, DEFAULT_ENUMERATION_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{CliError, EXIT_CAP_EXCEEDED, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "appell",
    version,
    about = "Exact related numbers of higher-order Appell sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a_0..a_n of the chosen family and order.
    Compute(ComputeArgs),
    /// Print the coefficients of A_n(z), or its value at --z.
    Poly(PolyArgs),
    /// Time the determinant kernels and the recurrence for each n.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Bernoulli,
    Euler,
    HyperBernoulli,
    HyperCauchy,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    Recurrence,
    Determinant,
    Composition,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelChoice {
    Hessenberg,
    Bareiss,
}

impl From<KernelChoice> for Kernel {
    fn from(k: KernelChoice) -> Self {
        match k {
            KernelChoice::Hessenberg => Kernel::Hessenberg,
            KernelChoice::Bareiss => Kernel::Bareiss,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Hypergeometric parameter M.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Hypergeometric parameter N.
    #[arg(long, default_value_t = 1)]
    pub nn: u32,
    /// Order r, the power of f(t).
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// File of d_0, d_1, … for --family custom.
    #[arg(long)]
    pub custom_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Largest index n to compute. Defaults to the last index of a custom
    /// file, otherwise 10.
    #[arg(long = "n")]
    pub n_max: Option<usize>,
    #[arg(long = "algo", value_enum, default_value_t = AlgoChoice::Recurrence)]
    pub algorithm: AlgoChoice,
    #[arg(long, value_enum, default_value_t = KernelChoice::Hessenberg)]
    pub kernel: KernelChoice,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Cross-verify every algorithm and fail on disagreement.
    #[arg(long)]
    pub check: bool,
    /// Largest n for the composition algorithm.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub compute: ComputeArgs,
    /// Evaluate at this rational instead of printing coefficients.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long = "n")]
    pub n_max: Option<usize>,
}

/// A validated compute request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: FamilySpec,
    pub order: u32,
    pub n_max: usize,
    pub algorithm: AlgoChoice,
    pub kernel: Kernel,
    pub format: Format,
    pub check: bool,
    pub cap: usize,
}

impl FamilyArgs {
    pub fn to_spec(&self) -> Result<FamilySpec, CliError> {
        if self.family != FamilyKind::Custom && self.custom_path.is_some() {
            return Err(CliError::new(
                EXIT_USAGE,
                "--custom-path only applies to --family custom",
            ));
        }
        let spec = match self.family {
            FamilyKind::Bernoulli => FamilySpec::Bernoulli,
            FamilyKind::Euler => FamilySpec::Euler,
            FamilyKind::HyperBernoulli => FamilySpec::HyperBernoulli {
                m: self.m,
                n: self.nn,
            },
            FamilyKind::HyperCauchy => FamilySpec::HyperCauchy {
                m: self.m,
                n: self.nn,
            },
            FamilyKind::Custom => {
                let path = self.custom_path.as_ref().ok_or_else(|| {
                    CliError::new(EXIT_USAGE, "--family custom requires --custom-path")
                })?;
                FamilySpec::Custom(read_custom_family(path)?)
            }
        };
        spec.validate()?;
        if self.order == 0 {
            return Err(CliError::new(EXIT_USAGE, "--order must be at least 1"));
        }
        Ok(spec)
    }
}

/// Table length used when `--n` is omitted for a built-in family.
pub const DEFAULT_N: usize = 10;

pub fn resolve_n(family: &FamilySpec, n: Option<usize>) -> usize {
    match (n, family) {
        (Some(n), _) => n,
        (None, FamilySpec::Custom(d)) => d.len() - 1,
        (None, _) => DEFAULT_N,
    }
}

impl RunConfig {
    pub fn from_args(args: &ComputeArgs) -> Result<Self, CliError> {
        let family = args.family.to_spec()?;
        let n_max = resolve_n(&family, args.n_max);
        if args.algorithm == AlgoChoice::Composition && n_max > args.cap {
            return Err(CliError::new(
                EXIT_CAP_EXCEEDED,
                format!(
                    "combinatorial blow-up: composition algorithm limited to n <= {} (got --n {}); raise --cap to override",
                    args.cap, n_max
                ),
            ));
        }
        Ok(RunConfig {
            family,
            order: args.family.order,
            n_max,
            algorithm: args.algorithm,
            kernel: args.kernel.into(),
            format: args.format,
            check: args.check,
            cap: args.cap,
        })
    }
}

pub fn parse_z(z: &str) -> Result<Rational, CliError> {
    z.parse()
        .map_err(|_| CliError::new(EXIT_USAGE, format!("--z expects p or p/q, got {z:?}")))
}
