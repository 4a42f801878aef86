use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use menhir_core::Algebra;

#[derive(Debug, Parser)]
#[command(
    name = "menhir",
    version,
    about = "Relativistic velocity composition through the menhir loop",
    long_about = "Velocities are given in units of c. Compositions of more than two \
                  velocities are folded strictly left to right: ((v1 ⊕ v2) ⊕ v3) ⊕ …; \
                  the product is not associative, so the order matters."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose velocities with the k-deformed product (k = 2 is special relativity).
    Compose(ComposeArgs),
    /// Apply the raw menhir product a ⊞ b.
    Menhir(MenhirArgs),
    /// Box-scale one point: k ⊡ v, or (1/k) ⊡ v with --inverse.
    Scale(ScaleArgs),
    /// Test loop identities numerically.
    Identities(IdentitiesArgs),
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    /// Vector dimension (1, 2, 3, 4, 7 or 8); inferred from --v when omitted.
    #[arg(long, value_parser = parse_dim)]
    pub dim: Option<usize>,
    /// Deformation parameter: a positive integer or `inf`.
    #[arg(long, default_value = "2")]
    pub k: KParam,
    /// A velocity as comma-separated components; repeat for each velocity.
    #[arg(long = "v", value_name = "X[,Y,...]", required = true, num_args = 1, allow_hyphen_values = true, value_parser = parse_vector)]
    pub velocities: Vec<Components>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MenhirArgs {
    #[arg(long, value_parser = parse_dim)]
    pub dim: Option<usize>,
    #[arg(long, value_name = "X[,Y,...]", allow_hyphen_values = true, value_parser = parse_vector)]
    pub a: Components,
    #[arg(long, value_name = "X[,Y,...]", allow_hyphen_values = true, value_parser = parse_vector)]
    pub b: Components,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScaleArgs {
    #[arg(long, value_parser = parse_dim)]
    pub dim: Option<usize>,
    /// Positive integer scale factor.
    #[arg(long, default_value = "2")]
    pub k: KParam,
    #[arg(long = "v", value_name = "X[,Y,...]", allow_hyphen_values = true, value_parser = parse_vector)]
    pub v: Components,
    /// Scale by 1/k instead of k.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraArg,
    /// Test the seven named identities (the default when --survey is absent).
    #[arg(long)]
    pub builtin: bool,
    /// Survey every bracketing pair of n-letter words (n = 3 or 4).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u8).range(3..=4))]
    pub survey: Option<u8>,
    /// Product to test: 1 = menhir, 2 = relativistic, k, or `inf`.
    #[arg(long, default_value = "1")]
    pub k: KParam,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    R,
    C,
    H,
    O,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::R => Algebra::Real,
            AlgebraArg::C => Algebra::Complex,
            AlgebraArg::H => Algebra::Quaternion,
            AlgebraArg::O => Algebra::Octonion,
        }
    }
}

/// `--k`: a positive integer or `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KParam {
    Finite(u32),
    Infinite,
}

impl FromStr for KParam {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(KParam::Infinite);
        }
        match s.parse::<u32>() {
            Ok(k) if k >= 1 => Ok(KParam::Finite(k)),
            _ => Err(format!("expected a positive integer or `inf`, got `{s}`")),
        }
    }
}

impl fmt::Display for KParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KParam::Finite(k) => write!(f, "{k}"),
            KParam::Infinite => f.write_str("inf"),
        }
    }
}

fn parse_dim(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if menhir_core::moller::DIMS.contains(&n) => Ok(n),
        _ => Err(format!("dimension must be one of 1, 2, 3, 4, 7, 8 (got `{s}`)")),
    }
}

/// Comma-separated vector components.
#[derive(Debug, Clone, PartialEq)]
pub struct Components(pub Vec<f64>);

fn parse_vector(s: &str) -> Result<Components, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("`{part}` is not a finite number"))
        })
        .collect::<Result<Vec<f64>, String>>()
        .map(Components)
}
