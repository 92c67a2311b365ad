use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "isogroth", version, about = "Double K-theoretic Schubert classes of isotropic Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The Pfaffian class GX_λ
    Gx {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// GP_λ(x_1..x_N) by symmetrization, N = --num-x
    Gp {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        partition: String,
    },
    /// One-row class GX_m^(ℓ)
    Gtcoeff {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
    },
    /// Localization table of GX_λ (or of a series read from --input) over SP^k(n)
    Localize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "input")]
        partition: Option<String>,
        /// Series JSON, bare or as emitted by another subcommand
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// GKM divisibility report for a localization table; exits 1 on violations
    GkmCheck {
        #[command(flatten)]
        common: Common,
        /// Table JSON as written by `localize`
        #[arg(long, conflicts_with = "partition")]
        input: Option<PathBuf>,
        /// Localize GX_λ directly instead of reading a table
        #[arg(long, requires = "n")]
        partition: Option<String>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Expansion of GX_λ (or of a series from --input) in the GP or k = 0 GQ family
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "input")]
        partition: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Defaults to gq for type C and gp for type B
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// List SP^k(n) with the matching Weyl group elements
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Laurent coefficients of the Pfaffian kernel at β = 1
    Kernel {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        ci: u32,
        #[arg(long, default_value_t = 0)]
        cj: u32,
        #[arg(long, default_value_t = 4)]
        pmax: i64,
        #[arg(long, default_value_t = 4)]
        qmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long = "type", value_enum, default_value_t = TypeArg::C)]
    pub ty: TypeArg,
    /// Maximum xab-degree D kept in every series
    #[arg(long, default_value_t = 4)]
    pub degree: u32,
    /// Defaults to max(3, n)
    #[arg(long)]
    pub num_x: Option<u32>,
    /// Defaults to k
    #[arg(long)]
    pub num_a: Option<u32>,
    /// Defaults to max(3, n)
    #[arg(long)]
    pub num_b: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    Gp,
    Gq,
}
