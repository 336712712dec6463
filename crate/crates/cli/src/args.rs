use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "quadzeta",
    version,
    about = "Local Euler factors of zeta functions of quadratic orders"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report wall_ms as 0 so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of P_n(u) (or P*_n(u) with --star).
    Factor(FactorArgs),
    /// Certify every (p, n, chi) triple on a grid.
    Verify(VerifyArgs),
    /// List the 2n zeros in the s-plane.
    Zeros(ZerosArgs),
    /// Compare the Euler product with brute-force ideal counts.
    Oracle(OracleArgs),
    /// Check the generating-function identity through X^terms.
    Genfun(GenfunArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct FactorArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub chi: i64,
    /// All-ideal factor P*_n instead of the proper-ideal factor P_n.
    #[arg(long)]
    pub star: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 13)]
    pub p_max: u64,
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    /// Comma-separated subset of -1,0,1.
    #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
    pub chi: String,
    /// Largest allowed | |u|·√p - 1 | for a numeric root.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Refine isolating intervals to width 2^-bits.
    #[arg(long, default_value_t = 20)]
    pub width_bits: u32,
    #[arg(long)]
    pub star: bool,
    /// Worker threads (falls back to ZETA_ORDER_JOBS).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ZerosArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub chi: i64,
    #[arg(long)]
    pub star: bool,
    /// Decimal places for the imaginary part (at most 15).
    #[arg(long, default_value_t = 10)]
    pub digits: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("order").required(true).args(["dk", "disc"])))]
pub struct OracleArgs {
    /// Fundamental discriminant of the field.
    #[arg(long)]
    pub dk: Option<i64>,
    /// Discriminant f²·d_K of the order, instead of --dk/--f.
    #[arg(long, conflicts_with = "f")]
    pub disc: Option<i64>,
    /// Conductor of the order.
    #[arg(long)]
    pub f: Option<u64>,
    #[arg(long, default_value_t = 200)]
    pub limit: usize,
    /// Count all ideals instead of proper ideals.
    #[arg(long)]
    pub all_ideals: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct GenfunArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub chi: i64,
    #[arg(long, default_value_t = 20)]
    pub terms: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
