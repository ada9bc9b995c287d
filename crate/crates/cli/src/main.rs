//! `bottcalc`: Bott's theorem on Grassmannians and isotropic Grassmannians,
//! the tabulated isotropic value lists, and the local-cohomology oracle.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or precondition
//! error, 3 resource limit or truncated output.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "bottcalc", version, about = "Bott's theorem, isotropic tables and the cotangent oracle")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "BOTTCALC_THREADS")]
    threads: Option<usize>,
    /// Suppress progress lines on stderr.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology of S_alpha Q (x) S_beta R (x) O(m) on G(r,n).
    Bott(BottArgs),
    /// Vanishing scan of H^i(O(m)) and H^i(Theta(m)) over the stable window.
    Scan(ScanArgs),
    /// Cohomology index of a bundle on an isotropic Grassmannian.
    Iso(IsoArgs),
    /// Print tabulated isotropic rows and check them against the root data.
    Table(TableArgs),
    /// Local cohomology of the differentials of a Pluecker algebra by exact linear algebra.
    Oracle(OracleArgs),
    /// Run the acceptance suite.
    #[command(name = "verify-paper", alias = "verify")]
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct BottArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// `O` or `theta`; excludes --alpha/--beta.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    pub bundle: Option<String>,
    /// Weight on Q, length n-r, e.g. "1,0,0".
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Weight on R, length r.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub twist: num_bigint::BigInt,
    /// Sweep the twist up to this value.
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<num_bigint::BigInt>,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub i_lo: usize,
    /// Defaults to r(n-r)-1.
    #[arg(long)]
    pub i_hi: Option<usize>,
    /// Also list every evaluated point.
    #[arg(long)]
    pub rows: bool,
}

#[derive(Args, Debug)]
pub struct IsoArgs {
    /// LG, OG_even or OG_odd (also sp, so_even, so_odd).
    #[arg(long, required_unless_present = "space")]
    pub family: Option<String>,
    #[arg(long, required_unless_present = "space")]
    pub r: Option<usize>,
    /// Half rank: the ambient space has dimension 2n or 2n+1.
    #[arg(long, required_unless_present = "space")]
    pub n: Option<usize>,
    /// Alternative to --family/--r/--n, e.g. "OG(2,8)".
    #[arg(long, conflicts_with_all = ["family", "r", "n"])]
    pub space: Option<String>,
    /// d2, wedge2, quot or O; omit with --check.
    #[arg(long)]
    pub bundle: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// `tabulated` (default) or `coroot`.
    #[arg(long, default_value = "tabulated")]
    pub pairing: String,
    /// Run the vanishing classifications and T^i synthesis.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// sp, so_even or so_odd.
    #[arg(long)]
    pub g: Option<String>,
    /// Case label, e.g. "2=r=n" (whitespace-insensitive).
    #[arg(long)]
    pub r_case: Option<String>,
    /// Largest half rank checked.
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// How `...` in a value list is filled: unit or inferred.
    #[arg(long, default_value = "unit")]
    pub ellipsis: String,
    /// Only print the rows.
    #[arg(long)]
    pub no_check: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// A single P-degree; H^0_m(Omega) lives in degrees >= 1.
    #[arg(long, conflicts_with = "max_deg")]
    pub deg: Option<usize>,
    /// All P-degrees 1..=max-deg.
    #[arg(long, default_value_t = 3)]
    pub max_deg: usize,
    /// exact or modular.
    #[arg(long, default_value = "exact")]
    pub rank: String,
    /// Largest weight space per term before truncating.
    #[arg(long, default_value_t = 200_000)]
    pub max_block: usize,
    /// Largest P-degree accepted.
    #[arg(long, default_value_t = 8)]
    pub max_degree: usize,
    /// Write every block matrix as a sparse triplet file here.
    #[arg(long)]
    pub dump: Option<std::path::PathBuf>,
    /// Compare each slice with the Schur predictions.
    #[arg(long)]
    pub check: bool,
    /// Also verify the explicit witnesses at this m.
    #[arg(long)]
    pub witness: Option<usize>,
    /// Include wall-clock timings in json output.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated criteria (numbers or names).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Shorthand for --format json.
    #[arg(long)]
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let level = if cli.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .format_target(false)
        .init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            log::warn!("cannot set thread count: {e}");
        }
    }
    let result = match &cli.command {
        Command::Bott(a) => commands::bott(a),
        Command::Scan(a) => commands::scan(a),
        Command::Iso(a) => commands::iso(a),
        Command::Table(a) => commands::table(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Verify(a) => commands::verify(a),
    };
    let format = match &cli.command {
        Command::Verify(a) if a.json => Format::Json,
        _ => cli.format,
    };
    match result {
        Ok(report) => report.emit(format),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(output::exit_code(&e))
        }
    }
}
