/// `println!` that stops quietly when stdout is closed, e.g. by `head`.
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

/// `print!` counterpart of [`outln!`].
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::Failure;

#[derive(Parser, Debug)]
#[command(name = "dwork", version, about = "Exact checks for the Dwork quartic pencil")]
struct Cli {
    /// Worker threads for point counting and line intersections.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct LambdaArg {
    /// Pencil parameter, `n` or `n/d`.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count F_q-points of X, M or Y.
    Count {
        #[arg(long, default_value = "x")]
        model: String,
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Trace identity, congruences and Frobenius cross-check over a range of primes.
    Verify {
        #[command(flatten)]
        lambda: LambdaArg,
        /// `a..b` (inclusive), or a comma separated list.
        #[arg(long, default_value = "3..100")]
        primes: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Class data, character table and decomposition of chi_pr.
    #[command(alias = "char-table")]
    Tables,
    /// Multiplicities of chi_pr, with restrictions of its constituents to subgroups.
    DecomposeChipr,
    /// Joint sign-eigenspaces of the Galois matrices.
    Eigen {
        #[arg(long, default_value_t = 19)]
        dim: usize,
        #[command(flatten)]
        lambda: LambdaArg,
        /// Also print the four matrices as integer grids.
        #[arg(long)]
        matrices: bool,
    },
    /// The 56 lines on a quotient surface.
    Lines {
        #[command(flatten)]
        lambda: LambdaArg,
        /// `i,j,r`.
        #[arg(long, default_value = "0,1,4")]
        surface: String,
    },
    /// Permutation of the 56 lines induced by a sign vector.
    GaloisLines {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, default_value = "0,1,4")]
        surface: String,
        /// Generators to negate, e.g. `I,minus`.
        #[arg(long, default_value = "")]
        flip: String,
    },
    /// Root counts of the two auxiliary curves and the map between them.
    CurveCounts {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Invalid("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let json = cli.json;
    match cli.command {
        Command::Count { model, lambda, p, k } => commands::count(&model, &lambda.lambda, p, k, json),
        Command::Verify { lambda, primes, k } => commands::verify(&lambda.lambda, &primes, k, json),
        Command::Tables => commands::tables(json),
        Command::DecomposeChipr => commands::decompose_chipr(json),
        Command::Eigen { dim, lambda, matrices } => commands::eigen(dim, &lambda.lambda, matrices, json),
        Command::Lines { lambda, surface } => commands::lines(&lambda.lambda, &surface, json),
        Command::GaloisLines { lambda, surface, flip } => commands::galois_lines(&lambda.lambda, &surface, &flip, json),
        Command::CurveCounts { lambda, p, primes, k } => {
            commands::curve_counts(&lambda.lambda, p, primes.as_deref(), k, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{f}");
            f.exit_code()
        }
    }
}
