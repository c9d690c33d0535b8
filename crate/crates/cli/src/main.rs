//! `sigma-lcd`: σ-LCD checks and constructions from the command line.

mod commands;
mod repro;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "sigma-lcd", version, about = "σ-LCD codes over finite fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report style.
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Worker threads for codeword enumeration.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    /// Cap on enumerated codewords.
    #[arg(long, default_value_t = 1 << 22, global = true)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// σ-duals, hulls and LCD constructions for linear codes.
    #[command(subcommand)]
    Lcd(LcdCmd),
    /// Linear complementary pairs.
    #[command(subcommand)]
    Lcp(LcpCmd),
    /// Generalized quasi-cyclic codes.
    #[command(subcommand)]
    Gqc(GqcCmd),
    /// Ideals of Abelian group algebras.
    #[command(subcommand)]
    Abelian(AbelianCmd),
    /// Brute-force ground truth.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Worked examples, end to end.
    Repro {
        #[arg(value_enum)]
        suite: repro::Suite,
    },
}

#[derive(Subcommand, Debug)]
pub enum LcdCmd {
    /// Test a code against its σ-dual.
    Check {
        #[arg(long)]
        code: PathBuf,
        /// A σ file, `id`, `reversal` or `frobenius:<s>`.
        #[arg(long, default_value = "id")]
        sigma: String,
        #[arg(long, value_enum, default_value = "lcd")]
        test: commands::Test,
    },
    /// Hull dimension under σ.
    Hull {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value = "id")]
        sigma: String,
    },
    /// Build a σ that makes the code σ-LCD.
    Make {
        #[arg(long)]
        code: PathBuf,
    },
    /// Permute the Euclidean hull to the front.
    Normalize {
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum LcpCmd {
    /// Pair two codes of equal dimension into an LCP.
    Build {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GqcCmd {
    /// q-cyclotomic cosets modulo m.
    Cosets { q: u64, m: usize },
    /// Split of coset leaders by how they meet their negatives.
    Gamma { q: u64, m: usize },
    /// Constituent dimensions of a GQC code.
    Constituents { file: PathBuf },
    /// μ_a test through constituents, checked against the flat code.
    Check {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
        a: i64,
        #[arg(long, value_enum, default_value = "lcd")]
        test: commands::Test,
    },
    /// 1-generator criteria.
    Onegen {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
        a: i64,
    },
    /// μ₋₁-LCD code assembled from Euclidean LCD components.
    Product { spec: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum AbelianCmd {
    /// μ₋₁-LCD test of an ideal.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        code: PathBuf,
    },
    /// The idempotent generator, when the ideal is μ₋₁-LCD.
    Idempotent {
        #[arg(long)]
        group: String,
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Minimum distance by enumeration.
    Mindist { file: PathBuf },
    /// Dimension of the intersection of two codes.
    Intersect { file1: PathBuf, file2: PathBuf },
    /// First σ of a family making the code σ-LCD.
    SearchSigma {
        file: PathBuf,
        #[arg(long, default_value = "diagonal-lambda")]
        family: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let g = &cli.global;
    let outcome = match cli.command {
        Command::Lcd(c) => commands::lcd(c, g),
        Command::Lcp(c) => commands::lcp(c, g),
        Command::Gqc(c) => commands::gqc(c, g),
        Command::Abelian(c) => commands::abelian(c, g),
        Command::Oracle(c) => commands::oracle(c, g),
        Command::Repro { suite } => repro::run(suite, g),
    };
    match outcome {
        Ok(mut report) => {
            report.elapsed = start.elapsed();
            print!("{}", report.render(g.format));
            if report.verification == Some(report::Verification::Disagree) {
                eprintln!("error: formula and oracle verdicts disagree");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Everything a command can fail with before producing a report.
#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Lib(sigma_lcd::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

impl From<sigma_lcd::Error> for CliError {
    fn from(e: sigma_lcd::Error) -> Self {
        CliError::Lib(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
}
