//! `superjm`: command-line front end. JSON is the output contract; `--format text`
//! is for reading only.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "superjm",
    version,
    about = "Exact computations for odd elements of Lie superalgebras"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Where the algebra, representation and element come from.
#[derive(Args, Clone, Default)]
pub struct Source {
    /// gl11, gl12, glMN, osp12; append -adjoint for the adjoint representation
    #[arg(long)]
    preset: Option<String>,
    /// Algebra JSON (inline or path); overrides the one embedded in --rep
    #[arg(long)]
    algebra: Option<String>,
    /// Representation JSON (inline or path)
    #[arg(long)]
    rep: Option<String>,
    /// Element JSON, e.g. '{"coeffs":{"E12":"1"}}'
    #[arg(long)]
    element: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Block decomposition and chain basis of an odd nilpotent
    Blocks {
        #[command(flatten)]
        source: Source,
        /// Operator JSON {"space":{"even":m,"odd":n},"matrix":[...]} instead of ρ(x)
        #[arg(long)]
        matrix: Option<String>,
        /// Scramble pivot choices in the chain basis
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Neatness of x through a faithful representation
    Neat {
        #[command(flatten)]
        source: Source,
        /// Declare the ambient supergroup quasi-reductive (implied by presets)
        #[arg(long)]
        quasi_reductive: bool,
    },
    /// Deligne filtration of an odd nilpotent
    Deligne {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Φ_x(M) as a sum of simple osp(1|2)-modules
    Phi {
        #[command(flatten)]
        source: Source,
        /// Module JSON over the same algebra; defaults to the representation
        #[arg(long)]
        module: Option<String>,
    },
    /// osp(1|2)-triple (h, x, Y) for a neat x
    JmTriple {
        #[command(flatten)]
        source: Source,
    },
    /// Duflo-Serganova algebra and module at a square-zero x
    Ds {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        module: Option<String>,
    },
    /// Closed-form tensor product of two indecomposables
    Fusion {
        #[arg(long, value_enum)]
        family: Family,
        /// Index i of M_i (ga11) or 2k of M̃_{2k} (osp), with optional ":odd"
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Jordan-Chevalley decomposition of a square rational matrix
    Jc {
        #[arg(long)]
        matrix: String,
    },
    /// Seeded scans
    Scan {
        #[arg(long, value_enum)]
        preset: ScanPreset,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Property suites
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Ga11,
    Osp,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ScanPreset {
    #[value(name = "gl12-neat-cone")]
    Gl12NeatCone,
    #[value(name = "gl11-support")]
    Gl11Support,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.format) {
        Ok(out) => {
            println!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
