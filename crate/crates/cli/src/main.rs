use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sbcw::approx::best_approximation;
use sbcw::dump::{Format, TreeDump, TreeKind};
use sbcw::verify::{run_suite, SuiteParams};
use sbcw::words::christoffel_word;
use sbcw::{address_to_flipword, cw_locate, sb_locate, BigInt, Ratio};

#[derive(Parser)]
#[command(name = "sbcw", version, about = "Stern-Brocot, Calkin-Wilf and Christoffel trees via torus flips")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump a tree to the given depth.
    Tree {
        /// sb, cw, farey, ivec, ivec-init, christoffel, cohn or cohn-combined
        kind: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// json, dot or text
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the tree address and flip labels of a positive fraction.
    Locate {
        tree: LocateTree,
        /// Fraction such as 3/2
        fraction: String,
    },
    /// Print the Christoffel word of a slope.
    Word {
        #[arg(long)]
        slope: String,
    },
    /// Closest fraction with bounded denominator to an exact decimal.
    Approx {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        max_den: BigInt,
    },
    /// Run a verification suite.
    Verify {
        /// main1, main2, duality, maximality, forms, int-inc, det, christoffel, cohn or closure
        suite: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LocateTree {
    Sb,
    Cw,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<sbcw::Error> for Failure {
    fn from(e: sbcw::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Tree { kind, depth, format } => {
            let kind: TreeKind = kind.parse()?;
            let format: Format = format.parse()?;
            print!("{}", TreeDump::build(kind, depth)?.render(format)?);
        }
        Command::Locate { tree, fraction } => {
            let q: Ratio = fraction.parse()?;
            let addr = match tree {
                LocateTree::Sb => sb_locate(&q)?,
                LocateTree::Cw => cw_locate(&q)?,
            };
            println!("path: {addr}");
            println!("labels: {}", address_to_flipword(&addr));
        }
        Command::Word { slope } => {
            let q: Ratio = slope.parse()?;
            println!("{}", christoffel_word(&q)?);
        }
        Command::Approx { value, max_den } => {
            let target = Ratio::from_decimal_str(&value)?;
            println!("{}", best_approximation(&target, &max_den)?);
        }
        Command::Verify { suite, depth, bound, samples, seed } => {
            let report = run_suite(&suite, SuiteParams { depth, bound, samples, seed })?;
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
