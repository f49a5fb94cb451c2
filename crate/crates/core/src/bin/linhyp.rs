use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use linhyp::workbench::{self, Config, Output, WorkbenchError};

#[derive(Parser)]
#[command(name = "linhyp", about = "Terms, linear hypergraphs and their rewriting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interpret a term as a graph and print it as JSON.
    Interpret {
        term: PathBuf,
        #[arg(long)]
        sig: PathBuf,
        /// Also write Graphviz output here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Read a term back from a graph.
    Extract {
        graph: PathBuf,
        /// Comma-separated edge ids giving the stacking order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<u64>>,
    },
    /// Decide whether two graphs are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Normalise a graph or term with a rule file.
    Rewrite {
        input: PathBuf,
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long, default_value_t = linhyp::rewrite::DEFAULT_MAX_STEPS)]
        steps: usize,
        /// `deterministic` or `exhaustive[:N]`.
        #[arg(long, default_value = "deterministic")]
        strategy: String,
    },
    /// Evaluate a circuit on input words such as `top,bot`.
    Evaluate {
        circuit: PathBuf,
        /// Lattice and gate file; the two-point lattice with and/or if absent.
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long)]
        input: Vec<String>,
        #[arg(long, default_value_t = linhyp::rewrite::DEFAULT_MAX_STEPS)]
        steps: usize,
    },
    /// Check random instances of every axiom scheme.
    AxiomsCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

fn run(cli: Cli) -> Result<Output, WorkbenchError> {
    let cfg = Config::default();
    match cli.command {
        Command::Interpret { term, sig, dot } => workbench::cmd_interpret(&term, &sig, dot.as_deref(), &cfg),
        Command::Extract { graph, order } => workbench::cmd_extract(&graph, order.as_deref()),
        Command::Iso { a, b } => workbench::cmd_iso(&a, &b),
        Command::Rewrite {
            input,
            rules,
            sig,
            steps,
            strategy,
        } => {
            let cfg = Config {
                max_steps: steps,
                strategy: workbench::parse_strategy(&strategy)?,
                ..cfg
            };
            workbench::cmd_rewrite(&input, &rules, sig.as_deref(), &cfg)
        }
        Command::Evaluate {
            circuit,
            sig,
            input,
            steps,
        } => workbench::cmd_evaluate(&circuit, sig.as_deref(), &input, &Config { max_steps: steps, ..cfg }),
        Command::AxiomsCheck { seed, instances } => workbench::cmd_axioms_check(instances, &Config { seed, ..cfg }),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
