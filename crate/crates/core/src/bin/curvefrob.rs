use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use curvefrob::rational::{parse_rational, Rational};
use curvefrob::report::{run_subcommand, Command, RunOptions};

#[derive(Parser)]
#[command(
    name = "curvefrob",
    version,
    about = "Spectrum, connection and Frobenius data of a function on a curve family"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    pretty: bool,
    /// Comma-separated rationals, e.g. "1,2,-1/3".
    #[arg(long, global = true, value_parser = parse_samples)]
    t_samples: Option<Samples>,
}

#[derive(Clone)]
struct Samples(Vec<Rational>);

fn parse_samples(s: &str) -> Result<Samples, String> {
    s.split(',')
        .map(|p| parse_rational(p).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(Samples)
}

#[derive(Subcommand)]
enum Sub {
    /// Full report without checks.
    Analyze {
        input: Option<PathBuf>,
    },
    Spectrum {
        input: Option<PathBuf>,
    },
    Connection {
        input: Option<PathBuf>,
    },
    Frobenius {
        input: Option<PathBuf>,
    },
    /// Full report with every check; exit 1 if any fails.
    Verify {
        input: Option<PathBuf>,
    },
    /// Closed-form A_k spectrum against the pipeline.
    Ak {
        k: i64,
    },
}

fn main() {
    let cli = Cli::parse();
    let (command, input) = match cli.command {
        Sub::Analyze { input } => (Command::Analyze, input),
        Sub::Spectrum { input } => (Command::Spectrum, input),
        Sub::Connection { input } => (Command::Connection, input),
        Sub::Frobenius { input } => (Command::Frobenius, input),
        Sub::Verify { input } => (Command::Verify, input),
        Sub::Ak { k } => (Command::Ak(k), None),
    };
    let opts = RunOptions {
        input,
        output: cli.output,
        seed: cli.seed,
        pretty: cli.pretty,
        t_samples: cli.t_samples.map(|s| s.0),
    };
    let outcome = run_subcommand(&command, &opts);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(outcome.exit.code());
}
