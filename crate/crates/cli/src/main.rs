use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use catzeta_cli::commands::{self, Failure, Outcome, Settings, EXIT_INPUT};
use catzeta_cli::input::Input;
use catzeta_core::nerve::DEFAULT_ORDER;
use catzeta_core::zeta::DEFAULT_TOLERANCE;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Zeta functions and Euler characteristics of finite categories.
#[derive(Parser)]
#[command(name = "catzeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed form of the zeta function.
    Zeta(Common),
    /// Series and Leinster Euler characteristics.
    Euler(Common),
    /// Check the four clauses of the closed-form conjecture.
    Conjecture(Common),
    /// Run the identity suite on one input.
    Verify(Common),
    /// Run `conjecture` on every file of a directory.
    Batch(Common),
}

#[derive(Args)]
struct Common {
    /// Input file (a directory for `batch`).
    #[arg(long, short, conflicts_with = "matrix")]
    input: Option<PathBuf>,
    /// Inline matrix, e.g. "[[1,1],[0,1]]" or "1 1; 0 1".
    #[arg(long, short)]
    matrix: Option<String>,
    /// Series order.
    #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = positive_order)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Tolerance for the approximate tier.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = positive_tolerance)]
    tolerance: f64,
    /// Print the elapsed time on stderr.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

fn positive_order(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err("order must be a positive integer".into()),
    }
}

fn positive_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err("tolerance must be a positive number".into()),
    }
}

fn read_input(c: &Common) -> Result<Input, Failure> {
    let text = match (&c.input, &c.matrix) {
        (Some(p), _) => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        (None, Some(m)) => m.clone(),
        (None, None) => return Err(Failure::Input("give --input or --matrix".into())),
    };
    Ok(Input::parse(&text)?)
}

type Handler = fn(&Input, Settings) -> Result<Outcome, Failure>;

fn run(cmd: &Command) -> (Result<Outcome, Failure>, &Common) {
    let (c, f): (&Common, Handler) = match cmd {
        Command::Zeta(c) => (c, commands::zeta),
        Command::Euler(c) => (c, commands::euler),
        Command::Conjecture(c) => (c, commands::conjecture),
        Command::Verify(c) => (c, commands::verify),
        Command::Batch(c) => {
            let s = Settings {
                order: c.order,
                tolerance: c.tolerance,
            };
            let out = match &c.input {
                Some(dir) => commands::batch(dir, s),
                None => Err(Failure::Input("batch needs --input DIR".into())),
            };
            return (out, c);
        }
    };
    let s = Settings {
        order: c.order,
        tolerance: c.tolerance,
    };
    (read_input(c).and_then(|i| f(&i, s)), c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (result, common) = run(&cli.command);
    let code = match result {
        Ok(out) => {
            match common.format {
                Format::Text => println!("{}", out.text.join("\n")),
                Format::Latex => println!("{}", out.latex.join("\n")),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("report serializes")
                ),
            }
            out.code
        }
        Err(e) => {
            if let Format::Json = common.format {
                let kind = if e.code() == EXIT_INPUT {
                    "input"
                } else {
                    "numeric"
                };
                println!(
                    "{}",
                    serde_json::json!({ "error": { "kind": kind, "message": e.message() } })
                );
            }
            eprintln!("error: {}", e.message());
            e.code()
        }
    };
    if common.timing {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    ExitCode::from(code)
}
