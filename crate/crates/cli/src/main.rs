use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semisolve::Method;
use semisolve_cli::{cmd_det, cmd_pinv, cmd_solve, CliError, CommandOutput, MethodChoice};

/// Exact solver for A ⊗ x = b over max-plus, min-plus, max-times and min-times.
#[derive(Parser)]
#[command(name = "semisolve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the system and report each method's verdict.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodFlag::All)]
        method: MethodFlag,
        /// Output file, or "-" for standard output.
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Print the bideterminant and det_eps of a square A.
    Det {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the pseudo-inverse A⁻ and the product AA⁻.
    Pinv {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodFlag {
    PseudoInverse,
    Cramer,
    Normalization,
    All,
}

impl From<MethodFlag> for MethodChoice {
    fn from(m: MethodFlag) -> Self {
        match m {
            MethodFlag::PseudoInverse => MethodChoice::One(Method::PseudoInverse),
            MethodFlag::Cramer => MethodChoice::One(Method::Cramer),
            MethodFlag::Normalization => MethodChoice::One(Method::Normalization),
            MethodFlag::All => MethodChoice::All,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(output: &str, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: output.to_owned(),
        source,
    };
    if output == "-" {
        std::io::stdout().write_all(text.as_bytes()).map_err(io)
    } else {
        fs::write(output, text).map_err(io)
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (out, target): (CommandOutput, String) = match cli.command {
        Command::Solve {
            input,
            method,
            output,
        } => (cmd_solve(&read(&input)?, method.into())?, output),
        Command::Det { input } => (cmd_det(&read(&input)?)?, "-".into()),
        Command::Pinv { input } => (cmd_pinv(&read(&input)?)?, "-".into()),
    };
    write(&target, &out.text)?;
    Ok(out.exit_code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
