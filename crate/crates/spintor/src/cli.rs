//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};

use crate::classify::{classify, render, Arithmetic};
use crate::cone::{self, ConeInput};
use crate::error::{CliError, Result, EXIT_INPUT, EXIT_OK, EXIT_VERIFY_FAILED};
use crate::input::{read_json, StructureInput};
use crate::tables::{self, Table};
use crate::verify::{self, Fixtures};

#[derive(Debug, Parser)]
#[command(
    name = "spintor",
    version,
    about = "Intrinsic torsion of SU(3)- and G2-structures from a defining spinor"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// Read golden fixtures from this directory instead of the built-in copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Classify the jet described by a JSON job file.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        float: bool,
        /// Zero threshold for component norms in float mode.
        #[arg(long, default_value_t = 1e-9, requires = "float")]
        eps: f64,
    },
    /// Sweep a spin cone.
    Cone {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print one of the stored class tables.
    #[command(group(ArgGroup::new("table").required(true).args(["su3", "g2", "embed", "restrict"])))]
    Tables {
        #[arg(long)]
        su3: bool,
        #[arg(long)]
        g2: bool,
        #[arg(long)]
        embed: bool,
        #[arg(long)]
        restrict: bool,
    },
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.into(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Executes a parsed command and returns the exit code.
pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Verify { suite, fixtures } => {
            let fixtures = fixtures.map(Fixtures::from_dir).unwrap_or_default();
            let checks = verify::run(suite.as_deref(), &fixtures)?;
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{c}\n"));
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            text.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            emit(&text, None, out)?;
            Ok(if failed == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Classify {
            input,
            output,
            float,
            eps,
        } => {
            if !(eps.is_finite() && eps >= 0.0) {
                return Err(CliError::input("--eps must be a nonnegative number"));
            }
            let jet = StructureInput::from_path(&input)?.jet()?;
            let arithmetic = if float {
                Arithmetic::Float { eps }
            } else {
                Arithmetic::Exact
            };
            emit(
                &render(&classify(&jet, arithmetic)?),
                output.as_deref(),
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Cone { input, output } => {
            let spec: ConeInput = read_json(&input)?;
            emit(
                &render(&cone::report(&cone::sweep(&spec)?)),
                output.as_deref(),
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Tables { su3, g2, embed, .. } => {
            let table = if su3 {
                Table::Su3
            } else if g2 {
                Table::G2
            } else if embed {
                Table::Embed
            } else {
                Table::Restrict
            };
            emit(&tables::render(table), None, out)?;
            Ok(EXIT_OK)
        }
    }
}
