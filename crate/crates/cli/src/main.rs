use std::fs::File;
use std::io::{self, BufReader, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use distalg::{Format, Session};
use distalg_core::oracle::OracleConfig;

#[derive(Parser)]
#[command(name = "distalg", version, about = "Exact algebra of piecewise polynomials and Dirac deltas")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive session on stdin/stdout (the default).
    Repl(Options),
    /// Run a script file, one command per line.
    Batch {
        file: PathBuf,
        #[command(flatten)]
        options: Options,
        /// Stop with exit code 2 at the first syntax error.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args, Clone)]
struct Options {
    /// Output format: plain, latex or json.
    #[arg(long, default_value = "plain")]
    format: Format,
    /// Relative tolerance for the oracle's extrapolation.
    #[arg(long, default_value_t = OracleConfig::default().tolerance)]
    tolerance: f64,
    /// Number of ε levels used by the oracle.
    #[arg(long, default_value_t = OracleConfig::default().eps_depth)]
    eps_depth: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            format: Format::Plain,
            tolerance: OracleConfig::default().tolerance,
            eps_depth: OracleConfig::default().eps_depth,
        }
    }
}

impl Options {
    fn session(&self) -> Result<Session, String> {
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(format!("--tolerance must be positive, got {}", self.tolerance));
        }
        if self.eps_depth < 2 {
            return Err(format!("--eps-depth must be at least 2, got {}", self.eps_depth));
        }
        Ok(Session::new(self.format, OracleConfig { tolerance: self.tolerance, eps_depth: self.eps_depth }))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut session, input, strict, repl): (_, Box<dyn io::BufRead>, _, _) = match cli.command {
        Some(Command::Batch { file, options, strict }) => {
            let session = match options.session() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match File::open(&file) {
                Ok(f) => (session, Box::new(BufReader::new(f)), strict, false),
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            }
        }
        repl => {
            let options = match repl {
                Some(Command::Repl(o)) => o,
                _ => Options::default(),
            };
            let session = match options.session() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            (session, Box::new(io::stdin().lock()), false, true)
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let prompt = repl && io::stdin().is_terminal();
    match session.run(input, &mut stdout.lock(), &mut stderr.lock(), strict, prompt) {
        // the REPL reports errors inline and still exits cleanly
        Ok(_) if repl => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
