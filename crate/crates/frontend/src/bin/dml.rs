use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dml_frontend::report::{membership_csv, profile_csv, to_json};
use dml_frontend::{certify_progression, density_report, load_experiment, run_experiment, FrontendError};

#[derive(Parser)]
#[command(name = "dml", version, about = "Return sets of polynomial orbits: density, progressions and closure certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis and emit a report.
    Run {
        file: PathBuf,
        /// Write here instead of stdout. With csv, the density profile goes
        /// to a sibling file ending in `.profile.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Density profile of the return set only.
    Density {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closure certificate for the single progression aN+b.
    Certify {
        file: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

fn write_out(path: &Path, text: &str) -> Result<(), FrontendError> {
    std::fs::write(path, text).map_err(|e| FrontendError::Output(format!("{}: {e}", path.display())))
}

fn profile_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.profile.csv"))
}

fn execute(command: Command) -> Result<(), FrontendError> {
    match command {
        Command::Run { file, out, format } => {
            let report = run_experiment(&load_experiment(&file)?)?;
            match (format, out) {
                (Format::Json, None) => print!("{}", to_json(&report)),
                (Format::Json, Some(path)) => write_out(&path, &to_json(&report))?,
                (Format::Csv, None) => {
                    print!("{}", membership_csv(&report.return_set));
                    println!();
                    print!("{}", profile_csv(&report.density_profile));
                }
                (Format::Csv, Some(path)) => {
                    write_out(&path, &membership_csv(&report.return_set))?;
                    write_out(&profile_path(&path), &profile_csv(&report.density_profile))?;
                }
            }
        }
        Command::Density { file, format } => {
            let report = density_report(&load_experiment(&file)?)?;
            match format {
                Format::Json => print!("{}", to_json(&report)),
                Format::Csv => print!("{}", profile_csv(&report.density_profile)),
            }
        }
        Command::Certify { file, a, b } => {
            let report = certify_progression(&load_experiment(&file)?, a, b)?;
            print!("{}", to_json(&report));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
