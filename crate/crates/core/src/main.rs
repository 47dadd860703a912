use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kummer_coassoc::cli::{self, exit, NumericsConfig, RunReport};
use kummer_coassoc::coassoc::CertificateInput;
use kummer_coassoc::error::{Error, Result};

#[derive(Parser)]
#[command(name = "kummer-coassoc", version, about = "Coassociatives in resolved Kummer G2-orbifolds")]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce a bundled worked example.
    RunExample { id: String },
    /// Stream admissible parameters of a table row as JSON lines.
    Enumerate {
        #[arg(long)]
        row: String,
        #[arg(long)]
        height: u32,
    },
    /// Run the Gibbons-Hawking convergence suite from a TOML config.
    VerifyNumerics {
        #[arg(long)]
        config: PathBuf,
    },
    /// Certify the constants of the perturbation step.
    Certificate {
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        c: f64,
        #[arg(long = "R")]
        r: f64,
        #[arg(long = "cE")]
        c_e: Option<f64>,
    },
}

fn emit(report: &RunReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).map_err(|e| Error::Config(e.to_string()))?),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(())
}

fn run(args: Args) -> Result<i32> {
    let report = match args.command {
        Command::RunExample { id } => cli::run_example(&id)?,
        Command::Enumerate { row, height } => {
            let row = cli::parse_row(&row)?;
            for rec in cli::enumerate(row, height)? {
                match args.format {
                    Format::Json => println!("{}", serde_json::to_string(&rec).map_err(|e| Error::Config(e.to_string()))?),
                    Format::Text => {
                        let counts: Vec<String> = rec.spheres.iter().map(|d| format!("{}:{}", d.direction, d.embedded)).collect();
                        println!("{} {:?} spheres [{}]", rec.row, rec.canonical_form, counts.join(", "));
                    }
                }
            }
            return Ok(exit::PASS);
        }
        Command::VerifyNumerics { config } => {
            let text = std::fs::read_to_string(&config).map_err(|e| Error::Config(format!("{}: {e}", config.display())))?;
            cli::verify_numerics(&NumericsConfig::from_toml(&text)?)?
        }
        Command::Certificate { beta, gamma, c, r, c_e } => {
            let mut input = CertificateInput::new(beta, gamma, c, r);
            input.c_e = c_e;
            cli::certificate(&input)?
        }
    };
    emit(&report, args.format)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::CONFIG_ERROR as u8 } else { 0 });
        }
    };
    match run(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::error_exit_code(&e) as u8)
        }
    }
}
