//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or parameter error.

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use poschl_teller::model::ModelParams;
use poschl_teller::report::{self, Command, Outcome, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(
    name = "poschl-teller",
    version,
    about = "Pöschl–Teller confined oscillator toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Energy levels E_n and their box/oscillator parts
    Spectrum(Common),
    /// Sampled normalized eigenfunctions (plot text)
    Wavefunction(Common),
    /// Per-level pressure: exact, finite-difference and expectation value
    Pressure(Common),
    /// Harmonic-limit and free-particle-limit sweeps
    Limits(Common),
    /// Run the self-check suite
    Verify(Common),
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    /// Particle mass
    #[arg(long = "m", default_value_t = 1.0, allow_negative_numbers = true)]
    mass: f64,
    /// Potential amplitude V0
    #[arg(long = "v0", default_value_t = 1.0, allow_negative_numbers = true)]
    v0: f64,
    /// Confinement width L
    #[arg(long = "L", default_value_t = std::f64::consts::PI, allow_negative_numbers = true)]
    width: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    hbar: f64,
    /// Highest level index
    #[arg(long, default_value_t = 5)]
    n_max: u32,
    /// Grid points (wavefunction samples, quadrature panels or coarse oracle grid)
    #[arg(long = "grid", default_value_t = 4096)]
    grid: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to PATH instead of standard output
    #[arg(long = "out", value_name = "PATH")]
    out: Option<PathBuf>,
    /// Add certified finite-difference eigenvalues to `spectrum`
    #[arg(long)]
    verify_oracle: bool,
    /// JSON report for `verify`
    #[arg(long)]
    json: bool,
    /// Prepend a provenance line with a timestamp
    #[arg(long)]
    stamp: bool,
    /// Multiply every `verify` tolerance by this factor
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    tolerance_scale: f64,
}

fn config(command: Command, c: Common) -> RunConfig {
    RunConfig {
        command,
        params: ModelParams {
            mass: c.mass,
            v0: c.v0,
            width: c.width,
            hbar: c.hbar,
        },
        n_max: c.n_max,
        grid_points: c.grid,
        output_format: match c.format {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        },
        output_path: c.out,
        verify_oracle: c.verify_oracle,
        json_report: c.json,
        stamp: c.stamp,
        tolerance_scale: c.tolerance_scale,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Cmd::Spectrum(c) => config(Command::Spectrum, c),
        Cmd::Wavefunction(c) => config(Command::Wavefunction, c),
        Cmd::Pressure(c) => config(Command::Pressure, c),
        Cmd::Limits(c) => config(Command::Limits, c),
        Cmd::Verify(c) => config(Command::Verify, c),
    };
    match report::run(&cfg, &mut io::stdout().lock()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
