//! Command front end: configuration, dispatch and output encoding.

pub mod commands;
pub mod table;
pub mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::Value;

use crate::error::{invalid, Result};
use crate::model::ModelParams;

pub use table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Wavefunction,
    Pressure,
    Limits,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub params: ModelParams,
    pub n_max: u32,
    pub grid_points: usize,
    pub output_format: OutputFormat,
    /// `None` writes to standard output.
    pub output_path: Option<PathBuf>,
    pub verify_oracle: bool,
    /// Machine-readable report for `verify`.
    pub json_report: bool,
    /// Prepend a provenance line carrying a timestamp.
    pub stamp: bool,
    pub tolerance_scale: f64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            params: ModelParams::default(),
            n_max: 5,
            grid_points: 4096,
            output_format: OutputFormat::Csv,
            output_path: None,
            verify_oracle: false,
            json_report: false,
            stamp: false,
            tolerance_scale: 1.0,
        }
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    VerificationFailed,
}

fn provenance() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!(
        "poschl-teller {} generated at unix time {secs}",
        env!("CARGO_PKG_VERSION")
    )
}

/// Encodes a table in the configured format.
pub fn encode(table: &Table, cfg: &RunConfig) -> Result<String> {
    match cfg.output_format {
        OutputFormat::Csv => {
            let body = table.to_csv()?;
            Ok(if cfg.stamp {
                format!("# {}\n{body}", provenance())
            } else {
                body
            })
        }
        OutputFormat::Json => {
            let rows = table.to_json_value();
            let value = if cfg.stamp {
                serde_json::json!({ "provenance": provenance(), "rows": rows })
            } else {
                rows
            };
            Ok(serde_json::to_string_pretty(&value)? + "\n")
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// `stem_n<k>.ext` next to `path`.
pub fn per_level_path(path: &Path, n: u32) -> PathBuf {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("wavefunction");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_n{n}.{ext}"),
        None => format!("{stem}_n{n}"),
    };
    path.with_file_name(name)
}

/// Runs one command, writing to `cfg.output_path` or `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<Outcome> {
    cfg.params.validate()?;
    if !(cfg.tolerance_scale.is_finite() && cfg.tolerance_scale >= 0.0) {
        return Err(invalid(
            "tolerance_scale",
            cfg.tolerance_scale,
            "must be finite and >= 0",
        ));
    }
    let path = cfg.output_path.as_deref();
    match cfg.command {
        Command::Spectrum => {
            let grid = cfg.verify_oracle.then_some(cfg.grid_points);
            let t = commands::spectrum_table(&cfg.params, cfg.n_max, grid)?;
            emit(&encode(&t, cfg)?, path, out)?;
        }
        Command::Pressure => {
            let t = commands::pressure_table(&cfg.params, cfg.n_max, cfg.grid_points)?;
            emit(&encode(&t, cfg)?, path, out)?;
        }
        Command::Limits => {
            let t = commands::limits_table(&cfg.params)?;
            emit(&encode(&t, cfg)?, path, out)?;
        }
        Command::Wavefunction => {
            let outputs = commands::wavefunctions(&cfg.params, cfg.n_max, cfg.grid_points)?;
            let stamp = cfg.stamp.then(provenance);
            match path {
                Some(p) if cfg.n_max > 0 => {
                    for w in &outputs {
                        let text = with_stamp(stamp.as_deref(), w.to_plot_text());
                        fs::write(per_level_path(p, w.table.n), text)?;
                    }
                }
                _ => {
                    let blocks: Vec<String> = outputs.iter().map(|w| w.to_plot_text()).collect();
                    // two blank lines separate data blocks for gnuplot's `index`
                    let text = with_stamp(stamp.as_deref(), blocks.join("\n\n"));
                    emit(&text, path, out)?;
                }
            }
        }
        Command::Verify => {
            let checks = verify::run_checks(cfg.tolerance_scale)?;
            let text = if cfg.json_report || cfg.output_format == OutputFormat::Json {
                let v: Value = serde_json::to_value(&checks)?;
                serde_json::to_string_pretty(&v)? + "\n"
            } else {
                verify::render_text(&checks)
            };
            emit(&text, path, out)?;
            if checks.iter().any(|c| !c.passed) {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn with_stamp(stamp: Option<&str>, body: String) -> String {
    match stamp {
        Some(s) => format!("# {s}\n{body}"),
        None => body,
    }
}
