// Copyright 2026 The grover-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `grover-phase`: kernels, sweeps, figure data, validation and scans of
//! the four-phase generalized Grover iteration.

mod angle;
mod commands;
mod config;
mod error;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grover_phase::analysis::{Engine, FigureId};

use crate::config::{resolve, CommandKind, ConfigFile, FlagValues, OutputFormat, RunConfig};
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "grover-phase", version, about = "Generalized Grover kernel laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernel matrix, trace/determinant, eigensystem and matching defect (JSON)
    Kernel(CommonArgs),
    /// Success probability p(m) for m = 0..=m_max
    Sweep(CommonArgs),
    /// p(m) data for one of the preset figures (fig1, fig2, fig3)
    Figure {
        id: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Cross-check the reduced model against the full statevector (JSON)
    Validate(CommonArgs),
    /// Max probability over a grid of (θ₁-θ₂, φ₁-φ₂)
    Scan {
        /// Grid points per axis
        #[arg(long)]
        grid: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// First-peak iteration count against problem size
    Scaling {
        /// Problem sizes as N:M, comma separated
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<String>>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Default)]
struct CommonArgs {
    /// θ₁ θ₂ φ₁ φ₂ in radians; `pi` literals allowed (e.g. 1.7pi, pi/2)
    #[arg(long, num_args = 4, value_names = ["T1", "T2", "P1", "P2"], allow_hyphen_values = true)]
    phases: Option<Vec<String>>,
    /// Database size N
    #[arg(long)]
    n: Option<u64>,
    /// Number of marked items M
    #[arg(long)]
    m: Option<u64>,
    /// Largest iteration count
    #[arg(long = "m-max")]
    m_max: Option<u64>,
    /// reduced or full
    #[arg(long)]
    engine: Option<String>,
    /// csv or json
    #[arg(long)]
    format: Option<String>,
    /// Write data here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON run configuration; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Tolerance for `validate`
    #[arg(long)]
    tol: Option<f64>,
    /// Start from a figure preset (fig1, fig2, fig3)
    #[arg(long)]
    preset: Option<String>,
}

fn parse_sizes(items: &[String]) -> Result<Vec<[u64; 2]>, CliError> {
    items
        .iter()
        .map(|item| {
            let (n, m) = item
                .split_once(':')
                .ok_or_else(|| CliError::Invalid(format!("size `{item}` is not N:M")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| CliError::Invalid(format!("size `{item}` is not N:M")))
            };
            Ok([parse(n)?, parse(m)?])
        })
        .collect()
}

fn flag_values(common: &CommonArgs) -> Result<FlagValues, CliError> {
    let phases = match &common.phases {
        Some(raw) => {
            let mut out = [0.0; 4];
            for (slot, text) in out.iter_mut().zip(raw) {
                *slot = angle::parse_angle(text).map_err(CliError::Invalid)?;
            }
            Some(out)
        }
        None => None,
    };
    Ok(FlagValues {
        preset: common.preset.as_deref().map(str::parse::<FigureId>).transpose()?,
        phases,
        n: common.n,
        m: common.m,
        m_max: common.m_max,
        engine: common.engine.as_deref().map(str::parse::<Engine>).transpose()?,
        format: common
            .format
            .as_deref()
            .map(str::parse::<OutputFormat>)
            .transpose()
            .map_err(CliError::Invalid)?,
        out: common.out.clone(),
        tol: common.tol,
        grid: None,
        sizes: None,
    })
}

fn build_config(command: Command) -> Result<RunConfig, CliError> {
    let (kind, flags, common) = match command {
        Command::Kernel(c) => (CommandKind::Kernel, flag_values(&c)?, c),
        Command::Sweep(c) => (CommandKind::Sweep, flag_values(&c)?, c),
        Command::Validate(c) => (CommandKind::Validate, flag_values(&c)?, c),
        Command::Figure { id, common } => {
            let mut flags = flag_values(&common)?;
            flags.preset = Some(id.parse::<FigureId>()?);
            (CommandKind::Figure, flags, common)
        }
        Command::Scan { grid, common } => {
            let mut flags = flag_values(&common)?;
            flags.grid = grid;
            (CommandKind::Scan, flags, common)
        }
        Command::Scaling { sizes, common } => {
            let mut flags = flag_values(&common)?;
            flags.sizes = sizes.as_deref().map(parse_sizes).transpose()?;
            (CommandKind::Scaling, flags, common)
        }
    };
    let file = match &common.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    resolve(kind, &flags, &file)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".run.json");
    PathBuf::from(name)
}

fn execute(cfg: &RunConfig) -> Result<u8, CliError> {
    let rendered = commands::run(cfg)?;
    match &cfg.output_path {
        Some(path) => {
            std::fs::write(path, &rendered.data)?;
            let mut meta = serde_json::to_vec_pretty(cfg).map_err(|e| CliError::Invalid(e.to_string()))?;
            meta.push(b'\n');
            std::fs::write(sidecar_path(path), meta)?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&rendered.data)?;
            stdout.flush()?;
        }
    }
    Ok(rendered.exit_code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = build_config(cli.command).and_then(|cfg| execute(&cfg));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
