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

//! Resolved run configuration and the config file it round-trips through.

use std::fmt;
use std::path::{Path, PathBuf};

use grover_phase::analysis::{figure_preset, Engine, FigureId, DEFAULT_CROSS_TOL};
use serde::{Deserialize, Serialize};

use crate::angle::parse_angle;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Kernel,
    Sweep,
    Figure,
    Validate,
    Scan,
    Scaling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

pub const DEFAULT_GRID: usize = 25;
pub const DEFAULT_SCAN_M_MAX: u64 = 200;
pub const DEFAULT_SIZES: [[u64; 2]; 4] = [[100, 1], [400, 1], [1000, 10], [10000, 10]];

/// Everything needed to reproduce a run. Written next to `--out` files as
/// `<out>.run.json` and accepted back through `--config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub tool_version: String,
    pub command: CommandKind,
    pub preset: Option<FigureId>,
    pub phases: [f64; 4],
    pub n: u64,
    pub m: u64,
    pub m_max: u64,
    pub engine: Engine,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub tol: f64,
    pub grid: usize,
    pub sizes: Vec<[u64; 2]>,
}

/// Angles in a config file may be numbers or `pi` expressions.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum AngleValue {
    Number(f64),
    Text(String),
}

impl AngleValue {
    fn resolve(&self) -> Result<f64, CliError> {
        match self {
            AngleValue::Number(x) => Ok(*x),
            AngleValue::Text(s) => parse_angle(s).map_err(CliError::Invalid),
        }
    }
}

/// A partially specified [`RunConfig`] as read from `--config`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    // sidecar fields; the subcommand on the command line decides what runs
    #[allow(dead_code)]
    pub tool_version: Option<String>,
    #[allow(dead_code)]
    pub command: Option<CommandKind>,
    pub preset: Option<FigureId>,
    pub phases: Option<[AngleValue; 4]>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub m_max: Option<u64>,
    pub engine: Option<Engine>,
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
    pub sizes: Option<Vec<[u64; 2]>>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("invalid config {}: {e}", path.display())))
    }
}

/// Values given on the command line; `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct FlagValues {
    pub preset: Option<FigureId>,
    pub phases: Option<[f64; 4]>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub m_max: Option<u64>,
    pub engine: Option<Engine>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
    pub sizes: Option<Vec<[u64; 2]>>,
}

/// Resolves each field as flag, then config file, then preset, then default.
///
/// Without any preset the Fig. 2 parameters are the defaults.
pub fn resolve(command: CommandKind, flags: &FlagValues, file: &ConfigFile) -> Result<RunConfig, CliError> {
    let explicit_preset = flags.preset.or(file.preset);
    let preset = figure_preset(explicit_preset.unwrap_or(FigureId::Fig2));
    let default_m_max = match (command, explicit_preset) {
        (CommandKind::Scan, None) => DEFAULT_SCAN_M_MAX,
        _ => preset.m_max,
    };
    let file_phases = match &file.phases {
        Some(values) => {
            let mut out = [0.0; 4];
            for (slot, v) in out.iter_mut().zip(values) {
                *slot = v.resolve()?;
            }
            Some(out)
        }
        None => None,
    };
    Ok(RunConfig {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command,
        preset: explicit_preset,
        phases: flags.phases.or(file_phases).unwrap_or(preset.phases.angles()),
        n: flags.n.or(file.n).unwrap_or(preset.spec.n_total()),
        m: flags.m.or(file.m).unwrap_or(preset.spec.m_marked()),
        m_max: flags.m_max.or(file.m_max).unwrap_or(default_m_max),
        engine: flags.engine.or(file.engine).unwrap_or_default(),
        output_format: flags.format.or(file.output_format).unwrap_or_default(),
        output_path: flags.out.clone().or_else(|| file.output_path.clone()),
        tol: flags.tol.or(file.tol).unwrap_or(DEFAULT_CROSS_TOL),
        grid: flags.grid.or(file.grid).unwrap_or(DEFAULT_GRID),
        sizes: flags
            .sizes
            .clone()
            .or_else(|| file.sizes.clone())
            .unwrap_or_else(|| DEFAULT_SIZES.to_vec()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_fig2() {
        let cfg = resolve(CommandKind::Sweep, &FlagValues::default(), &ConfigFile::default()).unwrap();
        let fig2 = figure_preset(FigureId::Fig2);
        assert_eq!(cfg.phases, fig2.phases.angles());
        assert_eq!((cfg.n, cfg.m, cfg.m_max), (1000, 10, 120));
        assert_eq!(cfg.engine, Engine::Reduced);
        assert_eq!(cfg.tol, 1e-10);
        let scan = resolve(CommandKind::Scan, &FlagValues::default(), &ConfigFile::default()).unwrap();
        assert_eq!(scan.m_max, 200);
    }

    #[test]
    fn flags_beat_file_beats_preset() {
        let file: ConfigFile =
            serde_json::from_str(r#"{"preset": "fig3", "n": 500, "m_max": 40, "phases": ["pi", 0, "pi", 0]}"#).unwrap();
        let flags = FlagValues {
            n: Some(64),
            ..Default::default()
        };
        let cfg = resolve(CommandKind::Sweep, &flags, &file).unwrap();
        assert_eq!(cfg.n, 64);
        assert_eq!(cfg.m_max, 40);
        assert_eq!(cfg.m, 10);
        assert_eq!(cfg.phases, [std::f64::consts::PI, 0.0, std::f64::consts::PI, 0.0]);
        assert_eq!(cfg.preset, Some(FigureId::Fig3));
    }

    #[test]
    fn run_config_round_trips() {
        let cfg = resolve(CommandKind::Scan, &FlagValues::default(), &ConfigFile::default()).unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        let file: ConfigFile = serde_json::from_str(&text).unwrap();
        let again = resolve(CommandKind::Scan, &FlagValues::default(), &file).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(serde_json::from_str::<ConfigFile>(r#"{"nn": 3}"#).is_err());
    }
}
