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

//! Command bodies. Each one renders its data into memory; `main` decides
//! where the bytes go.

use grover_phase::analysis::{
    cross_validate, phase_scan, scaling_experiment, sweep, CrossValidation, Engine, ScalingRow, ScanCell, SweepSeries,
};
use grover_phase::reduced::{
    build_kernel, eigensystem, g1_alignment, predicted_peak_m, Alignment, EigenSystem, Kernel2, PhaseSet, ProblemSpec,
    TraceReconciliation, DEFAULT_MATCH_TOL,
};
use serde::Serialize;

use crate::config::{CommandKind, OutputFormat, RunConfig};
use crate::error::CliError;

/// Rendered data plus the exit code the command wants.
pub struct Rendered {
    pub data: Vec<u8>,
    pub exit_code: u8,
}

impl Rendered {
    fn ok(data: Vec<u8>) -> Self {
        Rendered { data, exit_code: 0 }
    }
}

/// 17 significant digits, `.` separator, independent of locale.
fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| CliError::Invalid(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let map = |e: csv::Error| CliError::Invalid(format!("csv: {e}"));
    w.write_record(header).map_err(map)?;
    for row in rows {
        w.write_record(&row).map_err(map)?;
    }
    w.into_inner().map_err(|e| CliError::Invalid(format!("csv: {e}")))
}

fn inputs(cfg: &RunConfig) -> Result<(PhaseSet, ProblemSpec), CliError> {
    Ok((PhaseSet::from_angles(cfg.phases)?, ProblemSpec::new(cfg.n, cfg.m)?))
}

pub fn run(cfg: &RunConfig) -> Result<Rendered, CliError> {
    match cfg.command {
        CommandKind::Kernel => cmd_kernel(cfg),
        CommandKind::Sweep | CommandKind::Figure => cmd_sweep(cfg),
        CommandKind::Validate => cmd_validate(cfg),
        CommandKind::Scan => cmd_scan(cfg),
        CommandKind::Scaling => cmd_scaling(cfg),
    }
}

#[derive(Serialize)]
struct KernelReport {
    spec: ProblemSpec,
    phases: PhaseSet,
    #[serde(flatten)]
    kernel: Kernel2,
    trace_reconciliation: TraceReconciliation,
    eigensystem: EigenSystem,
    matching_defect: f64,
    is_matched: bool,
    predicted_peak_m: Option<f64>,
    alignment: Option<Alignment>,
}

/// Kernel, eigensystem and matching diagnostics as one JSON document.
pub fn cmd_kernel(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (phases, spec) = inputs(cfg)?;
    let kernel = build_kernel(&phases, &spec);
    let report = KernelReport {
        spec,
        phases,
        kernel,
        trace_reconciliation: kernel.trace_reconciliation(),
        eigensystem: eigensystem(&kernel),
        matching_defect: phases.matching_defect(),
        is_matched: phases.is_matched(DEFAULT_MATCH_TOL),
        predicted_peak_m: predicted_peak_m(&phases, &spec).ok(),
        alignment: g1_alignment(&phases, &spec).ok(),
    };
    Ok(Rendered::ok(to_json(&report)?))
}

fn render_series(series: &SweepSeries, format: OutputFormat) -> Result<Vec<u8>, CliError> {
    match format {
        OutputFormat::Json => to_json(series),
        OutputFormat::Csv => csv_table(
            &["m", "p"],
            series.points.iter().map(|pt| vec![pt.m.to_string(), real(pt.p)]),
        ),
    }
}

/// `m,p` series; also serves `figure`, whose preset is already folded
/// into the config.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (phases, spec) = inputs(cfg)?;
    let series = sweep(&phases, &spec, cfg.m_max, cfg.engine)?;
    Ok(Rendered::ok(render_series(&series, cfg.output_format)?))
}

#[derive(Serialize)]
struct ValidateReport {
    phases: PhaseSet,
    #[serde(flatten)]
    result: CrossValidation,
}

/// Exit 0 when both engines agree within `tol`, 1 otherwise.
pub fn cmd_validate(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (phases, spec) = inputs(cfg)?;
    if cfg.tol.is_nan() || cfg.tol < 0.0 {
        return Err(CliError::Invalid(format!(
            "tolerance must be non-negative, got {}",
            cfg.tol
        )));
    }
    let result = cross_validate(&phases, &spec, cfg.m_max, cfg.tol)?;
    let data = to_json(&ValidateReport { phases, result })?;
    Ok(Rendered {
        data,
        exit_code: if result.passed { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct ScanReport<'a> {
    spec: ProblemSpec,
    m_max: u64,
    resolution: usize,
    cells: &'a [ScanCell],
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let spec = ProblemSpec::new(cfg.n, cfg.m)?;
    let cells = phase_scan(&spec, cfg.grid, cfg.m_max)?;
    let data = match cfg.output_format {
        OutputFormat::Json => to_json(&ScanReport {
            spec,
            m_max: cfg.m_max,
            resolution: cfg.grid,
            cells: &cells,
        })?,
        OutputFormat::Csv => csv_table(
            &["dtheta", "dphi", "max_p", "first_peak_m"],
            cells.iter().map(|c| {
                vec![
                    real(c.dtheta),
                    real(c.dphi),
                    real(c.max_p),
                    c.first_peak_m.map(|m| m.to_string()).unwrap_or_default(),
                ]
            }),
        )?,
    };
    Ok(Rendered::ok(data))
}

#[derive(Serialize)]
struct ScalingReport<'a> {
    phases: PhaseSet,
    engine: Engine,
    rows: &'a [ScalingRow],
}

pub fn cmd_scaling(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let phases = PhaseSet::from_angles(cfg.phases)?;
    let specs = cfg
        .sizes
        .iter()
        .map(|[n, m]| ProblemSpec::new(*n, *m))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = scaling_experiment(&phases, &specs, cfg.engine)?;
    let data = match cfg.output_format {
        OutputFormat::Json => to_json(&ScalingReport {
            phases,
            engine: cfg.engine,
            rows: &rows,
        })?,
        OutputFormat::Csv => csv_table(
            &["n", "m", "peak_m", "peak_p", "normalized"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.m.to_string(),
                    r.peak_m.to_string(),
                    real(r.peak_p),
                    real(r.normalized),
                ]
            }),
        )?,
    };
    Ok(Rendered::ok(data))
}
