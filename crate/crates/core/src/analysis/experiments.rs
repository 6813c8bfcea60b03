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

use rayon::prelude::*;
use serde::Serialize;

use super::sweep::{first_peak, series_for, sweep, Engine, FULL_ENGINE_MAX_N};
use crate::error::{Error, Result};
use crate::reduced::{
    build_kernel, predicted_peak_m, probability_series, PhaseSet, ProblemSpec, TraceReconciliation, DEFAULT_MATCH_TOL,
};

/// Default tolerance on `max_m |p_full - p_reduced|`.
pub const DEFAULT_CROSS_TOL: f64 = 1e-10;

/// Smallest matching defect accepted by [`mismatch_decay_experiment`].
pub const MISMATCH_MIN_DEFECT: f64 = 0.5;

/// Slack factor over the `1/N` fit used by [`decay_within_bound`].
pub const DECAY_SLACK: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n: u64,
    pub m: u64,
    pub peak_m: u64,
    pub peak_p: f64,
    /// `m*·√(M/N)`; tends to `π/4` for the optimal phases.
    pub normalized: f64,
}

/// First-peak iteration count for each problem size.
///
/// Each sweep runs to `⌈2·π/|Δλ|⌉ + 2`, which always covers the first
/// maximum. Rows are computed in parallel and returned in input order.
pub fn scaling_experiment(phases: &PhaseSet, specs: &[ProblemSpec], engine: Engine) -> Result<Vec<ScalingRow>> {
    if !phases.is_matched(DEFAULT_MATCH_TOL) {
        return Err(Error::Unmatched {
            defect: phases.matching_defect(),
        });
    }
    specs
        .par_iter()
        .map(|spec| {
            let predicted = predicted_peak_m(phases, spec)?;
            let m_max = ((2.0 * predicted).ceil() as u64 + 2).max(3);
            let series = sweep(phases, spec, m_max, engine)?;
            let peak = first_peak(&series)?;
            Ok(ScalingRow {
                n: spec.n_total(),
                m: spec.m_marked(),
                peak_m: peak.m,
                peak_p: peak.p,
                normalized: peak.m as f64 * spec.marked_fraction().sqrt(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecayRow {
    pub n: u64,
    pub m: u64,
    pub max_p: f64,
}

/// `max_{m <= m_max} p(m)` for mismatched phases at fixed `M` and growing `N`.
pub fn mismatch_decay_experiment(
    phases: &PhaseSet,
    m_marked: u64,
    m_max: u64,
    n_values: &[u64],
) -> Result<Vec<DecayRow>> {
    let defect = phases.matching_defect();
    if defect < MISMATCH_MIN_DEFECT {
        return Err(Error::NotMismatched {
            defect,
            required: MISMATCH_MIN_DEFECT,
        });
    }
    let specs = n_values
        .iter()
        .map(|&n| ProblemSpec::new(n, m_marked))
        .collect::<Result<Vec<_>>>()?;
    Ok(specs
        .par_iter()
        .map(|spec| DecayRow {
            n: spec.n_total(),
            m: spec.m_marked(),
            max_p: probability_series(phases, spec, m_max).into_iter().fold(0.0, f64::max),
        })
        .collect())
}

/// Checks every row against `slack · p_L · N_L / N`, the `1/N` law fitted
/// through the largest-`N` row.
pub fn decay_within_bound(rows: &[DecayRow], slack: f64) -> bool {
    let Some(anchor) = rows.iter().max_by_key(|r| r.n) else {
        return true;
    };
    rows.iter()
        .all(|r| r.max_p <= slack * anchor.max_p * anchor.n as f64 / r.n as f64)
}

/// Agreement report between the reduced and the full-state engines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossValidation {
    pub n: u64,
    pub m: u64,
    pub m_max: u64,
    pub tol: f64,
    pub max_abs_diff: f64,
    pub worst_m: u64,
    pub passed: bool,
    pub trace: TraceReconciliation,
}

pub fn cross_validate(phases: &PhaseSet, spec: &ProblemSpec, m_max: u64, tol: f64) -> Result<CrossValidation> {
    if spec.n_total() > FULL_ENGINE_MAX_N {
        return Err(Error::ResourceLimit {
            what: "N",
            limit: FULL_ENGINE_MAX_N,
            got: spec.n_total(),
        });
    }
    let (reduced, full) = rayon::join(
        || series_for(phases, spec, m_max, Engine::Reduced),
        || series_for(phases, spec, m_max, Engine::Full),
    );
    let (reduced, full) = (reduced?, full?);
    let (worst_m, max_abs_diff) = reduced
        .iter()
        .zip(&full)
        .map(|(a, b)| (a - b).abs())
        .enumerate()
        .fold((0, 0.0), |acc, (m, d)| if d > acc.1 { (m, d) } else { acc });
    Ok(CrossValidation {
        n: spec.n_total(),
        m: spec.m_marked(),
        m_max,
        tol,
        max_abs_diff,
        worst_m: worst_m as u64,
        passed: max_abs_diff <= tol,
        trace: build_kernel(phases, spec).trace_reconciliation(),
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::analysis::{figure_preset, FigureId};

    fn spec(n: u64, m: u64) -> ProblemSpec {
        ProblemSpec::new(n, m).unwrap()
    }

    #[test]
    fn optimal_scaling_rows() {
        let optimal = figure_preset(FigureId::Fig3).phases;
        let specs = [spec(100, 1), spec(1000, 10), spec(10000, 10)];
        let rows = scaling_experiment(&optimal, &specs, Engine::Reduced).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!((0.7..=0.85).contains(&row.normalized), "{row:?}");
        }
        assert_eq!(rows[0].n, 100);
        assert_eq!(rows[2].peak_m, 24);
    }

    #[test]
    fn grover_small_n_scaling() {
        let rows = scaling_experiment(&PhaseSet::grover(), &[spec(4, 1)], Engine::Full).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].peak_m, 1);
        assert!((rows[0].normalized - 0.5).abs() < 1e-15);
    }

    #[test]
    fn scaling_rejects_unmatched() {
        let fig1 = figure_preset(FigureId::Fig1).phases;
        assert!(matches!(
            scaling_experiment(&fig1, &[spec(100, 1)], Engine::Reduced),
            Err(Error::Unmatched { .. })
        ));
    }

    #[test]
    fn mismatch_decay() {
        let fig1 = figure_preset(FigureId::Fig1).phases;
        let rows = mismatch_decay_experiment(&fig1, 10, 1000, &[1000, 10_000]).unwrap();
        assert!(rows[1].max_p < rows[0].max_p);
        assert!(decay_within_bound(&rows, DECAY_SLACK));

        let rows = mismatch_decay_experiment(&fig1, 10, 0, &[1000, 10_000]).unwrap();
        assert_eq!(rows[0].max_p, 0.01);
        assert_eq!(rows[1].max_p, 0.001);

        let fig2 = figure_preset(FigureId::Fig2).phases;
        assert!(matches!(
            mismatch_decay_experiment(&fig2, 1, 10, &[100]),
            Err(Error::NotMismatched { .. })
        ));
        let slight = PhaseSet::new(PI, 0.0, PI - 0.3, 0.0).unwrap();
        assert!(mismatch_decay_experiment(&slight, 1, 10, &[100]).is_err());
    }

    #[test]
    fn decay_bound_detects_violation() {
        let rows = [
            DecayRow {
                n: 100,
                m: 1,
                max_p: 0.5,
            },
            DecayRow {
                n: 1000,
                m: 1,
                max_p: 0.001,
            },
        ];
        assert!(!decay_within_bound(&rows, DECAY_SLACK));
        assert!(decay_within_bound(&[], DECAY_SLACK));
    }

    #[test]
    fn fig2_cross_validation() {
        let f = figure_preset(FigureId::Fig2);
        let report = cross_validate(&f.phases, &f.spec, f.m_max, DEFAULT_CROSS_TOL).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(report.trace.corrected_abs_error < 1e-12);
        assert!(report.trace.printed_abs_error > 1e-6);

        let strict = cross_validate(&f.phases, &f.spec, f.m_max, 0.0).unwrap();
        assert!(!strict.passed);
    }

    #[test]
    fn cross_validation_guard() {
        let huge = spec(FULL_ENGINE_MAX_N + 1, 3);
        let err = cross_validate(&PhaseSet::grover(), &huge, 5, 1e-10).unwrap_err();
        assert!(err.is_resource_limit());
    }
}
