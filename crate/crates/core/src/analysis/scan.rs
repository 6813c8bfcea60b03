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

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use super::sweep::{find_peaks, SweepPoint};
use crate::error::{Error, Result};
use crate::reduced::{probability_series, PhaseSet, ProblemSpec};

/// One cell of the `(θ₁-θ₂, φ₁-φ₂)` grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanCell {
    pub dtheta: f64,
    pub dphi: f64,
    pub max_p: f64,
    pub first_peak_m: Option<u64>,
}

/// Cell-centred grid `(i + ½)·2π/resolution`. For odd resolutions it
/// contains `π` and avoids the degenerate origin.
pub fn scan_axis(resolution: usize) -> Vec<f64> {
    let step = TAU / resolution as f64;
    (0..resolution).map(|i| (i as f64 + 0.5) * step).collect()
}

/// Maximum success probability over `m <= m_max` on a grid of phase
/// differences, with `θ₂ = φ₂ = 0`. Cells are ordered `dtheta`-major.
pub fn phase_scan(spec: &ProblemSpec, resolution: usize, m_max: u64) -> Result<Vec<ScanCell>> {
    if resolution < 3 {
        return Err(Error::InvalidArgument(format!(
            "scan grid needs at least 3 points per axis, got {resolution}"
        )));
    }
    if m_max < 1 {
        return Err(Error::InvalidArgument("scan needs m_max >= 1".into()));
    }
    let axis = scan_axis(resolution);
    let cells: Vec<(f64, f64)> = axis.iter().flat_map(|&t| axis.iter().map(move |&p| (t, p))).collect();
    cells
        .par_iter()
        .map(|&(dtheta, dphi)| {
            let phases = PhaseSet::new(dtheta, 0.0, dphi, 0.0)?;
            let points: Vec<SweepPoint> = probability_series(&phases, spec, m_max)
                .into_iter()
                .enumerate()
                .map(|(m, p)| SweepPoint { m: m as u64, p })
                .collect();
            Ok(ScanCell {
                dtheta,
                dphi,
                max_p: points.iter().map(|pt| pt.p).fold(0.0, f64::max),
                first_peak_m: find_peaks(&points).first().map(|pt| pt.m),
            })
        })
        .collect()
}
