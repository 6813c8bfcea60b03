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

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fullstate::{run_full, MAX_ITERATIONS};
use crate::reduced::{probability_series, PhaseSet, ProblemSpec};

/// Largest `N` the full-state engine will allocate.
pub const FULL_ENGINE_MAX_N: u64 = 10_000_000;

/// Probabilities within this distance are treated as equal when locating peaks.
const PEAK_TIE_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Exact 2×2 evolution in the invariant plane.
    #[default]
    Reduced,
    /// `N`-dimensional statevector oracle.
    Full,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reduced" => Ok(Engine::Reduced),
            "full" => Ok(Engine::Full),
            other => Err(Error::InvalidArgument(format!("unknown engine `{other}`"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Reduced => "reduced",
            Engine::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepPoint {
    pub m: u64,
    pub p: f64,
}

/// `p(m)` on the integer grid `0..=m_max` together with its local maxima.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSeries {
    pub spec: ProblemSpec,
    pub phases: PhaseSet,
    pub engine: Engine,
    pub points: Vec<SweepPoint>,
    pub peaks: Vec<SweepPoint>,
}

pub(crate) fn series_for(phases: &PhaseSet, spec: &ProblemSpec, m_max: u64, engine: Engine) -> Result<Vec<f64>> {
    if m_max > MAX_ITERATIONS {
        return Err(Error::ResourceLimit {
            what: "m_max",
            limit: MAX_ITERATIONS,
            got: m_max,
        });
    }
    match engine {
        Engine::Reduced => Ok(probability_series(phases, spec, m_max)),
        Engine::Full => {
            let n = spec.n_total();
            if n > FULL_ENGINE_MAX_N {
                return Err(Error::ResourceLimit {
                    what: "N",
                    limit: FULL_ENGINE_MAX_N,
                    got: n,
                });
            }
            let marked: Vec<usize> = (0..spec.m_marked() as usize).collect();
            let run = run_full(n as usize, &marked, phases, m_max)?;
            Ok(run.into_iter().map(|(_, p)| p).collect())
        }
    }
}

pub fn sweep(phases: &PhaseSet, spec: &ProblemSpec, m_max: u64, engine: Engine) -> Result<SweepSeries> {
    if m_max < 1 {
        return Err(Error::InvalidArgument("sweep needs m_max >= 1".into()));
    }
    let points: Vec<SweepPoint> = series_for(phases, spec, m_max, engine)?
        .into_iter()
        .enumerate()
        .map(|(m, p)| SweepPoint { m: m as u64, p })
        .collect();
    let peaks = find_peaks(&points);
    Ok(SweepSeries {
        spec: *spec,
        phases: *phases,
        engine,
        points,
        peaks,
    })
}

/// Interior local maxima. A plateau of tied values counts once, at its
/// smallest `m`, and only if both sides are strictly lower.
pub fn find_peaks(points: &[SweepPoint]) -> Vec<SweepPoint> {
    let mut peaks = Vec::new();
    let len = points.len();
    let mut i = 1;
    while i + 1 < len {
        let level = points[i].p;
        let mut j = i;
        while j + 1 < len && (points[j + 1].p - level).abs() <= PEAK_TIE_TOL {
            j += 1;
        }
        let rises = points[i - 1].p < level - PEAK_TIE_TOL;
        let falls = j + 1 < len && points[j + 1].p < level - PEAK_TIE_TOL;
        if rises && falls {
            peaks.push(points[i]);
        }
        i = j + 1;
    }
    peaks
}

/// Smallest-`m` interior local maximum.
pub fn first_peak(series: &SweepSeries) -> Result<SweepPoint> {
    let pts = &series.points;
    if pts.len() < 3 {
        return Err(Error::TooFewPoints(pts.len()));
    }
    if let Some(peak) = series.peaks.first() {
        return Ok(*peak);
    }
    let level = pts[0].p;
    if pts.iter().all(|pt| (pt.p - level).abs() <= PEAK_TIE_TOL) {
        Err(Error::FlatSeries)
    } else {
        Err(Error::NoPeak)
    }
}
