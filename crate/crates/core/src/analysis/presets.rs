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

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reduced::{PhaseSet, ProblemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
}

impl FigureId {
    pub const ALL: [FigureId; 3] = [FigureId::Fig1, FigureId::Fig2, FigureId::Fig3];
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(FigureId::Fig1),
            "fig2" => Ok(FigureId::Fig2),
            "fig3" => Ok(FigureId::Fig3),
            other => Err(Error::UnknownFigure(other.to_string())),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
        })
    }
}

/// Parameters of one of the three reference `p(m)` plots.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FigurePreset {
    pub id: FigureId,
    pub spec: ProblemSpec,
    pub phases: PhaseSet,
    pub m_max: u64,
}

/// All three presets use `N = 1000`, `M = 10`.
///
/// * fig1: `α = γ = e^{iπ}`, `β = e^{iπ/2}`, `δ = i·e^{3i} = e^{i(π/2+3)}` (mismatched)
/// * fig2: `α = e^{i1.7π}`, `β = e^{i1.6π}`, `γ = e^{iπ}`, `δ = e^{i0.9π}` (matched, gap 0.1π)
/// * fig3: `α = e^{i1.7π}`, `β = e^{i0.7π}`, `γ = e^{i1.9π}`, `δ = e^{i0.9π}` (matched, gap π)
pub fn figure_preset(id: FigureId) -> FigurePreset {
    let (angles, m_max) = match id {
        FigureId::Fig1 => ([PI, PI / 2.0, PI, PI / 2.0 + 3.0], 200),
        FigureId::Fig2 => ([1.7 * PI, 1.6 * PI, PI, 0.9 * PI], 120),
        FigureId::Fig3 => ([1.7 * PI, 0.7 * PI, 1.9 * PI, 0.9 * PI], 25),
    };
    FigurePreset {
        id,
        spec: ProblemSpec::new(1000, 10).expect("valid preset size"),
        phases: PhaseSet::from_angles(angles).expect("finite preset angles"),
        m_max,
    }
}
