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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("phase `{name}` must be finite, got {value}")]
    NonFiniteAngle { name: &'static str, value: f64 },

    #[error("invalid problem size N={n}, M={m}: need 1 <= M <= N-1")]
    InvalidProblem { n: u64, m: u64 },

    #[error("invalid marked set: {0}")]
    InvalidMarkedSet(String),

    #[error("degenerate kernel: no oscillation to predict")]
    Degenerate,

    #[error("phases violate the matching condition (defect {defect:.3e}): no oscillation to predict")]
    Unmatched { defect: f64 },

    #[error("phases are not sufficiently mismatched (defect {defect:.3e}, need >= {required})")]
    NotMismatched { defect: f64, required: f64 },

    #[error("{what} = {got} exceeds the limit {limit}")]
    ResourceLimit { what: &'static str, limit: u64, got: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series has {0} points, at least 3 are needed to locate an interior peak")]
    TooFewPoints(usize),

    #[error("no interior peak in the series")]
    NoPeak,

    #[error("series is flat: no interior peak")]
    FlatSeries,

    #[error("unknown figure id `{0}` (expected fig1, fig2 or fig3)")]
    UnknownFigure(String),
}

impl Error {
    /// Whether the error comes from a size guard rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
