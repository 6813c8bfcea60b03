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

//! Experiments on top of the reduced model and the full-state oracle.

mod experiments;
mod presets;
mod scan;
mod sweep;

pub use experiments::{
    cross_validate, decay_within_bound, mismatch_decay_experiment, scaling_experiment, CrossValidation, DecayRow,
    ScalingRow, DECAY_SLACK, DEFAULT_CROSS_TOL, MISMATCH_MIN_DEFECT,
};
pub use presets::{figure_preset, FigureId, FigurePreset};
pub use scan::{phase_scan, scan_axis, ScanCell};
pub use sweep::{find_peaks, first_peak, sweep, Engine, SweepPoint, SweepSeries, FULL_ENGINE_MAX_N};
