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

//! Exact two-dimensional model of the generalized Grover iteration.

mod eigen;
mod evolve;
mod kernel;
mod phases;
mod problem;

pub use eigen::{closed_form_eigenvector, eigensystem, EigenSystem, Root, DEGENERACY_TOL};
pub use evolve::{
    evolve_probability, evolve_state, g1_alignment, predicted_peak_m, probability_series, spectral_probability,
    Alignment,
};
pub use kernel::{build_kernel, trace_corrected_closed_form, trace_printed_closed_form, Kernel2, TraceReconciliation};
pub use phases::{matching_defect, PhaseSet, DEFAULT_MATCH_TOL};
pub use problem::{initial_reduced_state, ProblemSpec, ReducedState};
