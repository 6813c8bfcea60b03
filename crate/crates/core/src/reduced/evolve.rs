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

use num_complex::Complex64;
use serde::Serialize;

use super::eigen::{eigensystem, EigenSystem};
use super::kernel::{build_kernel, Kernel2};
use super::phases::{PhaseSet, DEFAULT_MATCH_TOL};
use super::problem::{initial_reduced_state, ProblemSpec, ReducedState};
use crate::error::{Error, Result};
use crate::matrix::inner;

/// `Gᵐ|s⟩` by repeated application of the 2×2 kernel.
pub fn evolve_state(kernel: &Kernel2, m: u64) -> ReducedState {
    let mut v = initial_reduced_state(&kernel.spec).as_vec();
    for _ in 0..m {
        v = kernel.g.apply(&v);
    }
    ReducedState::from_vec(v)
}

/// `p(m) = |⟨w̃|Gᵐ|s⟩|²` for every `m` in `0..=m_max`.
///
/// `p(0)` is reported as exactly `M/N`.
pub fn probability_series(phases: &PhaseSet, spec: &ProblemSpec, m_max: u64) -> Vec<f64> {
    let kernel = build_kernel(phases, spec);
    let mut v = initial_reduced_state(spec).as_vec();
    let mut out = Vec::with_capacity(m_max as usize + 1);
    out.push(spec.marked_fraction());
    for _ in 0..m_max {
        v = kernel.g.apply(&v);
        out.push(v[0].norm_sqr().min(1.0));
    }
    out
}

/// Success probability after `m` iterations (iterative path).
pub fn evolve_probability(phases: &PhaseSet, spec: &ProblemSpec, m: u64) -> f64 {
    if m == 0 {
        return spec.marked_fraction();
    }
    let kernel = build_kernel(phases, spec);
    evolve_state(&kernel, m).marked_probability().min(1.0)
}

fn unit_power(z: Complex64, m: u64) -> Complex64 {
    let m = m as f64;
    Complex64::from_polar(z.norm().powf(m), z.arg() * m)
}

/// Success probability through the eigen-decomposition,
/// `⟨w̃|Gᵐ|s⟩ = ξ₂ᵐ(√(M/N) + ((ξ₁/ξ₂)ᵐ - 1)⟨w̃|g₁⟩⟨g₁|s⟩)`.
pub fn spectral_probability(kernel: &Kernel2, eig: &EigenSystem, m: u64) -> Result<f64> {
    if eig.degenerate {
        return Err(Error::Degenerate);
    }
    let [sw, sr] = kernel.spec.initial_components();
    let s = [Complex64::new(sw, 0.0), Complex64::new(sr, 0.0)];
    let product = eig.g1_vec[0] * inner(&eig.g1_vec, &s);
    let ratio = unit_power(eig.xi1 / eig.xi2, m);
    let amp = unit_power(eig.xi2, m) * (s[0] + (ratio - 1.0) * product);
    Ok(amp.norm_sqr().min(1.0))
}

/// Overlaps of the branch-labeled eigenvector `g₁` with the marked state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Alignment {
    /// `|⟨w̃|g₁⟩|`
    pub overlap_w: f64,
    /// `|⟨w̃|g₁⟩⟨g₁|s⟩|`
    pub product_overlap: f64,
}

pub fn g1_alignment(phases: &PhaseSet, spec: &ProblemSpec) -> Result<Alignment> {
    let kernel = build_kernel(phases, spec);
    let eig = eigensystem(&kernel);
    if eig.degenerate {
        return Err(Error::Degenerate);
    }
    let [sw, sr] = spec.initial_components();
    let s = [Complex64::new(sw, 0.0), Complex64::new(sr, 0.0)];
    let w = eig.g1_vec[0];
    Ok(Alignment {
        overlap_w: w.norm(),
        product_overlap: (w * inner(&eig.g1_vec, &s)).norm(),
    })
}

/// Real-valued iteration count `π/|Δλ|` of the first probability maximum.
///
/// Only defined for matched, non-degenerate kernels.
pub fn predicted_peak_m(phases: &PhaseSet, spec: &ProblemSpec) -> Result<f64> {
    if !phases.is_matched(DEFAULT_MATCH_TOL) {
        return Err(Error::Unmatched {
            defect: phases.matching_defect(),
        });
    }
    let eig = eigensystem(&build_kernel(phases, spec));
    if eig.degenerate || eig.delta_lambda == 0.0 {
        return Err(Error::Degenerate);
    }
    Ok(PI / eig.delta_lambda.abs())
}
