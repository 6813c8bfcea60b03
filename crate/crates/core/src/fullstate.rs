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

//! Brute-force `N`-dimensional statevector simulation of the kernel.
//!
//! Each step costs `O(N)`: a selective phase over the marked mask followed
//! by the rank-1 diffusion update `ψ ↦ δψ + (γ-δ)⟨s|ψ⟩|s⟩` with the
//! analytically known uniform `|s⟩`, then a global sign flip. No dense
//! `N×N` operator is ever formed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::reduced::PhaseSet;

/// Largest iteration count accepted by [`run_full`].
pub const MAX_ITERATIONS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    amplitudes: Vec<Complex64>,
    marked: Vec<usize>,
    mask: Vec<bool>,
}

impl FullState {
    /// Uniform superposition `1/√N Σ|wᵢ⟩` with the given marked indices.
    pub fn uniform(n: usize, marked: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &i in marked {
            if i >= n {
                return Err(Error::InvalidMarkedSet(format!("index {i} out of range for N={n}")));
            }
            mask[i] = true;
        }
        let marked: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
        if marked.is_empty() {
            return Err(Error::InvalidMarkedSet("marked set is empty".into()));
        }
        if marked.len() == n {
            return Err(Error::InvalidMarkedSet("every index is marked".into()));
        }
        let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Ok(FullState {
            amplitudes: vec![amp; n],
            marked,
            mask,
        })
    }

    /// Uniform state with indices `0..m` marked.
    pub fn first_marked(n: usize, m: usize) -> Result<Self> {
        let marked: Vec<usize> = (0..m.min(n)).collect();
        if m > n {
            return Err(Error::InvalidMarkedSet(format!("M={m} exceeds N={n}")));
        }
        FullState::uniform(n, &marked)
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Sorted, deduplicated marked indices.
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `Σ_{i∈marked} |ψᵢ|²`
    pub fn marked_probability(&self) -> f64 {
        self.marked
            .iter()
            .map(|&i| self.amplitudes[i].norm_sqr())
            .sum::<f64>()
            .min(1.0)
    }

    /// One application of `G = -G₂G₁`, in place.
    pub fn apply_kernel(&mut self, phases: &PhaseSet) {
        let (alpha, beta) = (phases.alpha(), phases.beta());
        let (gamma, delta) = (phases.gamma(), phases.delta());
        let mut sum = Complex64::new(0.0, 0.0);
        for (a, &is_marked) in self.amplitudes.iter_mut().zip(&self.mask) {
            *a *= if is_marked { alpha } else { beta };
            sum += *a;
        }
        // ⟨s|ψ⟩|s⟩ has every component equal to the mean amplitude
        let shift = (gamma - delta) * (sum / self.amplitudes.len() as f64);
        for a in self.amplitudes.iter_mut() {
            *a = -(delta * *a + shift);
        }
    }

    pub fn applied(mut self, phases: &PhaseSet) -> Self {
        self.apply_kernel(phases);
        self
    }
}

pub fn build_full_initial(n: usize, marked: &[usize]) -> Result<FullState> {
    FullState::uniform(n, marked)
}

pub fn apply_kernel_full(state: FullState, phases: &PhaseSet) -> FullState {
    state.applied(phases)
}

pub fn marked_probability(state: &FullState) -> f64 {
    state.marked_probability()
}

/// `(m, p(m))` for every `m` in `0..=m_max`; `p(0)` is exactly `|marked|/N`.
pub fn run_full(n: usize, marked: &[usize], phases: &PhaseSet, m_max: u64) -> Result<Vec<(u64, f64)>> {
    if m_max > MAX_ITERATIONS {
        return Err(Error::ResourceLimit {
            what: "m_max",
            limit: MAX_ITERATIONS,
            got: m_max,
        });
    }
    let mut state = FullState::uniform(n, marked)?;
    let mut out = Vec::with_capacity(m_max as usize + 1);
    out.push((0, state.marked().len() as f64 / n as f64));
    for m in 1..=m_max {
        state.apply_kernel(phases);
        out.push((m, state.marked_probability()));
    }
    Ok(out)
}
