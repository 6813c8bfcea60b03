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

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{norm_sqr, Vec2};

/// Database size `N` with `M` marked items, `1 <= M <= N-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ProblemSpec {
    #[serde(rename = "n")]
    n_total: u64,
    #[serde(rename = "m")]
    m_marked: u64,
}

impl ProblemSpec {
    pub fn new(n_total: u64, m_marked: u64) -> Result<Self> {
        if m_marked == 0 || m_marked >= n_total {
            return Err(Error::InvalidProblem {
                n: n_total,
                m: m_marked,
            });
        }
        Ok(ProblemSpec { n_total, m_marked })
    }

    pub fn n_total(&self) -> u64 {
        self.n_total
    }

    pub fn m_marked(&self) -> u64 {
        self.m_marked
    }

    /// `M/N`, the success probability before any iteration.
    pub fn marked_fraction(&self) -> f64 {
        self.m_marked as f64 / self.n_total as f64
    }

    /// `|s⟩` in the `{|w̃⟩, |r̃⟩}` basis.
    pub fn initial_components(&self) -> [f64; 2] {
        let n = self.n_total as f64;
        let m = self.m_marked as f64;
        [(m / n).sqrt(), ((n - m) / n).sqrt()]
    }
}

/// Amplitudes on `{|w̃⟩, |r̃⟩}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedState {
    pub a_w: Complex64,
    pub a_r: Complex64,
}

impl ReducedState {
    pub fn as_vec(&self) -> Vec2 {
        [self.a_w, self.a_r]
    }

    pub fn from_vec(v: Vec2) -> Self {
        ReducedState { a_w: v[0], a_r: v[1] }
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.as_vec())
    }

    /// `|⟨w̃|ψ⟩|²`.
    pub fn marked_probability(&self) -> f64 {
        self.a_w.norm_sqr()
    }
}

pub fn initial_reduced_state(spec: &ProblemSpec) -> ReducedState {
    let [w, r] = spec.initial_components();
    ReducedState {
        a_w: Complex64::new(w, 0.0),
        a_r: Complex64::new(r, 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_subspaces() {
        assert!(ProblemSpec::new(10, 0).is_err());
        assert!(ProblemSpec::new(10, 10).is_err());
        assert!(ProblemSpec::new(10, 11).is_err());
        assert!(ProblemSpec::new(1, 1).is_err());
        assert!(ProblemSpec::new(0, 0).is_err());
        assert!(ProblemSpec::new(2, 1).is_ok());
    }

    #[test]
    fn initial_states() {
        let s = initial_reduced_state(&ProblemSpec::new(4, 1).unwrap());
        assert_eq!(s.a_w, Complex64::new(0.5, 0.0));
        assert!((s.a_r.re - 3f64.sqrt() / 2.0).abs() < 1e-15);

        let s = initial_reduced_state(&ProblemSpec::new(1000, 10).unwrap());
        assert!((s.a_w.re - 0.1).abs() < 1e-15);
        assert!((s.a_r.re - 0.99f64.sqrt()).abs() < 1e-15);

        let s = initial_reduced_state(&ProblemSpec::new(2, 1).unwrap());
        assert!((s.a_w.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.a_r.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn initial_state_is_normalized() {
        for n in 2..300u64 {
            for m in [1, n / 3, n - 1] {
                if let Ok(spec) = ProblemSpec::new(n, m) {
                    let s = initial_reduced_state(&spec);
                    assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
                    assert!(s.a_w.re >= 0.0 && s.a_r.re >= 0.0);
                }
            }
        }
    }
}
