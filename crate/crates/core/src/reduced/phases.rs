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

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default absolute tolerance on `|αδ - βγ|` for [`PhaseSet::is_matched`].
pub const DEFAULT_MATCH_TOL: f64 = 1e-9;

/// The four rotation phases of the generalized kernel.
///
/// `theta1`/`theta2` rotate the marked state and its complement (`α`, `β`),
/// `phi1`/`phi2` rotate the initial state and its complement (`γ`, `δ`).
/// Angles are stored reduced into `[0, 2π)` and the exponentials are always
/// derived from the stored angles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseSet {
    theta1: f64,
    theta2: f64,
    phi1: f64,
    phi2: f64,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
}

fn reduce_angle(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFiniteAngle { name, value });
    }
    let r = value.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly 2π
    Ok(if r >= TAU { 0.0 } else { r })
}

impl PhaseSet {
    pub fn new(theta1: f64, theta2: f64, phi1: f64, phi2: f64) -> Result<Self> {
        let theta1 = reduce_angle("theta1", theta1)?;
        let theta2 = reduce_angle("theta2", theta2)?;
        let phi1 = reduce_angle("phi1", phi1)?;
        let phi2 = reduce_angle("phi2", phi2)?;
        Ok(PhaseSet {
            theta1,
            theta2,
            phi1,
            phi2,
            alpha: Complex64::from_polar(1.0, theta1),
            beta: Complex64::from_polar(1.0, theta2),
            gamma: Complex64::from_polar(1.0, phi1),
            delta: Complex64::from_polar(1.0, phi2),
        })
    }

    /// Builds a phase set from `[θ₁, θ₂, φ₁, φ₂]`.
    pub fn from_angles(angles: [f64; 4]) -> Result<Self> {
        PhaseSet::new(angles[0], angles[1], angles[2], angles[3])
    }

    /// Original Grover choice: `α = γ = -1`, `β = δ = 1`.
    pub fn grover() -> Self {
        PhaseSet::new(PI, 0.0, PI, 0.0).expect("finite")
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn theta2(&self) -> f64 {
        self.theta2
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        self.phi2
    }

    pub fn angles(&self) -> [f64; 4] {
        [self.theta1, self.theta2, self.phi1, self.phi2]
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// `|αδ - βγ|`; zero exactly on the matching condition `α/β = γ/δ`.
    pub fn matching_defect(&self) -> f64 {
        (self.alpha * self.delta - self.beta * self.gamma).norm()
    }

    pub fn is_matched(&self, tol: f64) -> bool {
        self.matching_defect() < tol
    }

    /// Angle form of the matching condition: `(θ₁-θ₂) - (φ₁-φ₂)` wrapped
    /// into `(-π, π]`.
    pub fn matching_angle_gap(&self) -> f64 {
        let gap = ((self.theta1 - self.theta2) - (self.phi1 - self.phi2)).rem_euclid(TAU);
        if gap > PI {
            gap - TAU
        } else {
            gap
        }
    }

    /// Shifts `θ₁, θ₂` by `a` and `φ₁, φ₂` by `b`. The kernel only picks up
    /// the scalar `e^{i(a+b)}`.
    pub fn shifted(&self, a: f64, b: f64) -> Result<Self> {
        PhaseSet::new(self.theta1 + a, self.theta2 + a, self.phi1 + b, self.phi2 + b)
    }
}

pub fn matching_defect(phases: &PhaseSet) -> f64 {
    phases.matching_defect()
}
