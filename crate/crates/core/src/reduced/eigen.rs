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

use super::kernel::Kernel2;
use crate::matrix::{norm_sqr, Vec2};

/// `|(Tr G)² - 4 Det G|` below this marks the kernel as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Overlaps closer than this are treated as a tie when labeling branches.
const BRANCH_TIE_TOL: f64 = 1e-12;

/// Components smaller than this are skipped when fixing the gauge.
const GAUGE_EPS: f64 = 1e-14;

/// Sign in front of the square root in `½Tr G ± ½√((Tr G)² - 4 Det G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Root {
    Plus,
    Minus,
}

impl Root {
    fn sign(self) -> f64 {
        match self {
            Root::Plus => 1.0,
            Root::Minus => -1.0,
        }
    }

    fn other(self) -> Root {
        match self {
            Root::Plus => Root::Minus,
            Root::Minus => Root::Plus,
        }
    }
}

/// Eigen-decomposition of the kernel.
///
/// Index 1 always refers to the eigenvector with the larger overlap
/// `|⟨w̃|g⟩|` (ties go to the `+` root), so `g1_vec` is the one that
/// approaches `|w̃⟩` when the phases are mismatched.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenSystem {
    pub xi1: Complex64,
    pub xi2: Complex64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// `arg(ξ₁/ξ₂)` in `(-π, π]`.
    pub delta_lambda: f64,
    pub g1_vec: Vec2,
    pub g2_vec: Vec2,
    pub degenerate: bool,
    /// Which quadratic root `ξ₁` came from.
    pub g1_root: Root,
}

fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a <= -PI {
        a + TAU
    } else {
        a
    }
}

/// Unit norm, first non-negligible component real and positive.
fn canonical_gauge(v: &Vec2) -> Vec2 {
    let n = norm_sqr(v).sqrt();
    let v = [v[0] / n, v[1] / n];
    let lead = if v[0].norm() > GAUGE_EPS { v[0] } else { v[1] };
    let phase = lead.conj() / lead.norm();
    [v[0] * phase, v[1] * phase]
}

/// Null vector of `G - ξI`, taken from whichever row is better conditioned.
fn eigenvector_for(kernel: &Kernel2, xi: Complex64) -> Vec2 {
    let g = &kernel.g;
    let from_row0 = [g.at(0, 1), xi - g.at(0, 0)];
    let from_row1 = [xi - g.at(1, 1), g.at(1, 0)];
    if norm_sqr(&from_row0) >= norm_sqr(&from_row1) {
        canonical_gauge(&from_row0)
    } else {
        canonical_gauge(&from_row1)
    }
}

pub fn eigensystem(kernel: &Kernel2) -> EigenSystem {
    let disc = kernel.discriminant();
    let root = disc.sqrt();
    let xi_plus = (kernel.trace_g + root) / 2.0;
    let xi_minus = (kernel.trace_g - root) / 2.0;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);

    let (xi1, xi2, g1_vec, g2_vec, degenerate, g1_root) = if disc.norm() < DEGENERACY_TOL {
        (xi_plus, xi_minus, [one, zero], [zero, one], true, Root::Plus)
    } else {
        let v_plus = eigenvector_for(kernel, xi_plus);
        let v_minus = eigenvector_for(kernel, xi_minus);
        if v_minus[0].norm() > v_plus[0].norm() + BRANCH_TIE_TOL {
            (xi_minus, xi_plus, v_minus, v_plus, false, Root::Minus)
        } else {
            (xi_plus, xi_minus, v_plus, v_minus, false, Root::Plus)
        }
    };

    EigenSystem {
        xi1,
        xi2,
        lambda1: principal_arg(xi1),
        lambda2: principal_arg(xi2),
        delta_lambda: principal_arg(xi1 * xi2.conj()),
        g1_vec,
        g2_vec,
        degenerate,
        g1_root,
    }
}

impl EigenSystem {
    pub fn root_of(&self, index: usize) -> Root {
        match index {
            1 => self.g1_root,
            2 => self.g1_root.other(),
            _ => panic!("eigen index must be 1 or 2, got {index}"),
        }
    }
}

/// Closed-form eigenvector `[x, 1]` with
/// `x = -(k ± N√((Tr G)² - 4 Det G)) / (2α(γ-δ)√(M(N-M)))`.
///
/// The leading minus sign is required for `[x, 1]` to be an eigenvector of
/// `G = -G₂G₁`; without it the vector is not an eigenvector. The result is
/// `None` when the denominator is below `1e-9` in modulus.
pub fn closed_form_eigenvector(kernel: &Kernel2, root: Root) -> Option<Vec2> {
    let p = &kernel.phases;
    let n = kernel.spec.n_total() as f64;
    let m = kernel.spec.m_marked() as f64;
    let denom = p.alpha() * (p.gamma() - p.delta()) * (2.0 * (m * (n - m)).sqrt());
    if denom.norm() <= 1e-9 {
        return None;
    }
    let sqrt_disc = kernel.discriminant().sqrt();
    let x = -(kernel.k_scalar + sqrt_disc * (n * root.sign())) / denom;
    Some([x, Complex64::new(1.0, 0.0)])
}
