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

use super::phases::PhaseSet;
use super::problem::ProblemSpec;
use crate::matrix::Mat2;

/// The kernel `G = -G₂G₁` restricted to `span{|w̃⟩, |r̃⟩}`.
///
/// `trace_g` and `det_g` are taken from the assembled matrix. The closed
/// forms live in [`trace_corrected_closed_form`] and
/// [`trace_printed_closed_form`] and are only used as cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Kernel2 {
    #[serde(skip)]
    pub phases: PhaseSet,
    #[serde(skip)]
    pub spec: ProblemSpec,
    pub g1: Mat2,
    pub g2: Mat2,
    pub g: Mat2,
    pub trace_g: Complex64,
    pub det_g: Complex64,
    /// `k = N(γβ - αδ) - M(α+β)(γ-δ)`; equals `N·(G₁₁ - G₂₂)`.
    pub k_scalar: Complex64,
}

pub fn build_kernel(phases: &PhaseSet, spec: &ProblemSpec) -> Kernel2 {
    let (alpha, beta, gamma, delta) = (phases.alpha(), phases.beta(), phases.gamma(), phases.delta());
    let n = spec.n_total() as f64;
    let m = spec.m_marked() as f64;
    let frac = m / n;
    let cross = (m * (n - m)).sqrt() / n;
    let gd = gamma - delta;

    let g1 = Mat2::diag(alpha, beta);
    let g2 = Mat2::new(delta + gd * frac, gd * cross, gd * cross, gamma - gd * frac);
    let g = -(g2 * g1);
    let k_scalar = (gamma * beta - alpha * delta) * n - (alpha + beta) * gd * m;

    Kernel2 {
        phases: *phases,
        spec: *spec,
        g1,
        g2,
        g,
        trace_g: g.trace(),
        det_g: g.det(),
        k_scalar,
    }
}

/// `Tr G = -[M(α-β)(γ-δ) + N(αδ + βγ)]/N`, the trace obtained by expanding
/// `-G₂G₁` directly.
pub fn trace_corrected_closed_form(phases: &PhaseSet, spec: &ProblemSpec) -> Complex64 {
    let (a, b, c, d) = (phases.alpha(), phases.beta(), phases.gamma(), phases.delta());
    let n = spec.n_total() as f64;
    let m = spec.m_marked() as f64;
    -((a - b) * (c - d) * m + (a * d + b * c) * n) / n
}

/// Variant of the trace closed form with `N(γβ - αδ)` in place of
/// `N(αδ + βγ)`. It does not match the matrix and is only reported next to
/// the computed trace.
pub fn trace_printed_closed_form(phases: &PhaseSet, spec: &ProblemSpec) -> Complex64 {
    let (a, b, c, d) = (phases.alpha(), phases.beta(), phases.gamma(), phases.delta());
    let n = spec.n_total() as f64;
    let m = spec.m_marked() as f64;
    -((a - b) * (c - d) * m + (c * b - a * d) * n) / n
}

/// Computed trace next to both closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceReconciliation {
    pub computed: Complex64,
    pub printed_closed_form: Complex64,
    pub corrected_closed_form: Complex64,
    pub printed_abs_error: f64,
    pub corrected_abs_error: f64,
}

impl Kernel2 {
    pub fn trace_reconciliation(&self) -> TraceReconciliation {
        let printed = trace_printed_closed_form(&self.phases, &self.spec);
        let corrected = trace_corrected_closed_form(&self.phases, &self.spec);
        TraceReconciliation {
            computed: self.trace_g,
            printed_closed_form: printed,
            corrected_closed_form: corrected,
            printed_abs_error: (printed - self.trace_g).norm(),
            corrected_abs_error: (corrected - self.trace_g).norm(),
        }
    }

    /// `(Tr G)² - 4 Det G`, the squared eigenvalue separation.
    pub fn discriminant(&self) -> Complex64 {
        self.trace_g * self.trace_g - self.det_g * 4.0
    }

    /// `αβγδ`.
    pub fn phase_product(&self) -> Complex64 {
        let p = &self.phases;
        p.alpha() * p.beta() * p.gamma() * p.delta()
    }

    /// Largest entrywise deviation of `G†G` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        (self.g.adjoint() * self.g).max_abs_diff(&Mat2::identity())
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn spec(n: u64, m: u64) -> ProblemSpec {
        ProblemSpec::new(n, m).unwrap()
    }

    #[test]
    fn identity_phases_give_minus_identity() {
        let p = PhaseSet::new(0.0, 0.0, 0.0, 0.0).unwrap();
        for (n, m) in [(2, 1), (100, 7), (1000, 10)] {
            let k = build_kernel(&p, &spec(n, m));
            assert!(k.g.max_abs_diff(&-Mat2::identity()) < 1e-15);
        }
    }

    #[test]
    fn grover_n4_matches_hand_product() {
        // -(I - 2|s⟩⟨s|)·diag(-1, 1), s = (1/2, √3/2)
        let h = 3f64.sqrt() / 2.0;
        let expected = Mat2::new(
            Complex64::new(0.5, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(-h, 0.0),
            Complex64::new(0.5, 0.0),
        );
        let k = build_kernel(&PhaseSet::grover(), &spec(4, 1));
        assert!(k.g.max_abs_diff(&expected) < 1e-15, "{:?}", k.g);
    }

    #[test]
    fn fig1_determinant_is_phase_product() {
        let p = PhaseSet::new(PI, PI / 2.0, PI, PI / 2.0 + 3.0).unwrap();
        let k = build_kernel(&p, &spec(1000, 10));
        assert!((k.det_g - k.phase_product()).norm() < 1e-12);
        assert!((k.det_g.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn g2_is_phased_projector_sum() {
        // γ|s⟩⟨s| + δ(I - |s⟩⟨s|) built from the outer product
        let p = PhaseSet::new(0.4, 1.1, 2.9, 5.0).unwrap();
        let sp = spec(37, 5);
        let [sw, sr] = sp.initial_components();
        let proj = Mat2::new(
            Complex64::new(sw * sw, 0.0),
            Complex64::new(sw * sr, 0.0),
            Complex64::new(sr * sw, 0.0),
            Complex64::new(sr * sr, 0.0),
        );
        let ident = Mat2::identity();
        let off = Mat2::new(
            ident.at(0, 0) - proj.at(0, 0),
            -proj.at(0, 1),
            -proj.at(1, 0),
            ident.at(1, 1) - proj.at(1, 1),
        );
        let g2 = Mat2::new(
            proj.at(0, 0) * p.gamma() + off.at(0, 0) * p.delta(),
            proj.at(0, 1) * p.gamma() + off.at(0, 1) * p.delta(),
            proj.at(1, 0) * p.gamma() + off.at(1, 0) * p.delta(),
            proj.at(1, 1) * p.gamma() + off.at(1, 1) * p.delta(),
        );
        let k = build_kernel(&p, &sp);
        assert!(k.g2.max_abs_diff(&g2) < 1e-14);
    }

    #[test]
    fn k_is_scaled_diagonal_difference() {
        let p = PhaseSet::new(0.3, 2.2, 4.4, 1.0).unwrap();
        let sp = spec(500, 12);
        let k = build_kernel(&p, &sp);
        let diff = (k.g.at(0, 0) - k.g.at(1, 1)) * 500.0;
        assert!((diff - k.k_scalar).norm() < 1e-11);
    }

    #[test]
    fn printed_trace_form_disagrees_with_matrix() {
        let p = PhaseSet::new(1.7 * PI, 1.6 * PI, PI, 0.9 * PI).unwrap();
        let rec = build_kernel(&p, &spec(1000, 10)).trace_reconciliation();
        assert!(rec.corrected_abs_error < 1e-12);
        assert!(rec.printed_abs_error > 1e-6);
    }
}
