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

//! Numerical laboratory for the four-phase generalized Grover kernel.
//!
//! The search problem with `M` marked items out of `N` collapses onto the
//! two-dimensional subspace spanned by the uniform superpositions of the
//! marked items (`|w̃⟩`) and of the rest (`|r̃⟩`). Inside that plane one
//! iteration is the 2×2 unitary
//!
//! ```text
//! G = -G₂·G₁,   G₁ = diag(α, β),   G₂ = γ|s⟩⟨s| + δ(I - |s⟩⟨s|)
//! ```
//!
//! with `α = e^{iθ₁}`, `β = e^{iθ₂}`, `γ = e^{iφ₁}`, `δ = e^{iφ₂}`.
//!
//! * [`reduced`] builds the kernel, its closed-form eigensystem and the
//!   phase matching defect `|αδ - βγ|`, and evolves the success probability.
//! * [`fullstate`] simulates the same dynamics on the full `N`-dimensional
//!   statevector and serves as an independent oracle for the reduced model.
//! * [`analysis`] runs sweeps, peak finding, figure presets and the scaling
//!   and mismatch experiments on top of both engines.

pub mod analysis;
pub mod error;
pub mod fullstate;
pub mod matrix;
pub mod reduced;

pub use error::{Error, Result};
pub use num_complex::Complex64;
