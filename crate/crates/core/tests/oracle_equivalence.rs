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

//! The full statevector oracle against the reduced 2×2 model.

use grover_phase::fullstate::{run_full, FullState};
use grover_phase::reduced::{probability_series, PhaseSet, ProblemSpec};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn phases() -> impl Strategy<Value = PhaseSet> {
    let a = 0.0..std::f64::consts::TAU;
    (a.clone(), a.clone(), a.clone(), a).prop_map(|(a, b, c, d)| PhaseSet::new(a, b, c, d).unwrap())
}

fn random_marked(n: usize, m: usize, seed: u64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    idx.truncate(m);
    idx
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn full_and_reduced_agree(
        p in phases(),
        n in 2usize..=4096,
        frac in 0.0..1.0f64,
        seed in any::<u64>(),
        m_max in 0u64..=500,
    ) {
        let m = ((frac * (n - 1) as f64) as usize).clamp(1, n - 1);
        let marked = random_marked(n, m, seed);
        let full = run_full(n, &marked, &p, m_max).unwrap();
        let reduced = probability_series(&p, &ProblemSpec::new(n as u64, m as u64).unwrap(), m_max);
        for ((_, pf), pr) in full.iter().zip(&reduced) {
            prop_assert!((pf - pr).abs() <= 1e-10);
        }
    }

    #[test]
    fn marked_set_choice_is_irrelevant(p in phases(), n in 2usize..=512, seed in any::<u64>()) {
        let m = (n / 3).max(1);
        let first: Vec<usize> = (0..m).collect();
        let scattered = random_marked(n, m, seed);
        let a = run_full(n, &first, &p, 100).unwrap();
        let b = run_full(n, &scattered, &p, 100).unwrap();
        for ((_, x), (_, y)) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }
}

#[test]
fn full_state_norm_over_long_runs() {
    let p = PhaseSet::new(0.4, 2.9, 1.1, 5.0).unwrap();
    let mut s = FullState::first_marked(256, 5).unwrap();
    for step in 1..=10_000 {
        s.apply_kernel(&p);
        if step % 500 == 0 {
            assert!((s.norm_sqr() - 1.0).abs() < 1e-10, "step {step}");
        }
    }
}

#[test]
fn every_step_matches_reduced_prediction() {
    let p = PhaseSet::new(1.0, 3.0, 0.5, 4.5).unwrap();
    let spec = ProblemSpec::new(300, 7).unwrap();
    let mut s = FullState::uniform(300, &random_marked(300, 7, 11)).unwrap();
    let reduced = probability_series(&p, &spec, 50);
    for want in &reduced[1..] {
        s.apply_kernel(&p);
        assert!((s.marked_probability() - want).abs() < 1e-12);
    }
}
