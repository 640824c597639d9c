// SPDX-License-Identifier: MIT OR Apache-2.0

//! Deterministic inputs shared by the benchmarks.

use gini_core::PositiveSample;

/// `n` values log-spaced over `[1e-6, 1e6]` with alternating weights.
pub fn log_spaced(n: usize) -> PositiveSample {
    let values = (0..n)
        .map(|i| 10f64.powf(-6.0 + 12.0 * i as f64 / (n.max(2) - 1) as f64))
        .collect();
    let weights = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { 2.5 }).collect();
    PositiveSample::weighted(values, weights).expect("valid sample")
}
