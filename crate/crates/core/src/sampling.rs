// SPDX-License-Identifier: MIT OR Apache-2.0

//! Random sample generation for audit sweeps.

use rand::Rng;

use crate::sample::PositiveSample;

/// Shape of randomly drawn samples: size range, log10 range of the values,
/// and whether weights are drawn (log-uniform over `[0.1, 10]`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleShape {
    pub min_len: usize,
    pub max_len: usize,
    pub log10_lo: f64,
    pub log10_hi: f64,
    pub weighted: bool,
}

impl SampleShape {
    /// `n` in `[2, 64]`, values log-uniform over `[1e-6, 1e6]`, random weights.
    pub const AUDIT: SampleShape = SampleShape {
        min_len: 2,
        max_len: 64,
        log10_lo: -6.0,
        log10_hi: 6.0,
        weighted: true,
    };

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> PositiveSample {
        loop {
            let n = rng.random_range(self.min_len..=self.max_len);
            let values: Vec<f64> = (0..n)
                .map(|_| 10f64.powf(rng.random_range(self.log10_lo..=self.log10_hi)))
                .collect();
            let sample = if self.weighted {
                let weights = (0..n)
                    .map(|_| 10f64.powf(rng.random_range(-1.0..=1.0)))
                    .collect();
                PositiveSample::weighted(values, weights)
            } else {
                PositiveSample::new(values)
            }
            .expect("drawn values are positive and finite");
            if n == 1 || !sample.is_uniform() {
                return sample;
            }
        }
    }
}
