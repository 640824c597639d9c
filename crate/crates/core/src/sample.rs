// SPDX-License-Identifier: MIT OR Apache-2.0

//! Validated inputs of every mean: positive weighted samples and Gini
//! exponent pairs.

use crate::error::{Error, Result};

/// Positive values with positive weights.
///
/// Natural logarithms of values and weights are cached at construction; every
/// kernel works on them rather than on the linear values.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveSample {
    values: Vec<f64>,
    weights: Vec<f64>,
    log_values: Vec<f64>,
    log_weights: Vec<f64>,
    min: f64,
    max: f64,
    uniform: bool,
    unit_weights: bool,
}

impl PositiveSample {
    /// Unweighted sample (all weights 1).
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let weights = vec![1.0; values.len()];
        let mut s = Self::weighted(values, weights)?;
        s.unit_weights = true;
        Ok(s)
    }

    pub fn weighted(values: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if values.len() != weights.len() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                weights: weights.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidValue { index, value });
            }
        }
        for (index, &value) in weights.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let unit_weights = weights.iter().all(|&w| w == 1.0);
        Ok(Self {
            log_values: values.iter().map(|v| v.ln()).collect(),
            log_weights: weights.iter().map(|w| w.ln()).collect(),
            uniform: min == max,
            values,
            weights,
            min,
            max,
            unit_weights,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn log_values(&self) -> &[f64] {
        &self.log_values
    }

    pub fn log_weights(&self) -> &[f64] {
        &self.log_weights
    }

    /// True iff every value is identical.
    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    /// True when the sample was built without explicit weights, or all
    /// weights are exactly 1.
    pub fn has_unit_weights(&self) -> bool {
        self.unit_weights
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    /// Same values, every value multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::weighted(
            self.values.iter().map(|v| v * factor).collect(),
            self.weights.clone(),
        )
    }
}

/// Relative width of the band around `p == q` in which the identical-parameter
/// form of the Gini mean replaces the quotient form.
pub const BRANCH_THRESHOLD: f64 = 1e-8;

/// The two exponents of a Gini mean, stored with `p >= q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPair {
    p: f64,
    q: f64,
}

impl ExponentPair {
    /// Builds the pair, swapping so that `p >= q`. Gini means are symmetric in
    /// their exponents, so the swap never changes a result.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::domain("p", p, "finite real"));
        }
        if !q.is_finite() {
            return Err(Error::domain("q", q, "finite real"));
        }
        Ok(if p >= q {
            Self { p, q }
        } else {
            Self { p: q, q: p }
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn gap(&self) -> f64 {
        self.p - self.q
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.p + self.q)
    }

    /// Whether the pair is close enough to the diagonal to be evaluated in
    /// the identical-parameter form at its midpoint.
    pub fn is_near_diagonal(&self) -> bool {
        self.gap() <= BRANCH_THRESHOLD * (1.0 + self.p.abs().max(self.q.abs()))
    }

    /// Componentwise order used by the monotonicity theorem.
    pub fn precedes(&self, other: &ExponentPair) -> bool {
        other.p >= self.p && other.q >= self.q && (other.p > self.p || other.q > self.q)
    }
}
