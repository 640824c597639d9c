// SPDX-License-Identifier: MIT OR Apache-2.0

//! Exponentially tilted view of a sample.
//!
//! For an exponent `v` the terms `t_i = v ln a_i + ln w_i` define the power sum
//! `S_v = sum exp(t_i)` and the probability weights `pi_i = exp(t_i) / S_v`.
//! Every quantity the means need (log power sums, logarithmic moments, the
//! variance of `ln a` and the log of a Gini mean) is a functional of this
//! distribution, so it is computed once per exponent with the largest term
//! shifted to zero. Terms are accumulated in ascending order of `t_i`
//! (ties broken by `ln a_i`, then `ln w_i`), which makes every result
//! independent of the input order.

use crate::sample::PositiveSample;

/// Largest `|delta * (ln a_i - mean)|` for which the secant is evaluated with
/// `expm1`/`ln_1p` in the linear domain of the tilted weights.
const LINEAR_TILT_LIMIT: f64 = 500.0;

#[derive(Debug, Clone)]
pub(crate) struct Tilt {
    /// `ln a_i` in accumulation order.
    log_values: Vec<f64>,
    /// `ln pi_i`, same order.
    log_probs: Vec<f64>,
    probs: Vec<f64>,
    log_sum: f64,
    /// `ln a` of the heaviest term; deviations are measured from here.
    anchor: f64,
    /// `sum pi_i (ln a_i - anchor)`.
    offset: f64,
}

pub(crate) fn log_sum_exp(terms: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = terms.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY || max.is_infinite() {
        return max;
    }
    let mut sorted: Vec<f64> = terms.map(|t| (t - max).exp()).collect();
    sorted.sort_by(f64::total_cmp);
    max + sorted.iter().sum::<f64>().ln()
}

impl Tilt {
    pub(crate) fn new(sample: &PositiveSample, exponent: f64) -> Self {
        let xs = sample.log_values();
        let lws = sample.log_weights();
        let mut order: Vec<(f64, f64, f64)> = xs
            .iter()
            .zip(lws)
            .map(|(&x, &lw)| (exponent * x + lw, x, lw))
            .collect();
        order.sort_by(|a, b| {
            a.0.total_cmp(&b.0)
                .then(a.1.total_cmp(&b.1))
                .then(a.2.total_cmp(&b.2))
        });

        let shift = order.last().map(|t| t.0).unwrap_or(0.0);
        let scaled: Vec<f64> = order.iter().map(|t| (t.0 - shift).exp()).collect();
        let total: f64 = scaled.iter().sum();
        let log_total = total.ln();

        let log_values: Vec<f64> = order.iter().map(|t| t.1).collect();
        let log_probs: Vec<f64> = order.iter().map(|t| t.0 - shift - log_total).collect();
        let probs: Vec<f64> = scaled.iter().map(|e| e / total).collect();
        let anchor = *log_values.last().expect("sample is nonempty");
        let offset = probs
            .iter()
            .zip(&log_values)
            .map(|(pi, x)| pi * (x - anchor))
            .sum();

        Self {
            log_values,
            log_probs,
            probs,
            log_sum: shift + log_total,
            anchor,
            offset,
        }
    }

    /// `ln S_v`.
    pub(crate) fn log_sum(&self) -> f64 {
        self.log_sum
    }

    /// Tilted mean of `ln a`, i.e. `f'(v)` for `f = ln S`.
    pub(crate) fn mean(&self) -> f64 {
        self.anchor + self.offset
    }

    fn deviations(&self) -> impl Iterator<Item = f64> + Clone + '_ {
        self.log_values
            .iter()
            .map(move |x| (x - self.anchor) - self.offset)
    }

    /// Natural log of the tilted variance of `ln a`, i.e. `ln f''(v)`.
    /// Computed from centred deviations in the log domain, so it neither
    /// cancels nor underflows; `-inf` exactly when every deviation is zero.
    pub(crate) fn log_variance(&self) -> f64 {
        let terms: Vec<f64> = self
            .deviations()
            .zip(&self.log_probs)
            .map(|(d, lp)| lp + 2.0 * d.abs().ln())
            .collect();
        log_sum_exp(terms.iter().copied())
    }

    /// `ln Gi(v + delta, v)` for `delta > 0`: the secant slope of `ln S`
    /// between `v` and `v + delta`, written as the cumulant generating function
    /// of the tilted distribution divided by `delta`, centred on the tilted
    /// mean.
    pub(crate) fn log_secant(&self, delta: f64) -> f64 {
        debug_assert!(delta > 0.0);
        let mean = self.mean();
        let spread = self
            .deviations()
            .zip(&self.log_probs)
            .filter(|(_, lp)| **lp > f64::NEG_INFINITY)
            .map(|(d, _)| d.abs())
            .fold(0.0, f64::max);

        if delta * spread <= LINEAR_TILT_LIMIT {
            let acc: f64 = self
                .deviations()
                .zip(self.probs.iter().zip(&self.log_probs))
                .map(|(d, (&pi, &lp))| {
                    let e = (delta * d).exp_m1();
                    if lp >= -700.0 {
                        pi * e
                    } else if e == 0.0 {
                        0.0
                    } else {
                        e.signum() * (lp + e.abs().ln()).exp()
                    }
                })
                .sum();
            mean + acc.ln_1p() / delta
        } else {
            let terms: Vec<f64> = self
                .deviations()
                .zip(&self.log_probs)
                .map(|(d, lp)| lp + delta * d)
                .collect();
            mean + log_sum_exp(terms.iter().copied()) / delta
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sum_exp_basics() {
        let v = [0.0f64, 0.0, 0.0];
        assert!((log_sum_exp(v.iter().copied()) - 3f64.ln()).abs() < 1e-15);
        let v = [f64::NEG_INFINITY, f64::NEG_INFINITY];
        assert_eq!(log_sum_exp(v.iter().copied()), f64::NEG_INFINITY);
        let v = [1000.0, 1000.0];
        assert!((log_sum_exp(v.iter().copied()) - (1000.0 + 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn tilt_of_uniform_sample_has_no_variance() {
        let s = PositiveSample::new(vec![2.5; 4]).unwrap();
        let t = Tilt::new(&s, 3.0);
        assert_eq!(t.log_variance(), f64::NEG_INFINITY);
        assert_eq!(t.mean(), 2.5f64.ln());
        assert_eq!(t.log_secant(1.0), 2.5f64.ln());
    }

    #[test]
    fn both_secant_routes_agree_where_they_overlap() {
        let s = PositiveSample::new(vec![0.5, 2.0, 9.0, 30.0]).unwrap();
        let t = Tilt::new(&s, 1.0);
        // spread is ~2.6, so delta = 190 sits just under the switch
        let linear = t.log_secant(190.0);
        let terms: Vec<f64> = t
            .deviations()
            .zip(&t.log_probs)
            .map(|(d, lp)| lp + 190.0 * d)
            .collect();
        let logdomain = t.mean() + log_sum_exp(terms.iter().copied()) / 190.0;
        assert!((linear - logdomain).abs() < 1e-13);
    }
}
