// SPDX-License-Identifier: MIT OR Apache-2.0

//! Power sums, power means, Gini means and Lehmer means for arbitrary finite
//! exponents.
//!
//! All accumulation happens on logarithms: a power sum `S_p = sum w_i a_i^p` is
//! carried as `ln S_p` with the largest term shifted to `exp(0)`, and a Gini
//! mean is carried as its logarithm, the secant slope
//! `(ln S_p - ln S_q) / (p - q)`. The linear value is produced only when a
//! caller asks for it. Values anywhere in the normal `f64` range and exponents
//! of any finite size are handled without overflow.
//!
//! Results are clamped to `[min a_i, max a_i]`, which every Gini mean satisfies
//! exactly; this removes the last-ulp excursions of `exp(ln x)`.

use crate::error::{Error, Result};
use crate::kernel::Tilt;
use crate::sample::{ExponentPair, PositiveSample};

/// `ln S_p` together with the logarithmic moments of the tilted weights
/// `w_i a_i^p / S_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPowerSum {
    pub p: f64,
    /// `ln sum w_i a_i^p`.
    pub log_sum: f64,
    /// `sum w_i a_i^p ln a_i / S_p`.
    pub moment1: f64,
    /// `sum w_i a_i^p (ln a_i)^2 / S_p`.
    pub moment2: f64,
    /// Natural log of `moment2 - moment1^2`, evaluated from centred
    /// deviations; `-inf` for a uniform sample.
    pub log_variance: f64,
}

impl LogPowerSum {
    /// `moment2 - moment1^2`, the second derivative of `p -> ln S_p`.
    pub fn variance(&self) -> f64 {
        self.log_variance.exp()
    }
}

fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::domain(name, value, "finite real"))
    }
}

pub fn log_power_sum(sample: &PositiveSample, p: f64) -> Result<LogPowerSum> {
    let p = finite("p", p)?;
    let tilt = Tilt::new(sample, p);
    let moment1 = tilt.mean();
    let log_variance = tilt.log_variance();
    // assembled from the centred variance so moment2 >= moment1^2 survives rounding
    Ok(LogPowerSum {
        p,
        log_sum: tilt.log_sum(),
        moment1,
        moment2: moment1 * moment1 + log_variance.exp(),
        log_variance,
    })
}

fn clamp_log(sample: &PositiveSample, log_mean: f64) -> f64 {
    let xs = sample.log_values();
    let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    log_mean.clamp(lo, hi)
}

fn materialize(sample: &PositiveSample, log_mean: f64) -> f64 {
    log_mean.exp().clamp(sample.min(), sample.max())
}

/// Natural log of the Gini mean; equal to the secant slope of `p -> ln S_p`
/// through `pair.q()` and `pair.p()`.
pub fn log_gini_mean(sample: &PositiveSample, pair: ExponentPair) -> f64 {
    let raw = if pair.is_near_diagonal() {
        Tilt::new(sample, pair.midpoint()).mean()
    } else {
        Tilt::new(sample, pair.q()).log_secant(pair.gap())
    };
    clamp_log(sample, raw)
}

/// Largest |exponent term| for which `w a^p` is evaluated directly.
const LINEAR_TERM_LIMIT: f64 = 600.0;

/// Agreement, in ulps, required before the linear quotient replaces the
/// log-domain value.
const LINEAR_AGREEMENT_ULPS: f64 = 4.0;

/// `(S_p / S_q)^(1/(p-q))` evaluated with plain powers, when every term is
/// comfortably inside the normal range and `p - q >= 1`. Exact for small
/// rational data where the log-domain value can be off by an ulp.
fn linear_quotient(sample: &PositiveSample, pair: ExponentPair) -> Option<f64> {
    let gap = pair.gap();
    if gap < 1.0 {
        return None;
    }
    let in_range = |e: f64| {
        sample
            .log_values()
            .iter()
            .zip(sample.log_weights())
            .all(|(x, lw)| (e * x + lw).abs() <= LINEAR_TERM_LIMIT)
    };
    if !(in_range(pair.p()) && in_range(pair.q())) {
        return None;
    }
    let mut terms: Vec<(f64, f64)> = sample
        .values()
        .iter()
        .zip(sample.weights())
        .map(|(&a, &w)| (a, w))
        .collect();
    terms.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    let sum = |e: f64| -> f64 { terms.iter().map(|(a, w)| w * a.powf(e)).sum() };
    let ratio = sum(pair.p()) / sum(pair.q());
    let root = if gap == 1.0 {
        ratio
    } else if gap == 2.0 {
        ratio.sqrt()
    } else {
        ratio.powf(gap.recip())
    };
    (root.is_finite() && root > 0.0).then_some(root)
}

/// `Gi_{p,q}(a) = (S_p / S_q)^(1/(p-q))`, or the identical-parameter form at
/// the midpoint when `p` and `q` fall inside the branch band.
///
/// The value is `exp` of [`log_gini_mean`]; when the plain quotient is
/// available and agrees with it to a few ulps, the quotient supplies the final
/// rounding.
pub fn gini_mean(sample: &PositiveSample, pair: ExponentPair) -> f64 {
    let from_log = materialize(sample, log_gini_mean(sample, pair));
    if pair.is_near_diagonal() || sample.is_uniform() {
        return from_log;
    }
    match linear_quotient(sample, pair) {
        Some(linear)
            if (linear - from_log).abs() <= LINEAR_AGREEMENT_ULPS * f64::EPSILON * from_log =>
        {
            linear.clamp(sample.min(), sample.max())
        }
        _ => from_log,
    }
}

/// `exp(sum w_i a_i^p ln a_i / sum w_i a_i^p)`, the `p == q` Gini mean. At
/// `p = 0` this is the weighted geometric mean.
pub fn identical_parameter_gini(sample: &PositiveSample, p: f64) -> Result<f64> {
    let p = finite("p", p)?;
    let mean = Tilt::new(sample, p).mean();
    Ok(materialize(sample, clamp_log(sample, mean)))
}

/// Weighted power mean `M_r = (sum w a^r / sum w)^(1/r)`.
///
/// Evaluated as `Gi_{r,0}`, so the two agree bit for bit. Inside the branch
/// band around `r = 0` this is the identical-parameter mean at `r/2`, which is
/// the geometric mean when `r == 0`.
pub fn power_mean(sample: &PositiveSample, r: f64) -> Result<f64> {
    Ok(gini_mean(sample, ExponentPair::new(r, 0.0)?))
}

/// `Le_p = S_p / S_{p-1}`.
pub fn lehmer_mean(sample: &PositiveSample, p: f64) -> Result<f64> {
    let p = finite("p", p)?;
    Ok(gini_mean(sample, ExponentPair::new(p, p - 1.0)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

/// `max a_i` or `min a_i`: the limits of `Gi_{p,q}` as `p -> +inf` and
/// `q -> -inf` respectively. Infinite exponents are not accepted by
/// [`ExponentPair`]; the limits are only reachable here.
pub fn extreme_value(sample: &PositiveSample, which: Extreme) -> f64 {
    match which {
        Extreme::Max => sample.max(),
        Extreme::Min => sample.min(),
    }
}
