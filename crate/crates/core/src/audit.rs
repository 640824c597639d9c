// SPDX-License-Identifier: MIT OR Apache-2.0

//! Mechanical checks of the monotonicity of Gini means in their exponents.
//!
//! With `f(v) = ln S_v`, `ln Gi_{p,q}` is the slope of the secant of `f`
//! through `q` and `p`. Strict convexity of `f` (its second derivative is the
//! variance of `ln a` under the weights `w_i a_i^v / S_v`) makes that slope
//! strictly increasing in both endpoints.
//!
//! A verdict's margin is `ln Gi(upper) - ln Gi(lower)`. When that difference
//! is large enough to be read off the two evaluated logs it is used directly.
//! Otherwise (heavily tilted samples, where both means agree with an extreme
//! value to the last bit) the margin is evaluated as
//! `integral K(v) f''(v) dv` over `[q1, p2]`, with `K` the nonnegative
//! piecewise-linear kernel obtained by moving first `p` and then `q`. The
//! integrand is accumulated in the log domain, so the margin's logarithm stays
//! finite even when the margin itself underflows.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{log_sum_exp, Tilt};
use crate::means::log_gini_mean;
use crate::sample::{ExponentPair, PositiveSample};

/// Relative size below which a computed positive margin is flagged weak.
pub const STRICTNESS_TOLERANCE: f64 = 1e-12;

/// Relative size above which the direct log difference is trusted.
const RESOLVED_MARGIN: f64 = 1e-8;

const GAUSS_LEGENDRE_8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (-0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_26),
];

/// Outcome of one strict inequality `lower < upper` between two means.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditVerdict {
    /// The strict inequality is certified: the margin is positive.
    pub holds: bool,
    /// `ln upper - ln lower`. May underflow to `0.0` for extreme exponents
    /// while `log_margin` stays finite.
    pub margin: f64,
    /// Natural log of `margin` when positive, `-inf` otherwise.
    pub log_margin: f64,
    /// The sample is uniform, so the inequality is an equality.
    pub degenerate: bool,
    /// Positive margin at or below `tolerance`.
    pub weak: bool,
    pub tolerance: f64,
    pub lower_log: f64,
    pub upper_log: f64,
}

impl AuditVerdict {
    /// Holds, or is exempt because the sample is uniform.
    pub fn passed(&self) -> bool {
        self.holds || self.degenerate
    }
}

/// Two exponent pairs ordered as the monotonicity theorem requires:
/// `p1 > q1`, `p2 > q2`, `p2 >= p1`, `q2 >= q1`, with at least one of the last
/// two strict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterOrder {
    lower: ExponentPair,
    upper: ExponentPair,
}

impl ParameterOrder {
    pub fn new(lower: ExponentPair, upper: ExponentPair) -> Result<Self> {
        for (name, pair) in [("lower", lower), ("upper", upper)] {
            if pair.p() <= pair.q() {
                return Err(Error::Hypothesis(format!(
                    "{name} pair ({}, {}) needs p > q",
                    pair.p(),
                    pair.q()
                )));
            }
        }
        if !lower.precedes(&upper) {
            return Err(Error::Hypothesis(format!(
                "({}, {}) does not precede ({}, {}) componentwise",
                lower.p(),
                lower.q(),
                upper.p(),
                upper.q()
            )));
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> ExponentPair {
        self.lower
    }

    pub fn upper(&self) -> ExponentPair {
        self.upper
    }
}

fn verdict(sample: &PositiveSample, order: &ParameterOrder) -> AuditVerdict {
    let lower_log = log_gini_mean(sample, order.lower);
    let upper_log = log_gini_mean(sample, order.upper);
    let direct = upper_log - lower_log;
    let scale = 1.0 + lower_log.abs().max(upper_log.abs());
    let tolerance = STRICTNESS_TOLERANCE * scale;

    if sample.is_uniform() {
        return AuditVerdict {
            holds: false,
            margin: direct,
            log_margin: f64::NEG_INFINITY,
            degenerate: true,
            weak: false,
            tolerance,
            lower_log,
            upper_log,
        };
    }

    let (margin, log_margin) = if direct.abs() > RESOLVED_MARGIN * scale {
        (
            direct,
            if direct > 0.0 {
                direct.ln()
            } else {
                f64::NEG_INFINITY
            },
        )
    } else {
        let log_margin = log_convexity_integral(sample, order);
        (log_margin.exp(), log_margin)
    };
    let holds = margin > 0.0 || log_margin > f64::NEG_INFINITY;
    AuditVerdict {
        holds,
        margin,
        log_margin,
        degenerate: false,
        weak: holds && margin <= tolerance,
        tolerance,
        lower_log,
        upper_log,
    }
}

/// Nonnegative weight of `f''(v)` in `s(p2, q2) - s(p1, q1)`, where `s` is the
/// secant slope of `f`. Supported on `[q1, p2]`.
fn margin_kernel(order: &ParameterOrder, v: f64) -> f64 {
    let (p1, q1) = (order.lower.p(), order.lower.q());
    let (p2, q2) = (order.upper.p(), order.upper.q());
    // p: p1 -> p2 with q = q1
    let moving_p = if v <= p1 {
        (v - q1) * (p2 - p1) / ((p2 - q1) * (p1 - q1))
    } else {
        (p2 - v) / (p2 - q1)
    };
    // q: q1 -> q2 with p = p2
    let moving_q = if v <= q2 {
        (v - q1) / (p2 - q1)
    } else {
        (p2 - v) * (q2 - q1) / ((p2 - q1) * (p2 - q2))
    };
    moving_p + moving_q
}

fn log_convexity_integral(sample: &PositiveSample, order: &ParameterOrder) -> f64 {
    let mut knots = [
        order.lower.q(),
        order.upper.q(),
        order.lower.p(),
        order.upper.p(),
    ];
    knots.sort_by(f64::total_cmp);
    let xs = sample.log_values();
    let range = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - xs.iter().copied().fold(f64::INFINITY, f64::min);

    let mut terms = Vec::new();
    for piece in knots.windows(2) {
        let (a, b) = (piece[0], piece[1]);
        if b <= a {
            continue;
        }
        // f'' changes by at most a factor exp(range) per unit of v
        let cells = ((range * (b - a) / 2.0).ceil() as usize).clamp(1, 4096);
        let h = (b - a) / cells as f64;
        for cell in 0..cells {
            let lo = a + h * cell as f64;
            for (node, weight) in GAUSS_LEGENDRE_8 {
                let v = lo + 0.5 * h * (node + 1.0);
                let k = margin_kernel(order, v);
                if k > 0.0 {
                    let lv = Tilt::new(sample, v).log_variance();
                    terms.push((0.5 * h * weight).ln() + k.ln() + lv);
                }
            }
        }
    }
    log_sum_exp(terms.iter().copied())
}

/// Checks `Gi_{p1,q1}(a) < Gi_{p2,q2}(a)`.
pub fn check_theorem(sample: &PositiveSample, order: &ParameterOrder) -> AuditVerdict {
    verdict(sample, order)
}

/// Which of the two power-mean comparisons a `(p, q, r)` triple selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CorollaryBranch {
    /// `r >= p > q` and `r > 0 > q`: `Gi_{p,q} < M_r`.
    GiniBelowPower,
    /// `p >= r > 0` and `p > q > 0`: `M_r < Gi_{p,q}`.
    PowerBelowGini,
}

pub fn corollary_branch(p: f64, q: f64, r: f64) -> Result<CorollaryBranch> {
    if !(p.is_finite() && q.is_finite() && r.is_finite()) {
        return Err(Error::Hypothesis(format!(
            "non-finite exponent in (p, q, r) = ({p}, {q}, {r})"
        )));
    }
    if r >= p && p > q && r > 0.0 && 0.0 > q {
        Ok(CorollaryBranch::GiniBelowPower)
    } else if p >= r && r > 0.0 && p > q && q > 0.0 {
        Ok(CorollaryBranch::PowerBelowGini)
    } else {
        Err(Error::Hypothesis(format!(
            "(p, q, r) = ({p}, {q}, {r}) satisfies neither power-mean comparison"
        )))
    }
}

/// Compares `Gi_{p,q}` with the power mean `M_r = Gi_{r,0}`; the direction is
/// chosen by [`corollary_branch`] and the margin is `ln larger - ln smaller`.
pub fn check_corollary(sample: &PositiveSample, p: f64, q: f64, r: f64) -> Result<AuditVerdict> {
    let gini = ExponentPair::new(p, q)?;
    let power = ExponentPair::new(r, 0.0)?;
    let order = match corollary_branch(p, q, r)? {
        CorollaryBranch::GiniBelowPower => ParameterOrder::new(gini, power)?,
        CorollaryBranch::PowerBelowGini => ParameterOrder::new(power, gini)?,
    };
    Ok(verdict(sample, &order))
}

/// `(ln S_p - ln S_q) / (p - q)`, which is `ln Gi_{p,q}`. Inside the branch
/// band around `p == q` this returns the tilted log-moment at the midpoint,
/// the limit of the secant.
pub fn secant_slope(sample: &PositiveSample, p: f64, q: f64) -> Result<f64> {
    Ok(log_gini_mean(sample, ExponentPair::new(p, q)?))
}

/// `f''(p) = (S'' S - S'^2) / S^2`, the variance of `ln a` under the weights
/// `w_i a_i^p / S_p`. Zero exactly for uniform samples.
pub fn convexity_gap(sample: &PositiveSample, p: f64) -> Result<f64> {
    if !p.is_finite() {
        return Err(Error::domain("p", p, "finite real"));
    }
    Ok(Tilt::new(sample, p).log_variance().exp())
}

/// `convexity_gap` against a central second difference of the secant slopes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureCheck {
    pub p: f64,
    pub step: f64,
    pub gap: f64,
    pub finite_difference: f64,
    pub relative_error: f64,
}

pub const CURVATURE_RELATIVE_TOLERANCE: f64 = 1e-6;

impl CurvatureCheck {
    pub fn passed(&self) -> bool {
        self.relative_error <= CURVATURE_RELATIVE_TOLERANCE
    }
}

/// `(s(p+h, p) - s(p, p-h)) / h` with `h = 1e-4 (1 + |p|)`, which equals
/// `(f(p+h) - 2 f(p) + f(p-h)) / h^2`.
pub fn curvature_cross_check(sample: &PositiveSample, p: f64) -> Result<CurvatureCheck> {
    let gap = convexity_gap(sample, p)?;
    let step = 1e-4 * (1.0 + p.abs());
    let ahead = secant_slope(sample, p + step, p)?;
    let behind = secant_slope(sample, p, p - step)?;
    let finite_difference = (ahead - behind) / step;
    let relative_error = if gap == 0.0 {
        finite_difference.abs()
    } else {
        ((finite_difference - gap) / gap).abs()
    };
    Ok(CurvatureCheck {
        p,
        step,
        gap,
        finite_difference,
        relative_error,
    })
}

/// Checks the theorem between every consecutive pair of `grid`.
pub fn scan_monotonicity(
    sample: &PositiveSample,
    grid: &[ExponentPair],
) -> Result<Vec<AuditVerdict>> {
    let orders = grid
        .windows(2)
        .map(|w| ParameterOrder::new(w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(orders.par_iter().map(|o| verdict(sample, o)).collect())
}
