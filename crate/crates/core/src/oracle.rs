// SPDX-License-Identifier: MIT OR Apache-2.0

//! Extended-precision reference evaluation of Gini means.
//!
//! The oracle evaluates the textbook quotient `(S_p / S_q)^(1/(p-q))` and the
//! identical-parameter form directly, with no shifting or log-domain
//! rearrangement, in binary floating point of at least 50 decimal digits. It
//! shares no code with the `f64` kernel, so agreement between the two is
//! evidence about the kernel. It is deliberately narrow: inputs must keep the
//! naive power sums well inside any reasonable range.

use astro_float::{BigFloat, Consts, RoundingMode};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::means::gini_mean;
use crate::sample::{ExponentPair, PositiveSample};

pub const ORACLE_MAX_EXPONENT: f64 = 30.0;
pub const ORACLE_MIN_VALUE: f64 = 1e-30;
pub const ORACLE_MAX_VALUE: f64 = 1e30;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    precision_digits: u32,
    max_n: usize,
}

impl OracleConfig {
    pub fn new(precision_digits: u32, max_n: usize) -> Result<Self> {
        if precision_digits < 50 {
            return Err(Error::OracleDomain(format!(
                "precision_digits must be at least 50, got {precision_digits}"
            )));
        }
        if max_n > 1024 {
            return Err(Error::OracleDomain(format!(
                "max_n must be at most 1024, got {max_n}"
            )));
        }
        Ok(Self {
            precision_digits,
            max_n,
        })
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn bits(&self) -> usize {
        (self.precision_digits as f64 * std::f64::consts::LOG2_10).ceil() as usize
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            precision_digits: 50,
            max_n: 1024,
        }
    }
}

fn check_domain(sample: &PositiveSample, pair: ExponentPair, cfg: &OracleConfig) -> Result<()> {
    if sample.len() > cfg.max_n {
        return Err(Error::OracleDomain(format!(
            "sample has {} values, oracle accepts at most {}",
            sample.len(),
            cfg.max_n
        )));
    }
    for x in [pair.p(), pair.q()] {
        if x.abs() > ORACLE_MAX_EXPONENT {
            return Err(Error::OracleDomain(format!(
                "exponent {x} exceeds {ORACLE_MAX_EXPONENT} in magnitude"
            )));
        }
    }
    if sample.min() < ORACLE_MIN_VALUE || sample.max() > ORACLE_MAX_VALUE {
        return Err(Error::OracleDomain(format!(
            "values span [{}, {}], oracle accepts [{ORACLE_MIN_VALUE}, {ORACLE_MAX_VALUE}]",
            sample.min(),
            sample.max()
        )));
    }
    Ok(())
}

/// Nearest `f64` to a finite positive big float.
fn nearest_f64(x: &BigFloat) -> f64 {
    let (words, _, _, exponent, _) = x.as_raw_parts().expect("finite oracle value");
    let (top, rest) = words.split_last().expect("nonempty mantissa");
    let sticky = rest.iter().any(|&w| w != 0);
    let mut mantissa = top >> 11;
    let tail = top & 0x7ff;
    let round_up = tail > 0x400 || (tail == 0x400 && (sticky || mantissa & 1 == 1));
    let mut exponent = exponent;
    if round_up {
        mantissa += 1;
        if mantissa == 1 << 53 {
            mantissa >>= 1;
            exponent += 1;
        }
    }
    // value = 0.m * 2^e = mantissa * 2^(e - 53)
    let shift = exponent - 53;
    let half = shift / 2;
    mantissa as f64 * 2f64.powi(half) * 2f64.powi(shift - half)
}

struct Evaluator {
    bits: usize,
    consts: Consts,
}

impl Evaluator {
    fn new(cfg: &OracleConfig) -> Self {
        Self {
            bits: cfg.bits(),
            consts: Consts::new().expect("constant cache allocation"),
        }
    }

    fn big(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.bits)
    }

    fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.bits, RM, &mut self.consts)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, RM, &mut self.consts)
    }

    /// `(sum w a^p, sum w a^p ln a)`, with `a^p = exp(p ln a)`.
    fn power_sums(&mut self, sample: &PositiveSample, p: f64) -> (BigFloat, BigFloat) {
        let exponent = self.big(p);
        let mut sum = self.big(0.0);
        let mut log_sum = self.big(0.0);
        for (&a, &w) in sample.values().iter().zip(sample.weights()) {
            let ln_a = self.ln(&self.big(a));
            let power = self.exp(&ln_a.mul(&exponent, self.bits, RM));
            let term = power.mul(&self.big(w), self.bits, RM);
            log_sum = log_sum.add(&term.mul(&ln_a, self.bits, RM), self.bits, RM);
            sum = sum.add(&term, self.bits, RM);
        }
        (sum, log_sum)
    }

    fn gini(&mut self, sample: &PositiveSample, pair: ExponentPair) -> BigFloat {
        if pair.p() == pair.q() {
            let (sum, log_sum) = self.power_sums(sample, pair.p());
            self.exp(&log_sum.div(&sum, self.bits, RM))
        } else {
            let (sp, _) = self.power_sums(sample, pair.p());
            let (sq, _) = self.power_sums(sample, pair.q());
            let ratio = sp.div(&sq, self.bits, RM);
            let gap = self.big(pair.p()).sub(&self.big(pair.q()), self.bits, RM);
            let scaled = self.ln(&ratio).div(&gap, self.bits, RM);
            self.exp(&scaled)
        }
    }
}

/// Gini mean evaluated naively at `cfg.precision_digits()` decimal digits and
/// rounded to the nearest `f64`.
pub fn oracle_gini(sample: &PositiveSample, pair: ExponentPair, cfg: &OracleConfig) -> Result<f64> {
    check_domain(sample, pair, cfg)?;
    let mut eval = Evaluator::new(cfg);
    Ok(nearest_f64(&eval.gini(sample, pair)))
}

/// Largest disagreement between [`gini_mean`] and [`oracle_gini`] over a batch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceSummary {
    pub cases: usize,
    pub max_relative_error: f64,
    pub rel_tol: f64,
    pub passed: bool,
    /// `(sample index, grid index, kernel value, oracle value)` of the worst case.
    pub worst: Option<WorstCase>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorstCase {
    pub sample: usize,
    pub p: f64,
    pub q: f64,
    pub kernel: f64,
    pub oracle: f64,
}

/// Compares the kernel with the oracle on every `(sample, pair)` combination.
/// Evaluated in parallel; the worst case is the first maximum in
/// `(sample, grid)` order, so the result does not depend on scheduling.
pub fn equivalence_report(
    samples: &[PositiveSample],
    grid: &[ExponentPair],
    cfg: &OracleConfig,
    rel_tol: f64,
) -> Result<EquivalenceSummary> {
    let cases: Vec<(usize, ExponentPair)> = (0..samples.len())
        .flat_map(|i| grid.iter().map(move |&g| (i, g)))
        .collect();
    for (i, pair) in &cases {
        check_domain(&samples[*i], *pair, cfg)?;
    }
    let errors: Vec<(f64, WorstCase)> = cases
        .par_iter()
        .map_init(
            || Evaluator::new(cfg),
            |eval, &(i, pair)| {
                let oracle = nearest_f64(&eval.gini(&samples[i], pair));
                let kernel = gini_mean(&samples[i], pair);
                let err = ((kernel - oracle) / oracle).abs();
                (
                    err,
                    WorstCase {
                        sample: i,
                        p: pair.p(),
                        q: pair.q(),
                        kernel,
                        oracle,
                    },
                )
            },
        )
        .collect();
    let worst = errors
        .iter()
        .fold(None::<&(f64, WorstCase)>, |best, e| match best {
            Some(b) if b.0 >= e.0 => Some(b),
            _ => Some(e),
        });
    let max_relative_error = worst.map_or(0.0, |w| w.0);
    Ok(EquivalenceSummary {
        cases: cases.len(),
        max_relative_error,
        rel_tol,
        passed: max_relative_error <= rel_tol,
        worst: worst.map(|w| w.1),
    })
}
