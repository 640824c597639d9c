// SPDX-License-Identifier: MIT OR Apache-2.0

//! Gini, Lehmer and power means evaluated in the log domain, an audit engine
//! for the monotonicity of Gini means in their exponents, an
//! extended-precision reference evaluator, and molecular-weight averages of
//! polymer distributions built on the same kernel.

pub mod audit;
pub mod error;
pub mod format;
mod kernel;
pub mod means;
pub mod oracle;
pub mod polymer;
pub mod sample;
pub mod sampling;

pub use audit::{
    check_corollary, check_theorem, convexity_gap, scan_monotonicity, secant_slope, AuditVerdict,
    CorollaryBranch, ParameterOrder,
};
pub use error::{Error, Result};
pub use means::{
    extreme_value, gini_mean, identical_parameter_gini, lehmer_mean, log_gini_mean, log_power_sum,
    power_mean, Extreme, LogPowerSum,
};
pub use oracle::{equivalence_report, oracle_gini, EquivalenceSummary, OracleConfig};
pub use polymer::{MWDataset, MeansReport, Species};
pub use sample::{ExponentPair, PositiveSample, BRANCH_THRESHOLD};
