// SPDX-License-Identifier: MIT OR Apache-2.0

//! Synthetic distributions used as test data. Each generator returns number
//! fractions normalised to sum to one.

use super::dataset::{MWDataset, Species};
use crate::error::{Error, Result};
use crate::format::format_number;

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::ParameterDomain {
            name,
            value,
            expected: "positive finite real",
        })
    }
}

fn normalized(label: String, mut species: Vec<Species>) -> Result<MWDataset> {
    let total: f64 = species.iter().map(|s| s.abundance).sum();
    for s in &mut species {
        s.abundance /= total;
    }
    MWDataset::new(label, species)
}

/// Most-probable (Flory) distribution: chains of `k` monomer units of mass
/// `m0` with number fraction `(1 - x) x^(k-1)`, truncated after the first `K`
/// lengths where the omitted fraction `x^K` drops below `tail_tol`.
pub fn generate_flory(m0: f64, x: f64, tail_tol: f64) -> Result<MWDataset> {
    let m0 = positive("m0", m0)?;
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::ParameterDomain {
            name: "x",
            value: x,
            expected: "open interval (0, 1)",
        });
    }
    if !(tail_tol > 0.0 && tail_tol <= 1e-6) {
        return Err(Error::ParameterDomain {
            name: "tail_tol",
            value: tail_tol,
            expected: "half-open interval (0, 1e-6]",
        });
    }
    let lengths = (tail_tol.ln() / x.ln()).floor() as usize + 1;
    let mut species = Vec::with_capacity(lengths);
    let mut fraction = 1.0 - x;
    for k in 1..=lengths {
        species.push(Species {
            molar_mass: k as f64 * m0,
            abundance: fraction,
        });
        fraction *= x;
    }
    normalized(
        format!("flory(m0={},x={})", format_number(m0), format_number(x)),
        species,
    )
}

/// Poisson distribution of chain lengths `k = 1 + j`, `j ~ Poisson(mean_degree)`,
/// as produced by living polymerisation with `mean_degree` monomers added per
/// chain. Lengths whose probability falls below `1e-16` of the mode are
/// dropped.
pub fn generate_poisson(m0: f64, mean_degree: f64) -> Result<MWDataset> {
    let m0 = positive("m0", m0)?;
    let nu = positive("mean_degree", mean_degree)?;
    let cutoff = (1e-16f64).ln();
    let mode = nu.floor();
    let log_pmf = |j: f64, log_fact: f64| -nu + j * nu.ln() - log_fact;
    let mut log_fact = 0.0;
    let mut peak = f64::NEG_INFINITY;
    let mut terms = Vec::new();
    let mut j = 0u64;
    loop {
        let jf = j as f64;
        if j > 0 {
            log_fact += jf.ln();
        }
        let lp = log_pmf(jf, log_fact);
        if jf <= mode {
            peak = peak.max(lp);
        }
        if jf > mode && lp - peak < cutoff {
            break;
        }
        terms.push((jf, lp));
        j += 1;
    }
    let species = terms
        .into_iter()
        .filter(|(_, lp)| lp - peak >= cutoff)
        .map(|(j, lp)| Species {
            molar_mass: (j + 1.0) * m0,
            abundance: (lp - peak).exp(),
        })
        .collect();
    normalized(
        format!(
            "poisson(m0={},mean_degree={})",
            format_number(m0),
            format_number(nu)
        ),
        species,
    )
}

/// Log-normal number distribution sampled at `n_points` masses evenly spaced
/// in `ln M` over `median * exp(sigma * [-4, 4])`.
pub fn generate_lognormal(median_mass: f64, sigma: f64, n_points: usize) -> Result<MWDataset> {
    let median = positive("median_mass", median_mass)?;
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Error::ParameterDomain {
            name: "sigma",
            value: sigma,
            expected: "nonnegative finite real",
        });
    }
    if n_points < 2 {
        return Err(Error::ParameterDomain {
            name: "n_points",
            value: n_points as f64,
            expected: "integer >= 2",
        });
    }
    let species = (0..n_points)
        .map(|i| {
            let z = -4.0 + 8.0 * i as f64 / (n_points - 1) as f64;
            Species {
                molar_mass: median * (sigma * z).exp(),
                abundance: (-0.5 * z * z).exp(),
            }
        })
        .collect();
    normalized(
        format!(
            "lognormal(median={},sigma={},n={n_points})",
            format_number(median),
            format_number(sigma)
        ),
        species,
    )
}
