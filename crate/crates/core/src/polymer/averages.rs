// SPDX-License-Identifier: MIT OR Apache-2.0

use serde::{Deserialize, Serialize};

use super::dataset::MWDataset;
use crate::error::{Error, Result};
use crate::format::format_number;
use crate::means::gini_mean;
use crate::sample::ExponentPair;

/// Mark-Houwink exponent used for `Mv` when none is given.
pub const DEFAULT_MARK_HOUWINK: f64 = 0.7;

fn weighted_gini(mwd: &MWDataset, p: f64, q: f64) -> f64 {
    gini_mean(
        &mwd.to_sample(),
        ExponentPair::new(p, q).expect("finite exponents"),
    )
}

fn open_unit(name: &'static str, b: f64) -> Result<f64> {
    if b > 0.0 && b < 1.0 {
        Ok(b)
    } else {
        Err(Error::ParameterDomain {
            name,
            value: b,
            expected: "open interval (0, 1)",
        })
    }
}

/// `Mn = sum n M / sum n`.
pub fn number_average(mwd: &MWDataset) -> f64 {
    weighted_gini(mwd, 1.0, 0.0)
}

/// `Mw = sum n M^2 / sum n M`.
pub fn weight_average(mwd: &MWDataset) -> f64 {
    weighted_gini(mwd, 2.0, 1.0)
}

/// `Mz = sum n M^3 / sum n M^2`.
pub fn z_average(mwd: &MWDataset) -> f64 {
    weighted_gini(mwd, 3.0, 2.0)
}

/// `Mv = (sum n M^(1+s) / sum n M)^(1/s)` for `0 < s <= 2`.
pub fn viscosity_average(mwd: &MWDataset, s: f64) -> Result<f64> {
    if !(s > 0.0 && s <= 2.0) {
        return Err(Error::ParameterDomain {
            name: "s",
            value: s,
            expected: "half-open interval (0, 2]",
        });
    }
    Ok(weighted_gini(mwd, 1.0 + s, 1.0))
}

/// `Gi_{1, 1-b}`; exceeds `Mn` for every non-uniform distribution.
pub fn hydrodynamic_mean(mwd: &MWDataset, b: f64) -> Result<f64> {
    let b = open_unit("b", b)?;
    Ok(weighted_gini(mwd, 1.0, 1.0 - b))
}

/// `Gi_{2-b, 1-b}`, the Lehmer mean of order `2 - b`.
pub fn sedimentation_mean(mwd: &MWDataset, b: f64) -> Result<f64> {
    let b = open_unit("b", b)?;
    Ok(weighted_gini(mwd, 2.0 - b, 1.0 - b))
}

/// `Gi_{3/2, -3/2}`.
pub fn effective_parameter_mean(mwd: &MWDataset) -> f64 {
    weighted_gini(mwd, 1.5, -1.5)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CustomMean {
    pub p: f64,
    pub q: f64,
    pub value: f64,
}

/// The standard averages of a distribution and the polydispersity indices
/// built from them.
///
/// `schulz_u = Mw/Mn - 1` and `z_ratio = Mz/Mw` are the Schulz-style
/// polydispersity indices built from `Gi_{2,1}` and `Gi_{3,2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeansReport {
    pub label: String,
    #[serde(rename = "Mn")]
    pub mn: f64,
    #[serde(rename = "Mw")]
    pub mw: f64,
    #[serde(rename = "Mz")]
    pub mz: f64,
    #[serde(rename = "Mv")]
    pub mv: f64,
    /// Mark-Houwink exponent used for `Mv`.
    pub s: f64,
    pub pdi: f64,
    pub z_ratio: f64,
    pub schulz_u: f64,
    pub effective_parameter: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hydrodynamic: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sedimentation: Option<f64>,
    pub custom: Vec<CustomMean>,
}

/// Report with `s = 0.7`, no `b`-dependent means and no custom pairs.
pub fn polydispersity(mwd: &MWDataset) -> MeansReport {
    polydispersity_with(mwd, DEFAULT_MARK_HOUWINK, None, &[])
        .expect("default Mark-Houwink exponent is in range")
}

pub fn polydispersity_with(
    mwd: &MWDataset,
    s: f64,
    b: Option<f64>,
    custom: &[(f64, f64)],
) -> Result<MeansReport> {
    let mv = viscosity_average(mwd, s)?;
    let (hydrodynamic, sedimentation) = match b {
        Some(b) => (
            Some(hydrodynamic_mean(mwd, b)?),
            Some(sedimentation_mean(mwd, b)?),
        ),
        None => (None, None),
    };
    let sample = mwd.to_sample();
    let custom = custom
        .iter()
        .map(|&(p, q)| {
            Ok(CustomMean {
                p,
                q,
                value: gini_mean(&sample, ExponentPair::new(p, q)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mn = number_average(mwd);
    let mw = weight_average(mwd);
    let mz = z_average(mwd);
    let pdi = mw / mn;
    Ok(MeansReport {
        label: mwd.label.clone(),
        mn,
        mw,
        mz,
        mv,
        s,
        pdi,
        z_ratio: mz / mw,
        schulz_u: pdi - 1.0,
        effective_parameter: effective_parameter_mean(mwd),
        b,
        hydrodynamic,
        sedimentation,
        custom,
    })
}

impl MeansReport {
    /// Aligned `key value` lines.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("label".into(), self.label.clone()),
            ("Mn".into(), format_number(self.mn)),
            ("Mw".into(), format_number(self.mw)),
            ("Mz".into(), format_number(self.mz)),
            (
                format!("Mv(s={})", format_number(self.s)),
                format_number(self.mv),
            ),
            ("pdi".into(), format_number(self.pdi)),
            ("z_ratio".into(), format_number(self.z_ratio)),
            ("schulz_u".into(), format_number(self.schulz_u)),
            (
                "Gi(3/2,-3/2)".into(),
                format_number(self.effective_parameter),
            ),
        ];
        if let Some(b) = self.b {
            let b = format_number(b);
            if let Some(h) = self.hydrodynamic {
                rows.push((format!("hydrodynamic(b={b})"), format_number(h)));
            }
            if let Some(v) = self.sedimentation {
                rows.push((format!("sedimentation(b={b})"), format_number(v)));
            }
        }
        for c in &self.custom {
            rows.push((
                format!("Gi({},{})", format_number(c.p), format_number(c.q)),
                format_number(c.value),
            ));
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}
