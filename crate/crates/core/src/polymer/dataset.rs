// SPDX-License-Identifier: MIT OR Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::PositiveSample;

/// One polymer species: molar mass in g/mol and its abundance (mole count or
/// number fraction).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Species {
    pub molar_mass: f64,
    pub abundance: f64,
}

/// A tabulated molecular-weight distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MWDataset {
    pub label: String,
    pub species: Vec<Species>,
}

impl MWDataset {
    pub fn new(label: impl Into<String>, species: Vec<Species>) -> Result<Self> {
        if species.is_empty() {
            return Err(Error::EmptySample);
        }
        for (index, s) in species.iter().enumerate() {
            if !(s.molar_mass.is_finite() && s.molar_mass > 0.0) {
                return Err(Error::InvalidValue {
                    index,
                    value: s.molar_mass,
                });
            }
            if !(s.abundance.is_finite() && s.abundance > 0.0) {
                return Err(Error::InvalidWeight {
                    index,
                    value: s.abundance,
                });
            }
        }
        Ok(Self {
            label: label.into(),
            species,
        })
    }

    /// Convenience constructor from `(mass, abundance)` pairs.
    pub fn from_pairs(label: impl Into<String>, pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            label,
            pairs
                .iter()
                .map(|&(molar_mass, abundance)| Species {
                    molar_mass,
                    abundance,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.species.len()
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty()
    }

    /// Masses as values, abundances as weights.
    pub fn to_sample(&self) -> PositiveSample {
        PositiveSample::weighted(
            self.species.iter().map(|s| s.molar_mass).collect(),
            self.species.iter().map(|s| s.abundance).collect(),
        )
        .expect("dataset invariants imply a valid sample")
    }

    /// Monodisperse: every species has the same molar mass.
    pub fn is_uniform(&self) -> bool {
        self.species
            .iter()
            .all(|s| s.molar_mass == self.species[0].molar_mass)
    }
}
