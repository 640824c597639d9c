// SPDX-License-Identifier: MIT OR Apache-2.0

//! Molecular-weight distributions and their averages.
//!
//! A distribution is a table of species `(molar mass M_i, abundance n_i)`; every
//! average is a weighted Gini mean of the masses with the abundances as
//! weights:
//!
//! | average | exponents |
//! |---------|-----------|
//! | `Mn` number | `(1, 0)` |
//! | `Mw` weight | `(2, 1)` |
//! | `Mz` z | `(3, 2)` |
//! | `Mv` viscosity, Mark-Houwink exponent `s` | `(1 + s, 1)` |
//! | hydrodynamic, `0 < b < 1` | `(1, 1 - b)` |
//! | sedimentation, `0 < b < 1` | `(2 - b, 1 - b)` (Lehmer mean of order `2 - b`) |
//! | effective parameter | `(3/2, -3/2)` |

mod averages;
mod dataset;
mod generate;
mod io;

pub use averages::{
    effective_parameter_mean, hydrodynamic_mean, number_average, polydispersity,
    polydispersity_with, sedimentation_mean, viscosity_average, weight_average, z_average,
    CustomMean, MeansReport, DEFAULT_MARK_HOUWINK,
};
pub use dataset::{MWDataset, Species};
pub use generate::{generate_flory, generate_lognormal, generate_poisson};
pub use io::{load_mwd, save_mwd, save_report, write_atomic, DataFormat, ReportFormat};
