// SPDX-License-Identifier: MIT OR Apache-2.0

//! Locale-independent number rendering shared by reports, data files and the
//! command line.

/// Shortest decimal string that parses back to exactly `x` (never more than
/// 17 significant digits). Plain notation for magnitudes in `[1e-5, 1e17)`,
/// scientific otherwise.
pub fn format_number(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs();
    if (1e-5..1e17).contains(&magnitude) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}
