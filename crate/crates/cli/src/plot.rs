// SPDX-License-Identifier: MIT OR Apache-2.0

//! Log-mass histogram rendered as SVG or as a CSV table.
//!
//! Output depends only on the dataset and flags: coordinates are printed with
//! fixed decimals and numbers with `format_number`.

use std::fmt::Write;

use gini_core::format::format_number;
use gini_core::polymer::{number_average, viscosity_average, weight_average, z_average, MWDataset};

use crate::failure::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Mn,
    Mw,
    Mz,
    Mv,
}

impl Mark {
    pub fn parse_list(text: &str) -> Result<Vec<Mark>, Failure> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "Mn" => Ok(Mark::Mn),
                "Mw" => Ok(Mark::Mw),
                "Mz" => Ok(Mark::Mz),
                "Mv" => Ok(Mark::Mv),
                other => Err(Failure::Usage(format!(
                    "unknown mark `{other}`, expected Mn, Mw, Mz or Mv"
                ))),
            })
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Mark::Mn => "Mn",
            Mark::Mw => "Mw",
            Mark::Mz => "Mz",
            Mark::Mv => "Mv",
        }
    }

    fn colour(self) -> &'static str {
        match self {
            Mark::Mn => "#1b7837",
            Mark::Mv => "#762a83",
            Mark::Mw => "#2166ac",
            Mark::Mz => "#b2182b",
        }
    }

    pub fn value(self, mwd: &MWDataset, s: f64) -> Result<f64, Failure> {
        Ok(match self {
            Mark::Mn => number_average(mwd),
            Mark::Mw => weight_average(mwd),
            Mark::Mz => z_average(mwd),
            Mark::Mv => viscosity_average(mwd, s)?,
        })
    }
}

/// Abundance fractions over equal-width bins of `log10 M`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// `log10` of the lower edge of the first bin.
    pub lo: f64,
    pub width: f64,
    pub fractions: Vec<f64>,
    /// Smallest and largest molar mass, used as the outer edges when the
    /// masses are not all equal.
    span: Option<(f64, f64)>,
}

impl Histogram {
    pub fn new(mwd: &MWDataset, bins: usize) -> Self {
        let logs: Vec<f64> = mwd.species.iter().map(|s| s.molar_mass.log10()).collect();
        let min = logs.iter().copied().fold(f64::INFINITY, f64::min);
        let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (lo, hi) = if max > min {
            (min, max)
        } else {
            (min - 0.5, max + 0.5)
        };
        let masses = mwd.species.iter().map(|s| s.molar_mass);
        let span = (max > min).then(|| {
            (
                masses.clone().fold(f64::INFINITY, f64::min),
                masses.fold(f64::NEG_INFINITY, f64::max),
            )
        });
        let width = (hi - lo) / bins as f64;
        let total: f64 = mwd.species.iter().map(|s| s.abundance).sum();
        let mut fractions = vec![0.0; bins];
        for (l, s) in logs.iter().zip(&mwd.species) {
            let k = (((l - lo) / width) as usize).min(bins - 1);
            fractions[k] += s.abundance / total;
        }
        Self {
            lo,
            width,
            fractions,
            span,
        }
    }

    fn edge(&self, k: usize) -> f64 {
        self.lo + self.width * k as f64
    }

    fn hi(&self) -> f64 {
        self.edge(self.fractions.len())
    }

    fn mass_edge(&self, k: usize) -> f64 {
        match self.span {
            Some((min, _)) if k == 0 => min,
            Some((_, max)) if k == self.fractions.len() => max,
            _ => 10f64.powf(self.edge(k)),
        }
    }
}

pub fn render_csv(hist: &Histogram, marks: &[(Mark, f64)]) -> String {
    let mut out = String::from("mass_low,mass_high,abundance_fraction\n");
    for (k, f) in hist.fractions.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_number(hist.mass_edge(k)),
            format_number(hist.mass_edge(k + 1)),
            format_number(*f)
        );
    }
    if !marks.is_empty() {
        out.push_str("\nmean,value\n");
        for (m, v) in marks {
            let _ = writeln!(out, "{},{}", m.name(), format_number(*v));
        }
    }
    out
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 50.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn render_svg(label: &str, hist: &Histogram, marks: &[(Mark, f64)]) -> String {
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let (lo, hi) = (hist.lo, hist.hi());
    let x = |log_m: f64| LEFT + (log_m - lo) / (hi - lo) * plot_w;
    let base = TOP + plot_h;
    let peak = hist.fractions.iter().copied().fold(0.0, f64::max);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(label));
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    for (k, f) in hist.fractions.iter().enumerate() {
        if *f <= 0.0 {
            continue;
        }
        let h = f / peak * plot_h;
        let _ = writeln!(
            out,
            r##"<rect class="bin" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#9ab3cf"/>"##,
            x(hist.edge(k)),
            base - h,
            x(hist.edge(k + 1)) - x(hist.edge(k)),
            h
        );
    }
    let _ = writeln!(
        out,
        r#"<path d="M{LEFT:.2} {TOP:.2} V{base:.2} H{:.2}" fill="none" stroke="black"/>"#,
        LEFT + plot_w
    );
    let (first, last) = (lo.ceil() as i32, hi.floor() as i32);
    for decade in first..=last {
        let tx = x(decade as f64);
        let _ = writeln!(
            out,
            r#"<line x1="{tx:.2}" y1="{base:.2}" x2="{tx:.2}" y2="{:.2}" stroke="black"/>"#,
            base + 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle">1e{decade}</text>"#,
            base + 18.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">molar mass</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{:.2}" text-anchor="middle" transform="rotate(-90 14 {:.2})">abundance fraction</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );
    let mut ordered: Vec<&(Mark, f64)> = marks.iter().collect();
    ordered.sort_by(|a, b| a.1.total_cmp(&b.1));
    for (i, (mark, value)) in ordered.into_iter().enumerate() {
        let mx = x(value.log10());
        let _ = writeln!(
            out,
            r#"<line class="mark" data-mean="{}" x1="{mx:.2}" y1="{TOP:.2}" x2="{mx:.2}" y2="{base:.2}" stroke="{}" stroke-dasharray="4 3"/>"#,
            mark.name(),
            mark.colour()
        );
        // labels in the right half hang to the left of their line
        let (tx, anchor) = if mx > LEFT + plot_w / 2.0 {
            (mx - 3.0, "end")
        } else {
            (mx + 3.0, "start")
        };
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="{anchor}" fill="{}">{} {}</text>"#,
            TOP + 12.0 + 13.0 * i as f64,
            mark.colour(),
            mark.name(),
            format_number(*value)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> MWDataset {
        MWDataset::from_pairs("two", &[(100.0, 1.0), (300.0, 1.0)]).unwrap()
    }

    #[test]
    fn marks() {
        assert_eq!(
            Mark::parse_list("Mn, Mz").unwrap(),
            vec![Mark::Mn, Mark::Mz]
        );
        assert!(Mark::parse_list("").unwrap().is_empty());
        assert_eq!(Mark::parse_list("Mq").unwrap_err().code(), 2);
    }

    #[test]
    fn histogram_puts_extremes_in_end_bins() {
        let h = Histogram::new(&two(), 4);
        assert_eq!(h.fractions, vec![0.5, 0.0, 0.0, 0.5]);
        let single = MWDataset::from_pairs("one", &[(1e4, 3.0)]).unwrap();
        let h = Histogram::new(&single, 3);
        assert_eq!(h.fractions, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn markers_are_ordered_left_to_right() {
        let d = two();
        let marks: Vec<_> = [Mark::Mz, Mark::Mn, Mark::Mw, Mark::Mv]
            .iter()
            .map(|m| (*m, m.value(&d, 0.7).unwrap()))
            .collect();
        let svg = render_svg("two", &Histogram::new(&d, 8), &marks);
        let order: Vec<&str> = svg
            .lines()
            .filter_map(|l| l.split("data-mean=\"").nth(1))
            .map(|r| &r[..2])
            .collect();
        assert_eq!(order, ["Mn", "Mv", "Mw", "Mz"]);
        assert_eq!(svg, render_svg("two", &Histogram::new(&d, 8), &marks));
    }
}
