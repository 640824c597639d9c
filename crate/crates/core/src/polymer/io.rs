// SPDX-License-Identifier: MIT OR Apache-2.0

//! Distribution files (CSV and JSON) and report files (JSON and text).
//!
//! CSV: header `molar_mass,abundance`, one species per row, `.` as the decimal
//! separator. JSON: `{"label": ..., "species": [{"molar_mass": ..,
//! "abundance": ..}, ..]}`. Numbers are written as the shortest decimal that
//! reads back to the same `f64`, so save followed by load is bit-exact.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::averages::MeansReport;
use super::dataset::{MWDataset, Species};
use crate::error::{Error, Result};
use crate::format::format_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Csv,
    Json,
}

impl DataFormat {
    /// `.json` means JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => DataFormat::Json,
            _ => DataFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

fn ingestion(path: &Path, line: Option<u64>, message: impl Into<String>) -> Error {
    Error::Ingestion {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn load_mwd(path: &Path, format: DataFormat) -> Result<MWDataset> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    match format {
        DataFormat::Csv => parse_csv(path, &text),
        DataFormat::Json => parse_json(path, &text),
    }
}

fn parse_field(path: &Path, line: u64, name: &str, raw: &str) -> Result<f64> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| ingestion(path, Some(line), format!("{name} `{raw}` is not a number")))?;
    if !(value.is_finite() && value > 0.0) {
        return Err(ingestion(
            path,
            Some(line),
            format!("{name} must be positive and finite, got {raw}"),
        ));
    }
    Ok(value)
}

fn parse_csv(path: &Path, text: &str) -> Result<MWDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| ingestion(path, Some(1), e.to_string()))?
        .clone();
    let names: Vec<&str> = headers.iter().map(str::trim).collect();
    if names != ["molar_mass", "abundance"] {
        return Err(ingestion(
            path,
            Some(1),
            format!(
                "expected header `molar_mass,abundance`, got `{}`",
                names.join(",")
            ),
        ));
    }
    let mut species = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line());
            ingestion(path, line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(ingestion(
                path,
                Some(line),
                format!("expected 2 columns, found {}", record.len()),
            ));
        }
        species.push(Species {
            molar_mass: parse_field(path, line, "molar_mass", &record[0])?,
            abundance: parse_field(path, line, "abundance", &record[1])?,
        });
    }
    if species.is_empty() {
        return Err(ingestion(path, None, "no species rows"));
    }
    let label = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("")
        .to_string();
    MWDataset::new(label, species)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDataset {
    #[serde(default)]
    label: String,
    species: Vec<Species>,
}

fn parse_json(path: &Path, text: &str) -> Result<MWDataset> {
    let raw: RawDataset = serde_json::from_str(text)
        .map_err(|e| ingestion(path, Some(e.line() as u64), e.to_string()))?;
    if raw.species.is_empty() {
        return Err(ingestion(path, None, "no species"));
    }
    for (i, s) in raw.species.iter().enumerate() {
        for (name, value) in [("molar_mass", s.molar_mass), ("abundance", s.abundance)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ingestion(
                    path,
                    None,
                    format!("species[{i}]: {name} must be positive and finite, got {value}"),
                ));
            }
        }
    }
    MWDataset::new(raw.label, raw.species)
}

/// Writes `bytes` to a temporary file next to `path` and renames it into
/// place, so `path` is either untouched or complete.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir: PathBuf = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| io_error(path, e))?;
    tmp.write_all(bytes).map_err(|e| io_error(path, e))?;
    tmp.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

impl MWDataset {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("molar_mass,abundance\n");
        for s in &self.species {
            out.push_str(&format_number(s.molar_mass));
            out.push(',');
            out.push_str(&format_number(s.abundance));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("dataset serializes");
        out.push('\n');
        out
    }
}

pub fn save_mwd(mwd: &MWDataset, path: &Path, format: DataFormat) -> Result<()> {
    let text = match format {
        DataFormat::Csv => mwd.to_csv(),
        DataFormat::Json => mwd.to_json(),
    };
    write_atomic(path, text.as_bytes())
}

impl MeansReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

pub fn save_report(report: &MeansReport, path: &Path, format: ReportFormat) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Text => report.to_text(),
    };
    write_atomic(path, text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    #[test]
    fn csv_two_species() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "two.csv", "molar_mass,abundance\n100,1\n300,1\n");
        let d = load_mwd(&p, DataFormat::Csv).unwrap();
        assert_eq!(d.label, "two");
        assert_eq!(d.species.len(), 2);
        assert_eq!(d.species[1].molar_mass, 300.0);
    }

    #[test]
    fn csv_errors_name_the_line() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "bad.csv", "molar_mass,abundance\n-5,1\n");
        let e = load_mwd(&p, DataFormat::Csv).unwrap_err();
        assert!(matches!(e, Error::Ingestion { line: Some(2), .. }), "{e}");
        assert!(e.to_string().contains("line 2"));

        let p = write(&dir, "zero.csv", "molar_mass,abundance\n100,1\n300,0\n");
        let e = load_mwd(&p, DataFormat::Csv).unwrap_err();
        assert!(matches!(e, Error::Ingestion { line: Some(3), .. }), "{e}");

        let p = write(&dir, "short.csv", "molar_mass,abundance\n100\n");
        assert!(matches!(
            load_mwd(&p, DataFormat::Csv).unwrap_err(),
            Error::Ingestion { line: Some(2), .. }
        ));

        let p = write(&dir, "text.csv", "molar_mass,abundance\n100,1\n1,0,5\n");
        assert!(matches!(
            load_mwd(&p, DataFormat::Csv).unwrap_err(),
            Error::Ingestion { line: Some(3), .. }
        ));

        let p = write(&dir, "nan.csv", "molar_mass,abundance\nabc,1\n");
        assert!(load_mwd(&p, DataFormat::Csv).is_err());

        let p = write(&dir, "header.csv", "mass,count\n100,1\n");
        assert!(matches!(
            load_mwd(&p, DataFormat::Csv).unwrap_err(),
            Error::Ingestion { line: Some(1), .. }
        ));

        let p = write(&dir, "empty.csv", "molar_mass,abundance\n");
        assert!(load_mwd(&p, DataFormat::Csv).is_err());
    }

    #[test]
    fn json_parse_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(
            &dir,
            "d.json",
            r#"{"label": "x", "species": [{"molar_mass": 100, "abundance": 1}]}"#,
        );
        let d = load_mwd(&p, DataFormat::Json).unwrap();
        assert_eq!(d.label, "x");
        let p = write(
            &dir,
            "bad.json",
            r#"{"label": "x", "species": [{"molar_mass": 100, "abundance": -1}]}"#,
        );
        assert!(load_mwd(&p, DataFormat::Json).is_err());
        let p = write(&dir, "broken.json", "{\n\"label\": 3\n}");
        assert!(matches!(
            load_mwd(&p, DataFormat::Json).unwrap_err(),
            Error::Ingestion { line: Some(_), .. }
        ));
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(DataFormat::from_path(Path::new("a.JSON")), DataFormat::Json);
        assert_eq!(DataFormat::from_path(Path::new("a.csv")), DataFormat::Csv);
        assert_eq!(DataFormat::from_path(Path::new("a")), DataFormat::Csv);
    }

    #[test]
    fn missing_file_is_io_error() {
        let e = load_mwd(Path::new("/nonexistent/x.csv"), DataFormat::Csv).unwrap_err();
        assert!(matches!(e, Error::Io { .. }));
    }
}
