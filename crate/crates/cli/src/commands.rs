// SPDX-License-Identifier: MIT OR Apache-2.0

use std::io::Write;
use std::path::Path;

use gini_core::format::format_number;
use gini_core::polymer::{
    generate_flory, generate_lognormal, generate_poisson, load_mwd, polydispersity_with,
    write_atomic, DataFormat, MWDataset,
};
use gini_core::sampling::SampleShape;
use gini_core::{
    equivalence_report, gini_mean, lehmer_mean, power_mean, scan_monotonicity, AuditVerdict,
    EquivalenceSummary, ExponentPair, OracleConfig, PositiveSample,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::failure::Failure;
use crate::plot::{render_csv, render_svg, Histogram, Mark};
use crate::{GenerateCommand, MeanArgs, OutputFormat, PlotArgs, ReportArgs, VerifyArgs};

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<MWDataset, Failure> {
    Ok(load_mwd(path, DataFormat::from_path(path))?)
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => write_atomic(path, text.as_bytes())?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Data(format!("standard output: {e}")))?;
        }
    }
    Ok(())
}

pub fn mean(args: &MeanArgs) -> Outcome {
    let sample = match &args.input {
        Some(path) => load(path)?.to_sample(),
        None => PositiveSample::new(args.values.clone())?,
    };
    let value = match (args.p, args.q, args.r, args.lehmer) {
        (Some(p), Some(q), _, _) => gini_mean(&sample, ExponentPair::new(p, q)?),
        (_, _, Some(r), _) => power_mean(&sample, r)?,
        (_, _, _, Some(p)) => lehmer_mean(&sample, p)?,
        _ => unreachable!("clap requires exactly one selector"),
    };
    println!("{}", format_number(value));
    Ok(())
}

pub fn report(args: &ReportArgs) -> Outcome {
    // parameters are checked before the file is touched
    let probe = MWDataset::from_pairs("probe", &[(1.0, 1.0)])?;
    polydispersity_with(&probe, args.s, args.b, &args.custom)?;
    let mwd = load(&args.input)?;
    let report = polydispersity_with(&mwd, args.s, args.b, &args.custom)?;
    let text = match args.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.to_text(),
    };
    emit(args.out.as_deref(), &text)
}

/// Pairs tracing every exponent pair that names a classical mean, as chains
/// ordered by the monotonicity theorem.
pub const DEFAULT_GRID: [&[(f64, f64)]; 2] = [
    &[(1.0, -1.0), (1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (3.0, 2.0)],
    &[(1.5, -1.5), (2.0, 0.0), (2.0, 1.0), (3.0, 2.0)],
];

fn parse_grid(text: &str) -> Result<Vec<Vec<ExponentPair>>, Failure> {
    let chains: Vec<Vec<(f64, f64)>> = if text.trim() == "default" {
        DEFAULT_GRID.iter().map(|c| c.to_vec()).collect()
    } else {
        text.split(';')
            .map(|chain| {
                chain
                    .split(',')
                    .map(|pair| {
                        crate::parse_pair(pair).map_err(|m| Failure::Usage(format!("grid: {m}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    let mut out = Vec::with_capacity(chains.len());
    for chain in chains {
        if chain.len() < 2 {
            return Err(Failure::Usage(
                "grid: every chain needs at least two pairs".into(),
            ));
        }
        let pairs = chain
            .iter()
            .map(|&(p, q)| ExponentPair::new(p, q))
            .collect::<gini_core::Result<Vec<_>>>()?;
        // validates the order on a throwaway sample so usage errors come first
        scan_monotonicity(&PositiveSample::new(vec![1.0])?, &pairs)?;
        out.push(pairs);
    }
    Ok(out)
}

#[derive(Serialize)]
struct CheckRecord {
    sample: usize,
    lower: [f64; 2],
    upper: [f64; 2],
    verdict: AuditVerdict,
}

#[derive(Serialize)]
struct VerifyReport {
    samples: usize,
    checks: usize,
    held: usize,
    degenerate: usize,
    failed: usize,
    records: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<EquivalenceSummary>,
}

fn status(v: &AuditVerdict) -> &'static str {
    if v.degenerate {
        "degenerate"
    } else if v.weak {
        "holds-weak"
    } else if v.holds {
        "holds"
    } else {
        "FAILS"
    }
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let chains = parse_grid(&args.grid)?;
    if !(args.rel_tol >= 0.0 && args.rel_tol.is_finite()) {
        return Err(Failure::Usage(format!(
            "--rel-tol must be finite and non-negative, got {}",
            args.rel_tol
        )));
    }
    let samples = match (&args.input, &args.random) {
        (Some(path), _) => vec![load(path)?.to_sample()],
        (None, Some(seed_n)) => {
            let (seed, n) = (seed_n[0], seed_n[1]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| SampleShape::AUDIT.draw(&mut rng)).collect()
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let mut records = Vec::new();
    for (i, sample) in samples.iter().enumerate() {
        for chain in &chains {
            for (w, verdict) in chain.windows(2).zip(scan_monotonicity(sample, chain)?) {
                records.push(CheckRecord {
                    sample: i,
                    lower: [w[0].p(), w[0].q()],
                    upper: [w[1].p(), w[1].q()],
                    verdict,
                });
            }
        }
    }
    let mut out = String::new();
    for r in &records {
        out.push_str(&format!(
            "sample {} ({},{}) < ({},{}) {} margin {} log_margin {}\n",
            r.sample,
            format_number(r.lower[0]),
            format_number(r.lower[1]),
            format_number(r.upper[0]),
            format_number(r.upper[1]),
            status(&r.verdict),
            format_number(r.verdict.margin),
            format_number(r.verdict.log_margin),
        ));
    }
    let held = records.iter().filter(|r| r.verdict.holds).count();
    let degenerate = records.iter().filter(|r| r.verdict.degenerate).count();
    let failed = records.iter().filter(|r| !r.verdict.passed()).count();
    out.push_str(&format!(
        "checks {} held {held} degenerate {degenerate} failed {failed}\n",
        records.len()
    ));
    let oracle = if args.oracle {
        let mut pairs: Vec<ExponentPair> = chains.iter().flatten().copied().collect();
        pairs.sort_by(|a, b| (a.p(), a.q()).partial_cmp(&(b.p(), b.q())).unwrap());
        pairs.dedup();
        let summary = equivalence_report(&samples, &pairs, &OracleConfig::default(), args.rel_tol)?;
        out.push_str(&format!(
            "oracle cases {} max_relative_error {} tolerance {} {}\n",
            summary.cases,
            format_number(summary.max_relative_error),
            format_number(summary.rel_tol),
            if summary.passed { "pass" } else { "FAIL" },
        ));
        Some(summary)
    } else {
        None
    };
    emit(None, &out)?;
    let outcome = conclude(records.iter().map(|r| &r.verdict), oracle.as_ref());
    if let Some(path) = &args.report {
        let report = VerifyReport {
            samples: samples.len(),
            checks: records.len(),
            held,
            degenerate,
            failed,
            records,
            oracle,
        };
        let mut json = serde_json::to_string_pretty(&report)
            .map_err(|e| Failure::Data(format!("report: {e}")))?;
        json.push('\n');
        write_atomic(path, json.as_bytes())?;
    }
    outcome
}

/// Exit status of a verification run: every check passed (held or was
/// degenerate) and the oracle comparison, if any, stayed within tolerance.
fn conclude<'a>(
    verdicts: impl IntoIterator<Item = &'a AuditVerdict>,
    oracle: Option<&EquivalenceSummary>,
) -> Outcome {
    let checks_ok = verdicts.into_iter().all(AuditVerdict::passed);
    if checks_ok && oracle.is_none_or(|s| s.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub fn generate(cmd: &GenerateCommand) -> Outcome {
    let (mwd, out) = match cmd {
        GenerateCommand::Flory { m0, x, tail, out } => (generate_flory(*m0, *x, *tail)?, out),
        GenerateCommand::Poisson {
            m0,
            mean_degree,
            out,
        } => (generate_poisson(*m0, *mean_degree)?, out),
        GenerateCommand::Lognormal {
            median,
            sigma,
            n,
            out,
        } => (generate_lognormal(*median, *sigma, *n)?, out),
    };
    match out {
        Some(path) => match DataFormat::from_path(path) {
            DataFormat::Csv => emit(Some(path), &mwd.to_csv()),
            DataFormat::Json => emit(Some(path), &mwd.to_json()),
        },
        None => emit(None, &mwd.to_csv()),
    }
}

pub fn plot(args: &PlotArgs) -> Outcome {
    let marks = Mark::parse_list(&args.marks)?;
    if args.bins == 0 {
        return Err(Failure::Usage("--bins must be at least 1".into()));
    }
    let probe = MWDataset::from_pairs("probe", &[(1.0, 1.0)])?;
    gini_core::polymer::viscosity_average(&probe, args.s)?;
    let svg = match args.out.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("svg") => true,
        Some(e) if e.eq_ignore_ascii_case("csv") => false,
        _ => return Err(Failure::Usage("--out must end in .svg or .csv".into())),
    };
    let mwd = load(&args.input)?;
    let hist = Histogram::new(&mwd, args.bins);
    let values = marks
        .iter()
        .map(|m| Ok((*m, m.value(&mwd, args.s)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    let text = if svg {
        render_svg(&mwd.label, &hist, &values)
    } else {
        render_csv(&hist, &values)
    };
    emit(Some(&args.out), &text)
}
