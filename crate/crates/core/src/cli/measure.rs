use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::CliError;
use crate::families::{ghz, w, Family};
use crate::measures::{Measure, MeasureReport};
use crate::registers::io::{read_state_file, write_state_file};
use crate::{Bipartition, PureState};

/// Where the state for `measure` comes from.
#[derive(Debug, Clone)]
pub enum MeasureInput {
    Family(String),
    File(PathBuf),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_count(s: &str, spec: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| usage(format!("bad register size in family {spec:?}")))
}

/// Parses a family spec such as `ghz3`, `w4`, `bell`, `beta:r=0.2` or
/// `chi3:theta=0.6` into a state.
pub fn parse_family(spec: &str) -> Result<PureState, CliError> {
    let spec = spec.trim();
    if spec == "bell" {
        return Ok(ghz(2)?);
    }
    if let Some((name, arg)) = spec.split_once(':') {
        let family: Family = name.parse().map_err(usage)?;
        let (key, value) = arg
            .split_once('=')
            .ok_or_else(|| usage(format!("expected {}=<value> in {spec:?}", family.parameter())))?;
        if key != family.parameter() {
            return Err(usage(format!("{name} takes {}, not {key}", family.parameter())));
        }
        let x: f64 = value.parse().map_err(|_| usage(format!("bad number {value:?}")))?;
        return Ok(family.state(x)?);
    }
    if let Some(n) = spec.strip_prefix("ghz") {
        return Ok(ghz(parse_count(n, spec)?)?);
    }
    if let Some(n) = spec.strip_prefix('w') {
        return Ok(w(parse_count(n, spec)?)?);
    }
    Err(usage(format!(
        "unknown family {spec:?} (bell, ghzN, wN, beta:r=<x>, chi1|chi2|chi3:theta=<x>)"
    )))
}

fn load(input: &MeasureInput) -> Result<PureState, CliError> {
    match input {
        MeasureInput::Family(spec) => parse_family(spec),
        MeasureInput::File(path) => match read_state_file(path) {
            Ok(parsed) => parsed.map_err(|e| CliError::Parse(format!("{}: {e}", path.display()))),
            Err(e) => Err(usage(format!("cannot read {}: {e}", path.display()))),
        },
    }
}

fn parse_cut(text: &str, n: usize) -> Result<Bipartition, CliError> {
    let block: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad subsystem index {t:?}"))))
        .collect::<Result<_, _>>()?;
    Ok(Bipartition::new(n, &block)?)
}

fn default_measures(n: usize, dims: &[usize]) -> Vec<Measure> {
    if n == 2 {
        return vec![Measure::Sgm, Measure::Gm, Measure::Concurrence];
    }
    let mut m = vec![Measure::Gms, Measure::Gbc, Measure::Ggm, Measure::Gmc];
    if dims == [2, 2, 2] {
        m.push(Measure::Fill);
    }
    m
}

/// Evaluates measures on one state, printing a summary to `w` and, when
/// `out` is given, writing `measure.csv` (plus `sgm_witness.txt` for SGM).
pub fn run_measure(
    input: &MeasureInput,
    measures: &[Measure],
    bipartition: Option<&str>,
    out: Option<&Path>,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let state = load(input)?;
    let n = state.num_subsystems();
    let cut = bipartition.map(|b| parse_cut(b, n)).transpose()?;
    let measures = if measures.is_empty() {
        default_measures(n, state.dims().as_slice())
    } else {
        measures.to_vec()
    };

    let reports: Vec<MeasureReport> = measures
        .iter()
        .map(|m| {
            let c = if m.is_bipartite() { cut.as_ref() } else { None };
            m.evaluate(&state, c)
        })
        .collect::<crate::Result<_>>()?;

    writeln!(w, "state dims {}", state.dims())?;
    let mut csv = String::from("measure,bipartition,value\n");
    for r in &reports {
        if !r.value.is_finite() {
            return Err(CliError::Numeric(format!("{} evaluated to {}", r.name, r.value)));
        }
        writeln!(w, "{} = {:.15}", r.name, r.value)?;
        writeln!(csv, "{},,{:.16e}", r.name, r.value).expect("string write");
        for (bp, v) in r.per_bipartition.iter().flatten() {
            writeln!(w, "  {bp}: {v:.15}")?;
            writeln!(csv, "{},{bp},{v:.16e}", r.name).expect("string write");
        }
    }

    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("measure.csv");
        std::fs::write(&path, csv)?;
        writeln!(w, "wrote {}", path.display())?;
        if let Some(witness) = reports.iter().find_map(|r| r.witness.as_ref()) {
            let path = dir.join("sgm_witness.txt");
            write_state_file(&path, witness)?;
            writeln!(w, "wrote {}", path.display())?;
        }
    }
    Ok(())
}
