use std::fmt::Write as _;

use crate::families::{chi3, Family};
use crate::measures::Measure;
use crate::spectra::hermitian_eigensystem;
use crate::{Error, Result};

/// Elevation factor over the interior median of `|Δ²f|/h²`.
pub const CUSP_FACTOR: f64 = 10.0;
/// Longest run of elevated points still read as a single slope break.
const MAX_CUSP_RUN: usize = 2;

/// Named series sampled on a common grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCurve {
    pub parameter: String,
    pub grid: Vec<f64>,
    pub series: Vec<(String, Vec<f64>)>,
}

impl SweepCurve {
    pub fn get(&self, name: &str) -> Option<&[f64]> {
        self.series.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    /// CSV with header `<parameter>,<series…>`, 15 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.parameter);
        for (name, _) in &self.series {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, x) in self.grid.iter().enumerate() {
            write!(out, "{x:.14e}").expect("string write");
            for (_, v) in &self.series {
                write!(out, ",{:.14e}", v[i]).expect("string write");
            }
            out.push('\n');
        }
        out
    }
}

/// Evaluates each measure at each grid point of a family. Bipartite measures
/// use the first canonical cut.
pub fn sweep(family: Family, grid: &[f64], measures: &[Measure]) -> Result<SweepCurve> {
    if grid.is_empty() {
        return Err(Error::GridTooShort { need: 1, got: 0 });
    }
    let mut series: Vec<(String, Vec<f64>)> = measures
        .iter()
        .map(|m| (m.name().to_string(), Vec::with_capacity(grid.len())))
        .collect();
    for &x in grid {
        let state = family.state(x)?;
        let first_cut = crate::measures::bipartitions(state.num_subsystems())?.remove(0);
        for (m, (_, values)) in measures.iter().zip(series.iter_mut()) {
            let cut = m.is_bipartite().then_some(&first_cut);
            values.push(m.value(&state, cut)?);
        }
    }
    Ok(SweepCurve {
        parameter: family.parameter().to_string(),
        grid: grid.to_vec(),
        series,
    })
}

fn check_uniform(grid: &[f64]) -> Result<f64> {
    let h = (grid[grid.len() - 1] - grid[0]) / (grid.len() - 1) as f64;
    if h.is_nan() || h <= 0.0 {
        return Err(Error::NonUniformGrid);
    }
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-9 * h.max(1.0) {
            return Err(Error::NonUniformGrid);
        }
    }
    Ok(h)
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Locates slope discontinuities in a sampled series.
///
/// The statistic is `|f[i+1] − 2f[i] + f[i−1]| / h²` over interior points.
/// Points above `CUSP_FACTOR ×` its median (and above a round-off floor) are
/// grouped into contiguous runs. A run counts as one cusp when it is at most
/// two points long and touches neither end of the interior; its largest
/// point is reported. Runs that reach the grid ends are boundary layers
/// (e.g. a measure rising like `ε^{1/3}` from a biseparable endpoint) rather
/// than kinks.
pub fn cusp_scan(series: &[f64], grid: &[f64]) -> Result<Vec<usize>> {
    if grid.len() < 5 {
        return Err(Error::GridTooShort { need: 5, got: grid.len() });
    }
    if series.len() != grid.len() {
        return Err(Error::DimensionMismatch(format!(
            "series of length {} on a grid of {}",
            series.len(),
            grid.len()
        )));
    }
    let h = check_uniform(grid)?;
    let n = grid.len();
    let stat: Vec<f64> = (1..n - 1)
        .map(|i| (series[i + 1] - 2.0 * series[i] + series[i - 1]).abs() / (h * h))
        .collect();
    let scale = series.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let floor = 1e-8 * scale / (h * h);
    let threshold = (CUSP_FACTOR * median(&stat)).max(floor);

    let mut flagged = Vec::new();
    let mut k = 0;
    while k < stat.len() {
        if stat[k] <= threshold {
            k += 1;
            continue;
        }
        let start = k;
        while k < stat.len() && stat[k] > threshold {
            k += 1;
        }
        let end = k; // exclusive
        let touches_edge = start == 0 || end == stat.len();
        if !touches_edge && end - start <= MAX_CUSP_RUN {
            let peak = (start..end).max_by(|&a, &b| stat[a].total_cmp(&stat[b])).expect("nonempty run");
            flagged.push(peak + 1);
        }
    }
    Ok(flagged)
}

/// Largest eigenvalue of each single-qubit reduced state of `χ₃(θ)`.
/// Series are named `lmax_q0`, `lmax_q1`, `lmax_q2` by subsystem index.
pub fn max_eig_curves(grid: &[f64]) -> Result<SweepCurve> {
    let mut series: Vec<(String, Vec<f64>)> =
        (0..3).map(|k| (format!("lmax_q{k}"), Vec::with_capacity(grid.len()))).collect();
    for &theta in grid {
        let s = chi3(theta)?;
        for (k, (_, values)) in series.iter_mut().enumerate() {
            let rho = s.partial_trace(&[k])?;
            values.push(hermitian_eigensystem(rho.matrix())?.values[0]);
        }
    }
    Ok(SweepCurve {
        parameter: "theta".into(),
        grid: grid.to_vec(),
        series,
    })
}

/// Parameter values where `a − b` changes sign, linearly interpolated.
/// Tangential contact without a sign change is not a crossing.
pub fn crossings(a: &[f64], b: &[f64], grid: &[f64]) -> Vec<f64> {
    const ZERO: f64 = 1e-12;
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let mut out = Vec::new();
    let mut last: Option<usize> = None;
    for i in 0..d.len() {
        if d[i].abs() <= ZERO {
            continue;
        }
        if let Some(j) = last {
            if d[j].signum() != d[i].signum() {
                let x = if i == j + 1 {
                    grid[j] + (grid[i] - grid[j]) * d[j] / (d[j] - d[i])
                } else {
                    // zero plateau between j and i: take its midpoint
                    0.5 * (grid[j + 1] + grid[i - 1])
                };
                out.push(x);
            }
        }
        last = Some(i);
    }
    out
}
