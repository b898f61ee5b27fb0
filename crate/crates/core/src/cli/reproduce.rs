use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::svg::line_plot;
use super::CliError;
use crate::families::{crossings, cusp_scan, linspace, max_eig_curves, sweep, Family, SweepCurve};
use crate::measures::Measure;
use crate::teleport::{beta_r, fidelity_avg, teleport_once, ChannelState, InputState};

/// Probability mass of the six teleportation branches must stay within this of 1.
const PROBABILITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Average teleportation fidelity against `r`.
    Fig2,
    /// SGM and GM along `β(r)`.
    Fig3,
    /// Multipartite measures on `χ₁` and `χ₂`.
    Fig4,
    /// Multipartite measures on `χ₃` with cusp locations.
    Fig5,
    /// Single-qubit maximal eigenvalues of `χ₃`.
    Fig6,
}

impl Figure {
    pub const ALL: [Figure; 5] = [Figure::Fig2, Figure::Fig3, Figure::Fig4, Figure::Fig5, Figure::Fig6];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
        }
    }

    /// Grid size used when none is given.
    pub fn default_grid(self) -> usize {
        match self {
            Figure::Fig2 => 101,
            Figure::Fig3 => 11,
            _ => 201,
        }
    }
}

/// Number of `r` samples in the fidelity curve.
pub const FIG2_R_POINTS: usize = 51;

/// Writes the CSV (and SVG) files for one figure into `out`, returning the
/// paths written. For `Fig2` the grid is the per-axis input-state grid; for
/// the others it is the number of parameter samples.
pub fn reproduce(fig: Figure, out: &Path, grid: Option<usize>) -> Result<Vec<PathBuf>, CliError> {
    let n = grid.unwrap_or(fig.default_grid());
    if n < 2 {
        return Err(CliError::Usage(format!("grid must have at least 2 points, got {n}")));
    }
    let mut written = Vec::new();
    let mut put = |name: String, contents: String| -> Result<(), CliError> {
        let path = out.join(name);
        std::fs::write(&path, contents)?;
        written.push(path);
        Ok(())
    };
    let base = fig.name();
    match fig {
        Figure::Fig2 => {
            let ideal = fidelity_avg(&ChannelState::ideal(), n, n)?;
            let rs = linspace(0.0, 0.5, FIG2_R_POINTS);
            let mut f_av = Vec::with_capacity(rs.len());
            for &r in &rs {
                let channel = beta_r(r)?;
                check_probabilities(&channel)?;
                let f = fidelity_avg(&channel, n, n)?;
                if f.is_nan() || f > 1.0 + 1e-12 {
                    return Err(CliError::Numeric(format!("average fidelity {f} exceeds 1 at r = {r}")));
                }
                f_av.push(f);
            }
            let curve = SweepCurve {
                parameter: "r".into(),
                grid: rs,
                series: vec![("f_av".into(), f_av)],
            };
            let csv = format!("# ideal_channel f_av={ideal:.16e} grid={n}x{n}\n{}", curve.to_csv());
            put(format!("{base}.csv"), csv)?;
            put(format!("{base}.svg"), plot(&curve, "average fidelity"))?;
        }
        Figure::Fig3 => {
            let curve = sweep(Family::Beta, &linspace(0.0, 0.5, n), &[Measure::Sgm, Measure::Gm])?;
            put(format!("{base}.csv"), curve.to_csv())?;
            put(format!("{base}.svg"), plot(&curve, "sgm and gm on beta(r)"))?;
        }
        Figure::Fig4 => {
            let grid = linspace(0.0, FRAC_PI_2, n);
            let measures = [Measure::Ggm, Measure::Gmc, Measure::Fill, Measure::Gms];
            let a = sweep(Family::Chi1, &grid, &measures)?;
            let b = sweep(Family::Chi2, &grid, &measures)?;
            let mut series = Vec::new();
            for m in measures {
                series.push((format!("{}_chi1", m.name()), a.get(m.name()).expect("swept").to_vec()));
                series.push((format!("{}_chi2", m.name()), b.get(m.name()).expect("swept").to_vec()));
            }
            let curve = SweepCurve {
                parameter: "theta".into(),
                grid,
                series,
            };
            put(format!("{base}.csv"), curve.to_csv())?;
            put(format!("{base}.svg"), plot(&curve, "chi1 and chi2"))?;
        }
        Figure::Fig5 => {
            let grid = linspace(0.0, FRAC_PI_2, n);
            let measures = [Measure::Gms, Measure::Gbc, Measure::Ggm, Measure::Gmc, Measure::Fill];
            let curve = sweep(Family::Chi3, &grid, &measures)?;
            let mut cusps = String::from("measure,index,theta\n");
            if n >= 5 {
                for (name, values) in &curve.series {
                    for i in cusp_scan(values, &grid)? {
                        writeln!(cusps, "{name},{i},{:.14e}", grid[i]).expect("string write");
                    }
                }
            }
            put(format!("{base}.csv"), curve.to_csv())?;
            put(format!("{base}_cusps.csv"), cusps)?;
            put(format!("{base}.svg"), plot(&curve, "chi3"))?;
        }
        Figure::Fig6 => {
            let grid = linspace(0.0, FRAC_PI_2, n);
            let curve = max_eig_curves(&grid)?;
            let mut table = String::from("series_a,series_b,theta,nearest_index\n");
            let names: Vec<&str> = curve.series.iter().map(|(s, _)| s.as_str()).collect();
            for i in 0..names.len() {
                for j in i + 1..names.len() {
                    let a = curve.get(names[i]).expect("present");
                    let b = curve.get(names[j]).expect("present");
                    for x in crossings(a, b, &grid) {
                        let k = nearest_index(&grid, x);
                        writeln!(table, "{},{},{x:.14e},{k}", names[i], names[j]).expect("string write");
                    }
                }
            }
            put(format!("{base}.csv"), curve.to_csv())?;
            put(format!("{base}_crossover.csv"), table)?;
            put(format!("{base}.svg"), plot(&curve, "single-qubit maximal eigenvalues of chi3"))?;
        }
    }
    Ok(written)
}

fn plot(curve: &SweepCurve, title: &str) -> String {
    line_plot(title, &curve.parameter, &curve.grid, &curve.series)
}

fn nearest_index(grid: &[f64], x: f64) -> usize {
    (0..grid.len())
        .min_by(|&a, &b| (grid[a] - x).abs().total_cmp(&(grid[b] - x).abs()))
        .unwrap_or(0)
}

/// Spot-checks that the branch probabilities sum to one on a few inputs.
fn check_probabilities(channel: &ChannelState) -> Result<(), CliError> {
    for (alpha, theta) in [(0.0, 0.0), (0.3, 1.1), (0.5, 2.0), (1.0, 4.0)] {
        let run = teleport_once(&InputState::new(alpha, theta)?, channel)?;
        let total: f64 = run.outcomes.iter().map(|o| o.probability).sum();
        if (total - 1.0).abs() > PROBABILITY_TOL {
            return Err(CliError::Numeric(format!(
                "branch probabilities sum to {total} at alpha = {alpha}, theta = {theta}"
            )));
        }
    }
    Ok(())
}
