use crate::measures::bipartite::{concurrence_from_spectrum, gm_from_spectrum, sgm_from_spectrum};
use crate::measures::MeasureReport;
use crate::registers::{Bipartition, PureState};
use crate::spectra::{schmidt, SchmidtSpectrum};
use crate::{Error, Result};

/// All canonical bipartitions of `n` subsystems, ordered by `|block_a|` and
/// then lexicographically.
pub fn bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    if n < 2 {
        return Err(Error::InvalidSubsystems(format!(
            "bipartitions need at least 2 subsystems, got {n}"
        )));
    }
    let mut out = Vec::new();
    for size in 1..=n / 2 {
        for block in combinations(n, size) {
            if 2 * size == n && block[0] != 0 {
                continue;
            }
            out.push(Bipartition::new(n, &block)?);
        }
    }
    Ok(out)
}

/// Lexicographic `size`-subsets of `0..n`.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.clone());
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of distinct bipartitions of `n` parties:
/// `Σ_{i=1}^{(n−1)/2} C(n,i)` for odd `n`,
/// `Σ_{i=1}^{(n−2)/2} C(n,i) + C(n,n/2)/2` for even `n`.
pub fn bipartition_count(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    if n % 2 == 1 {
        (1..=(n - 1) / 2).map(|i| binomial(n, i)).sum()
    } else {
        (1..=(n - 2) / 2).map(|i| binomial(n, i)).sum::<usize>() + binomial(n, n / 2) / 2
    }
}

/// Schmidt spectra of every canonical cut, in canonical order.
pub fn cut_spectra(state: &PureState) -> Result<Vec<(Bipartition, SchmidtSpectrum)>> {
    bipartitions(state.num_subsystems())?
        .into_iter()
        .map(|bp| {
            let s = schmidt(state, &bp)?.spectrum;
            Ok((bp, s))
        })
        .collect()
}

/// `(Π x_i)^{1/m}`; exactly 0 when any factor is 0.
pub fn geometric_mean(values: &[f64]) -> f64 {
    if values.is_empty() || values.iter().any(|&v| v <= 0.0) {
        return 0.0;
    }
    let mean_log = values.iter().map(|v| v.ln()).sum::<f64>() / values.len() as f64;
    mean_log.exp().clamp(0.0, 1.0)
}

fn per_cut<F>(state: &PureState, f: F) -> Result<Vec<(Bipartition, f64)>>
where
    F: Fn(&SchmidtSpectrum) -> Result<f64>,
{
    cut_spectra(state)?
        .into_iter()
        .map(|(bp, s)| Ok((bp, f(&s)?)))
        .collect()
}

fn values(cuts: &[(Bipartition, f64)]) -> Vec<f64> {
    cuts.iter().map(|(_, v)| *v).collect()
}

/// Geometric mean of the sharp geometric measure over all bipartitions.
pub fn gms(state: &PureState) -> Result<MeasureReport> {
    let cuts = per_cut(state, sgm_from_spectrum)?;
    let value = geometric_mean(&values(&cuts));
    Ok(MeasureReport::with_cuts("gms", value, cuts))
}

/// Geometric mean of bipartite concurrences.
pub fn gbc(state: &PureState) -> Result<MeasureReport> {
    let cuts = per_cut(state, |s| Ok(concurrence_from_spectrum(s)))?;
    let value = geometric_mean(&values(&cuts));
    Ok(MeasureReport::with_cuts("gbc", value, cuts))
}

/// Generalized geometric measure: `1 − max_cut λ_max`. Per-cut entries hold
/// `1 − λ_max` of each cut.
pub fn ggm(state: &PureState) -> Result<MeasureReport> {
    let cuts = per_cut(state, |s| Ok(gm_from_spectrum(s)))?;
    let value = values(&cuts).into_iter().fold(f64::INFINITY, f64::min);
    Ok(MeasureReport::with_cuts("ggm", value, cuts))
}

/// Genuinely multipartite concurrence: the smallest cut concurrence.
pub fn gmc(state: &PureState) -> Result<MeasureReport> {
    let cuts = per_cut(state, |s| Ok(concurrence_from_spectrum(s)))?;
    let value = values(&cuts).into_iter().fold(f64::INFINITY, f64::min);
    Ok(MeasureReport::with_cuts("gmc", value, cuts))
}

/// Concurrence fill of a three-qubit state:
/// `[(16/3) Q (Q − C₀²)(Q − C₁²)(Q − C₂²)]^{1/4}`, `Q = (C₀² + C₁² + C₂²)/2`,
/// with `C_k` the concurrence of qubit `k` against the other two.
pub fn concurrence_fill(state: &PureState) -> Result<f64> {
    if state.dims().as_slice() != [2, 2, 2] {
        return Err(Error::WrongShape(state.dims().as_slice().to_vec()));
    }
    let mut sq = [0.0; 3];
    for (k, c2) in sq.iter_mut().enumerate() {
        let bp = Bipartition::new(3, &[k])?;
        let s = schmidt(state, &bp)?.spectrum;
        let purity: f64 = s.lambdas().iter().map(|l| l * l).sum();
        *c2 = (2.0 * (1.0 - purity)).max(0.0);
    }
    let q = sq.iter().sum::<f64>() / 2.0;
    let radicand = 16.0 / 3.0 * q * (q - sq[0]) * (q - sq[1]) * (q - sq[2]);
    Ok(radicand.max(0.0).powf(0.25).clamp(0.0, 1.0))
}

/// Concurrence fill wrapped as a report (per-cut entries hold `C_k`).
pub fn concurrence_fill_report(state: &PureState) -> Result<MeasureReport> {
    let value = concurrence_fill(state)?;
    let cuts = per_cut(state, |s| Ok(concurrence_from_spectrum(s)))?;
    Ok(MeasureReport::with_cuts("fill", value, cuts))
}
