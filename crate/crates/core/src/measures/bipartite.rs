use crate::registers::{bures_distance_to_maximally_mixed, Bipartition, PureState};
use crate::spectra::{schmidt, SchmidtSpectrum};
use crate::{CMatrix, CVector, Error, Result, C64};

/// Normalizer `N₁ = √(1 − 1/√n_A)`: the distance from any product state to
/// its closest maximally entangled state.
pub fn product_distance(n_a: usize) -> f64 {
    (1.0 - 1.0 / (n_a as f64).sqrt()).sqrt()
}

/// Sharp geometric measure from Schmidt coefficients:
/// `1 − √(1 − Σ√λ_i / √n_A) / N₁`, clamped to `[0, 1]`.
///
/// The radicand is evaluated as `½ Σ (√λ_i − 1/√n_A)²` over all `n_A`
/// slots (equal when `Σλ_i = 1`), which avoids cancellation near maximally
/// entangled cuts.
pub fn sgm_from_spectrum(s: &SchmidtSpectrum) -> Result<f64> {
    let n_a = s.n_a();
    if n_a < 2 {
        return Err(Error::SchmidtRankTooSmall(n_a));
    }
    if s.rank() == 1 {
        return Ok(0.0);
    }
    let gap = 0.5 * sq_dist_to_uniform_roots(s.lambdas(), n_a);
    Ok((1.0 - gap.sqrt() / product_distance(n_a)).clamp(0.0, 1.0))
}

/// `Σ_{i<n} (√λ_i − 1/√n)²`, with absent entries taken as zero.
fn sq_dist_to_uniform_roots(lambdas: &[f64], n: usize) -> f64 {
    let u = 1.0 / (n as f64).sqrt();
    let present: f64 = lambdas.iter().map(|&l| (l.max(0.0).sqrt() - u).powi(2)).sum();
    present + (n - lambdas.len()) as f64 * u * u
}

/// Standard geometric measure in the squared-overlap convention, `1 − λ_max`.
pub fn gm_from_spectrum(s: &SchmidtSpectrum) -> f64 {
    (1.0 - s.max()).clamp(0.0, 1.0)
}

/// Concurrence `√(2(1 − Tr ρ_A²))` from the cut spectrum, divided by its
/// maximum `√(2(1 − 1/n_A))` so that it lies in `[0, 1]`. The divisor is 1
/// for qubit cuts.
///
/// `1 − Tr ρ_A²` is summed as `2 Σ_{i<j} λ_i λ_j` to stay accurate near
/// product cuts.
pub fn concurrence_from_spectrum(s: &SchmidtSpectrum) -> f64 {
    let mut tail = 0.0;
    let mut cross = 0.0;
    for &l in s.lambdas().iter().rev() {
        cross += l * tail;
        tail += l;
    }
    let raw = (4.0 * cross).max(0.0).sqrt();
    let max = (2.0 * (1.0 - 1.0 / s.n_a() as f64)).sqrt();
    (raw / max).clamp(0.0, 1.0)
}

pub fn sgm(state: &PureState, bp: &Bipartition) -> Result<f64> {
    sgm_from_spectrum(&schmidt(state, bp)?.spectrum)
}

pub fn gm(state: &PureState, bp: &Bipartition) -> Result<f64> {
    Ok(gm_from_spectrum(&schmidt(state, bp)?.spectrum))
}

pub fn bip_concurrence(state: &PureState, bp: &Bipartition) -> Result<f64> {
    Ok(concurrence_from_spectrum(&schmidt(state, bp)?.spectrum))
}

/// SGM through the reduced-state route: Bures distance between the smaller
/// block's reduced density and the maximally mixed state, normalized by the
/// Bures distance `N₂ = √2 · √(1 − 1/√n_A)` of a pure reduced state.
///
/// Works on the reduced density matrix alone, not the Schmidt coefficients.
pub fn sgm_via_bures(state: &PureState, bp: &Bipartition) -> Result<f64> {
    state.check_bipartition(bp)?;
    let dims = state.dims();
    let (da, db) = (dims.block_dim(bp.block_a()), dims.block_dim(bp.block_b()));
    let smaller = if da <= db { bp.block_a() } else { bp.block_b() };
    let rho = state.partial_trace(smaller)?;
    let n_a = rho.dim();
    let d = bures_distance_to_maximally_mixed(&rho)?;
    let n2 = 2f64.sqrt() * (1.0 - 1.0 / (n_a as f64).sqrt()).sqrt();
    Ok((1.0 - d / n2).clamp(0.0, 1.0))
}

/// Closest maximally entangled state: the Schmidt vectors of `state` with all
/// coefficients set to `1/√n_A`. Missing Schmidt vectors (rank < n_A) are
/// completed by Gram–Schmidt against the standard basis.
pub fn closest_maximally_entangled(state: &PureState, bp: &Bipartition) -> Result<PureState> {
    let dec = schmidt(state, bp)?;
    let n_a = dec.spectrum.n_a();
    let left = complete_orthonormal(&dec.left, n_a);
    let right = complete_orthonormal(&dec.right, n_a);
    let w = C64::new(1.0 / (n_a as f64).sqrt(), 0.0);
    let m = (&left * right.transpose()) * w;
    PureState::from_block_matrix(state.dims().clone(), bp.block_a(), bp.block_b(), &m)
}

/// Extends the orthonormal columns of `v` to `target` columns.
fn complete_orthonormal(v: &CMatrix, target: usize) -> CMatrix {
    let dim = v.nrows();
    let mut cols: Vec<CVector> = (0..v.ncols()).map(|k| v.column(k).into_owned()).collect();
    let mut e = 0;
    while cols.len() < target && e < dim {
        let mut cand = CVector::zeros(dim);
        cand[e] = C64::new(1.0, 0.0);
        e += 1;
        for _pass in 0..2 {
            for c in &cols {
                let proj = c.dotc(&cand);
                cand -= c * proj;
            }
        }
        let norm = cand.norm();
        if norm > 1e-8 {
            cols.push(cand.unscale(norm));
        }
    }
    CMatrix::from_columns(&cols)
}
