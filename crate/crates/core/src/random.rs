//! Seeded sampling of Haar-random states and unitaries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::registers::{PureState, SubsystemDims};
use crate::{CMatrix, Result, C64};

/// Deterministic generator used by property suites and the CLI.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state on `dims`.
pub fn random_state<R: Rng + ?Sized>(dims: &SubsystemDims, rng: &mut R) -> PureState {
    let amps = (0..dims.total()).map(|_| gaussian(rng)).collect();
    PureState::normalized(dims.clone(), amps).expect("gaussian vector is nonzero")
}

/// Haar-random `d × d` unitary: Gram–Schmidt on a complex Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let mut m = CMatrix::from_fn(d, d, |_, _| gaussian(rng));
    for j in 0..d {
        for _pass in 0..2 {
            for k in 0..j {
                let proj = m.column(k).dotc(&m.column(j));
                let ck = m.column(k).into_owned();
                let mut cj = m.column_mut(j);
                cj -= ck * proj;
            }
        }
        let norm = m.column(j).norm();
        m.column_mut(j).unscale_mut(norm);
    }
    m
}

/// Applies an independent Haar-random unitary to every subsystem.
pub fn local_unitary_dressing<R: Rng + ?Sized>(state: &PureState, rng: &mut R) -> Result<PureState> {
    let mut out = state.clone();
    for k in 0..state.num_subsystems() {
        let u = random_unitary(state.dims().get(k), rng);
        out = out.apply_local(k, &u)?;
    }
    Ok(out)
}

/// Uniformly random probability vector of length `n` (flat Dirichlet).
pub fn random_simplex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}
