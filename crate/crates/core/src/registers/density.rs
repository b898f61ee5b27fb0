use crate::registers::{PureState, SubsystemDims};
use crate::spectra::{hermitian_eigensystem, psd_sqrt};
use crate::{CMatrix, Error, Result, C64};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-9;
pub const EIGEN_FLOOR: f64 = -1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix on a register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: SubsystemDims,
    rho: CMatrix,
}

impl DensityMatrix {
    /// Validates and wraps `rho` (Hermiticity, trace, eigenvalue floor).
    pub fn new(dims: SubsystemDims, rho: CMatrix) -> Result<Self> {
        let out = Self::from_parts(dims, rho)?;
        let dev = hermitian_deviation(&out.rho);
        if dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let tr = out.rho.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr}")));
        }
        let eig = hermitian_eigensystem(&out.rho)?;
        if let Some(&min) = eig.values.last() {
            if min < EIGEN_FLOOR {
                return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
            }
        }
        Ok(out)
    }

    /// Shape check only; used where validity holds by construction.
    pub(crate) fn from_parts(dims: SubsystemDims, rho: CMatrix) -> Result<Self> {
        let n = dims.total();
        if rho.nrows() != n || rho.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on register {dims}",
                rho.nrows(),
                rho.ncols()
            )));
        }
        Ok(Self { dims, rho })
    }

    /// `Σ_k p_k |ψ_k⟩⟨ψ_k|` for a probability-weighted ensemble.
    pub fn mixture(ensemble: &[(f64, PureState)]) -> Result<Self> {
        let first = ensemble
            .first()
            .ok_or_else(|| Error::InvalidDensity("empty ensemble".into()))?;
        let dims = first.1.dims().clone();
        let n = dims.total();
        let mut rho = CMatrix::zeros(n, n);
        for (p, psi) in ensemble {
            if psi.dims() != &dims {
                return Err(Error::DimensionMismatch("ensemble members differ in shape".into()));
            }
            let a = psi.amplitudes();
            rho += (a * a.adjoint()) * C64::new(*p, 0.0);
        }
        Self::new(dims, rho)
    }

    /// `I / d` on the given register.
    pub fn maximally_mixed(dims: SubsystemDims) -> Self {
        let n = dims.total();
        let rho = CMatrix::identity(n, n) * C64::new(1.0 / n as f64, 0.0);
        Self { dims, rho }
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.rho
    }

    pub fn trace(&self) -> C64 {
        self.rho.trace()
    }

    /// Traces out everything except `keep` (sorted ascending in the result).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        self.dims.check_block(keep)?;
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let rest = self.dims.complement(&keep);
        let kept_dims = self.dims.select(&keep)?;
        let nk = kept_dims.total();
        let nr = self.dims.block_dim(&rest);
        let strides = self.dims.strides();
        let index_of = |kd: &[usize], rd: &[usize]| -> usize {
            keep.iter().zip(kd).map(|(&k, d)| strides[k] * d).sum::<usize>()
                + rest.iter().zip(rd).map(|(&k, d)| strides[k] * d).sum::<usize>()
        };
        let rest_dims: Vec<usize> = rest.iter().map(|&k| self.dims.get(k)).collect();
        let split = |mut i: usize, dims: &[usize]| -> Vec<usize> {
            let mut out = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                out[k] = i % dims[k];
                i /= dims[k];
            }
            out
        };
        let mut out = CMatrix::zeros(nk, nk);
        for i in 0..nk {
            let di = kept_dims.digits(i);
            for j in 0..nk {
                let dj = kept_dims.digits(j);
                let mut acc = C64::new(0.0, 0.0);
                for r in 0..nr {
                    let dr = split(r, &rest_dims);
                    acc += self.rho[(index_of(&di, &dr), index_of(&dj, &dr))];
                }
                out[(i, j)] = acc;
            }
        }
        Self::from_parts(kept_dims, out)
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        // Tr(ρ ρ) = Σ_ij ρ_ij ρ_ji = Σ_ij |ρ_ij|² for Hermitian ρ
        self.rho.iter().map(|z| z.norm_sqr()).sum()
    }
}

fn hermitian_deviation(m: &CMatrix) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// `√⟨ψ|ρ|ψ⟩`.
pub fn fidelity_pure_mixed(psi: &PureState, rho: &DensityMatrix) -> Result<f64> {
    if psi.amplitudes().len() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state of length {} vs {}x{} density",
            psi.amplitudes().len(),
            rho.dim(),
            rho.dim()
        )));
    }
    let a = psi.amplitudes();
    let expectation = a.dotc(&(rho.matrix() * a)).re;
    Ok(expectation.clamp(0.0, 1.0).sqrt())
}

/// Uhlmann root fidelity `Tr √(√ρ σ √ρ)`.
pub fn uhlmann_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let root = psd_sqrt(rho.matrix())?;
    let inner = &root * sigma.matrix() * &root;
    // symmetrize against round-off before the second eigensolve
    let inner = (&inner + inner.adjoint()) * C64::new(0.5, 0.0);
    let eig = hermitian_eigensystem(&inner)?;
    Ok(eig.values.iter().map(|&l| l.max(0.0).sqrt()).sum())
}

/// Bures distance `√(2(1 − F))` with `F` the root fidelity.
pub fn bures_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    let f = uhlmann_fidelity(rho, sigma)?;
    Ok((2.0 * (1.0 - f)).max(0.0).sqrt())
}

/// Bures distance to `𝟙/n`. Since `𝟙/n` commutes with `ρ`, the squared
/// distance equals `‖√ρ − 𝟙/√n‖²_F`, which is free of the cancellation in
/// `2(1 − F)` when `ρ` is close to maximally mixed.
pub fn bures_distance_to_maximally_mixed(rho: &DensityMatrix) -> Result<f64> {
    let n = rho.dim();
    let shift = C64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut root = psd_sqrt(rho.matrix())?;
    for i in 0..n {
        root[(i, i)] -= shift;
    }
    Ok(root.norm())
}
