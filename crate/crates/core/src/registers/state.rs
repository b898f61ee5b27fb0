use crate::registers::{Bipartition, DensityMatrix, SubsystemDims};
use crate::{CMatrix, CVector, Error, Result, C64};

/// Accepted deviation of an input norm from 1 before renormalising.
pub const INPUT_NORM_TOL: f64 = 1e-6;

/// A normalized pure state on a qudit register.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: SubsystemDims,
    amps: CVector,
}

impl PureState {
    /// Builds a state from amplitudes whose norm is already within
    /// [`INPUT_NORM_TOL`] of 1, then renormalizes exactly.
    pub fn new(dims: SubsystemDims, amps: Vec<C64>) -> Result<Self> {
        let (state, norm) = Self::from_unnormalized(dims, amps)?;
        if (norm - 1.0).abs() > INPUT_NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(state)
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn normalized(dims: SubsystemDims, amps: Vec<C64>) -> Result<Self> {
        Self::from_unnormalized(dims, amps).map(|(s, _)| s)
    }

    fn from_unnormalized(dims: SubsystemDims, amps: Vec<C64>) -> Result<(Self, f64)> {
        let expected = dims.total();
        if amps.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: amps.len(),
            });
        }
        let mut amps = CVector::from_vec(amps);
        let norm = amps.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        // already unit to round-off: keep the input bits untouched
        if (norm - 1.0).abs() > 1e-14 {
            amps.unscale_mut(norm);
        }
        Ok((Self { dims, amps }, norm))
    }

    /// Convenience constructor from real amplitudes.
    pub fn from_real(dims: &[usize], amps: &[f64]) -> Result<Self> {
        Self::new(
            SubsystemDims::new(dims.to_vec())?,
            amps.iter().map(|&a| C64::new(a, 0.0)).collect(),
        )
    }

    /// Computational basis state `|digits⟩`.
    pub fn basis(dims: SubsystemDims, digits: &[usize]) -> Result<Self> {
        if digits.len() != dims.len() {
            return Err(Error::LengthMismatch {
                expected: dims.len(),
                got: digits.len(),
            });
        }
        let mut index = 0;
        for (k, (&d, s)) in digits.iter().zip(dims.strides()).enumerate() {
            if d >= dims.get(k) {
                return Err(Error::InvalidSubsystems(format!(
                    "digit {d} out of range on subsystem {k}"
                )));
            }
            index += d * s;
        }
        let mut amps = vec![C64::new(0.0, 0.0); dims.total()];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self {
            dims,
            amps: CVector::from_vec(amps),
        })
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amps
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<C64> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.dims, other.dims
            )));
        }
        Ok(self.amps.dotc(&other.amps))
    }

    /// `self ⊗ other`, with `self`'s subsystems first.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let dims = self.dims.concat(&other.dims);
        let nb = other.amps.len();
        let mut amps = CVector::zeros(self.amps.len() * nb);
        for (i, a) in self.amps.iter().enumerate() {
            for (j, b) in other.amps.iter().enumerate() {
                amps[i * nb + j] = a * b;
            }
        }
        PureState { dims, amps }
    }

    /// Reshapes the amplitudes into a matrix with rows indexed by the
    /// `rows` subsystems and columns by the `cols` subsystems.
    ///
    /// Together `rows` and `cols` must list every subsystem exactly once.
    pub fn block_matrix(&self, rows: &[usize], cols: &[usize]) -> CMatrix {
        let row_dims: Vec<usize> = rows.iter().map(|&k| self.dims.get(k)).collect();
        let col_dims: Vec<usize> = cols.iter().map(|&k| self.dims.get(k)).collect();
        let nr: usize = row_dims.iter().product();
        let nc: usize = col_dims.iter().product();
        let mut m = CMatrix::zeros(nr, nc);
        for (idx, amp) in self.amps.iter().enumerate() {
            let digits = self.dims.digits(idx);
            let r = rows.iter().fold(0, |acc, &k| acc * self.dims.get(k) + digits[k]);
            let c = cols.iter().fold(0, |acc, &k| acc * self.dims.get(k) + digits[k]);
            m[(r, c)] = *amp;
        }
        m
    }

    /// Inverse of [`block_matrix`](Self::block_matrix): scatters `m` back into
    /// natural subsystem order.
    pub fn from_block_matrix(
        dims: SubsystemDims,
        rows: &[usize],
        cols: &[usize],
        m: &CMatrix,
    ) -> Result<PureState> {
        let nr = dims.block_dim(rows);
        let nc = dims.block_dim(cols);
        if m.nrows() != nr || m.ncols() != nc || nr * nc != dims.total() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} block matrix for register {dims}",
                m.nrows(),
                m.ncols()
            )));
        }
        let mut amps = vec![C64::new(0.0, 0.0); dims.total()];
        for (idx, slot) in amps.iter_mut().enumerate() {
            let digits = dims.digits(idx);
            let r = rows.iter().fold(0, |acc, &k| acc * dims.get(k) + digits[k]);
            let c = cols.iter().fold(0, |acc, &k| acc * dims.get(k) + digits[k]);
            *slot = m[(r, c)];
        }
        PureState::new(dims, amps)
    }

    /// Reduced density matrix on the `keep` subsystems (sorted ascending).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        self.dims.check_block(keep)?;
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let rest = self.dims.complement(&keep);
        let m = self.block_matrix(&keep, &rest);
        let rho = &m * m.adjoint();
        DensityMatrix::from_parts(self.dims.select(&keep)?, rho)
    }

    /// Reduced density matrix on block A of `bp`.
    pub fn reduced_density(&self, bp: &Bipartition) -> Result<DensityMatrix> {
        self.check_bipartition(bp)?;
        self.partial_trace(bp.block_a())
    }

    pub(crate) fn check_bipartition(&self, bp: &Bipartition) -> Result<()> {
        if bp.n() != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "bipartition over {} subsystems applied to a {}-partite state",
                bp.n(),
                self.dims.len()
            )));
        }
        Ok(())
    }

    /// Projects `subsystems` onto `outcome`.
    ///
    /// Returns the outcome probability and the renormalized state of the
    /// remaining subsystems, or `None` when the probability is zero.
    pub fn project(
        &self,
        subsystems: &[usize],
        outcome: &PureState,
    ) -> Result<(f64, Option<PureState>)> {
        self.dims.check_block(subsystems)?;
        if subsystems.len() == self.dims.len() {
            return Err(Error::InvalidSubsystems(
                "projection must leave at least one subsystem".into(),
            ));
        }
        let expected = self.dims.select(subsystems)?;
        if outcome.dims != expected {
            return Err(Error::DimensionMismatch(format!(
                "outcome on {} but measured subsystems have {}",
                outcome.dims, expected
            )));
        }
        let rest = self.dims.complement(subsystems);
        let m = self.block_matrix(subsystems, &rest);
        // residual_j = Σ_i conj(outcome_i) m_ij
        let residual = m.tr_mul(&outcome.amps.conjugate());
        let prob = residual.norm_squared();
        if prob <= 1e-28 {
            return Ok((0.0, None));
        }
        let dims = self.dims.select(&rest)?;
        let amps = residual.unscale(prob.sqrt());
        Ok((prob, Some(PureState { dims, amps })))
    }

    /// Applies a unitary `u` to subsystem `k`.
    pub fn apply_local(&self, k: usize, u: &CMatrix) -> Result<PureState> {
        self.dims.check_block(&[k])?;
        let d = self.dims.get(k);
        if u.nrows() != d || u.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} operator on a dimension-{d} subsystem",
                u.nrows(),
                u.ncols()
            )));
        }
        let stride = self.dims.strides()[k];
        let mut out = CVector::zeros(self.amps.len());
        for (idx, amp) in self.amps.iter().enumerate() {
            let digit = (idx / stride) % d;
            let base = idx - digit * stride;
            for row in 0..d {
                out[base + row * stride] += u[(row, digit)] * amp;
            }
        }
        Ok(PureState {
            dims: self.dims.clone(),
            amps: out,
        })
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> DensityMatrix {
        let rho = &self.amps * self.amps.adjoint();
        DensityMatrix::from_parts(self.dims.clone(), rho).expect("pure projector is a valid density")
    }
}

/// `|ψ⟩ ⊗ |φ⟩`.
pub fn tensor_product(a: &PureState, b: &PureState) -> PureState {
    a.tensor(b)
}
