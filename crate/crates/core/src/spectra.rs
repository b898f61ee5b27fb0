//! Hermitian eigensystems, Schmidt decompositions, purity and entropy.

use crate::registers::{Bipartition, DensityMatrix, PureState};
use crate::{CMatrix, CVector, Error, Result, C64};

/// Hermiticity tolerance accepted by [`hermitian_eigensystem`].
pub const EIGEN_HERMITIAN_TOL: f64 = 1e-8;
/// Schmidt coefficients below this are treated as zero.
pub const SCHMIDT_CUTOFF: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenSystem {
    pub fn vector(&self, k: usize) -> CVector {
        self.vectors.column(k).into_owned()
    }

    /// `V Λ V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        let lam = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(self.values[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        &self.vectors * lam * self.vectors.adjoint()
    }
}

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq`, then applies a
/// real plane rotation that zeroes it. Eigenvalues come back descending.
pub fn hermitian_eigensystem(m: &CMatrix) -> Result<EigenSystem> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", n, m.ncols())));
    }
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    if dev > EIGEN_HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }

    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
    }
    let mut v = CMatrix::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-17 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // G = diag(1, conj(phase)) · [[c, s], [-s, c]]
                let g_pp = C64::new(c, 0.0);
                let g_pq = C64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;

                // A ← A G
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                // A ← G† A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
                // V ← V G
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |r, k| v[(r, order[k])]);
    Ok(EigenSystem { values, vectors })
}

/// Principal square root of a positive semidefinite matrix. Eigenvalues at
/// round-off level relative to the largest (or negative) are set to zero.
pub fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    let eig = hermitian_eigensystem(m)?;
    let floor = 64.0 * f64::EPSILON * eig.values.first().copied().unwrap_or(0.0).abs();
    let sq = EigenSystem {
        values: eig.values.iter().map(|&l| if l > floor { l.sqrt() } else { 0.0 }).collect(),
        vectors: eig.vectors,
    };
    Ok(sq.reconstruct())
}

/// Descending Schmidt coefficients of a cut, with the cut's `n_A`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    lambdas: Vec<f64>,
    n_a: usize,
}

impl SchmidtSpectrum {
    /// Validates a probability vector: sum 1 ± 1e-9, entries ≥ −1e-12
    /// (clamped to 0), at most `n_a` entries. Sorted descending on return.
    pub fn new(mut lambdas: Vec<f64>, n_a: usize) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::InvalidDensity("empty spectrum".into()));
        }
        if lambdas.len() > n_a {
            return Err(Error::DimensionMismatch(format!(
                "{} Schmidt coefficients exceed n_A = {n_a}",
                lambdas.len()
            )));
        }
        for l in lambdas.iter_mut() {
            if !l.is_finite() || *l < -SCHMIDT_CUTOFF {
                return Err(Error::InvalidDensity(format!("coefficient {l} is negative")));
            }
            *l = l.max(0.0);
        }
        let total: f64 = lambdas.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidDensity(format!("coefficients sum to {total}")));
        }
        lambdas.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { lambdas, n_a })
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn max(&self) -> f64 {
        self.lambdas[0]
    }

    /// Number of coefficients above [`SCHMIDT_CUTOFF`].
    pub fn rank(&self) -> usize {
        self.lambdas.iter().filter(|&&l| l > SCHMIDT_CUTOFF).count()
    }

    pub fn sum_sqrt(&self) -> f64 {
        self.lambdas.iter().map(|l| l.sqrt()).sum()
    }
}

/// `|ψ⟩ = Σ √λ_i |a_i⟩ ⊗ |b_i⟩` across a bipartition.
///
/// `left` holds block-A vectors and `right` block-B vectors, one column per
/// nonzero coefficient.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub spectrum: SchmidtSpectrum,
    pub left: CMatrix,
    pub right: CMatrix,
}

impl SchmidtDecomposition {
    /// `Σ √λ_i |a_i⟩ ⊗ |b_i⟩` as a flat vector in (block A, block B) order.
    pub fn reconstruct(&self) -> CVector {
        let (na, nb) = (self.left.nrows(), self.right.nrows());
        let mut out = CVector::zeros(na * nb);
        for (k, l) in self.spectrum.lambdas().iter().take(self.left.ncols()).enumerate() {
            let w = l.sqrt();
            for i in 0..na {
                for j in 0..nb {
                    out[i * nb + j] += self.left[(i, k)] * self.right[(j, k)] * w;
                }
            }
        }
        out
    }
}

/// Schmidt decomposition of `state` across `bp`.
///
/// The smaller block is diagonalized; the partner vectors are recovered by
/// contraction, e.g. `|b_i⟩ = ⟨a_i|ψ⟩ / √λ_i`.
pub fn schmidt(state: &PureState, bp: &Bipartition) -> Result<SchmidtDecomposition> {
    state.check_bipartition(bp)?;
    let dims = state.dims();
    let da = dims.block_dim(bp.block_a());
    let db = dims.block_dim(bp.block_b());
    let n_a = da.min(db);
    // m[a, b] = ⟨a b|ψ⟩
    let m = state.block_matrix(bp.block_a(), bp.block_b());
    let a_side = da <= db;
    let (small, other) = if a_side { (m.clone(), m.transpose()) } else { (m.transpose(), m.clone()) };
    let rho = &small * small.adjoint();
    let eig = hermitian_eigensystem(&rho)?;

    let kept: Vec<usize> = (0..eig.values.len()).filter(|&k| eig.values[k] > SCHMIDT_CUTOFF).collect();
    let lambdas: Vec<f64> = kept.iter().map(|&k| eig.values[k]).collect();
    let total: f64 = lambdas.iter().sum();
    let lambdas: Vec<f64> = lambdas.iter().map(|l| l / total).collect();

    let n_small = small.nrows();
    let n_other = other.nrows();
    let mut u = CMatrix::zeros(n_small, kept.len());
    let mut w = CMatrix::zeros(n_other, kept.len());
    for (col, &k) in kept.iter().enumerate() {
        let vec_small = eig.vector(k);
        // partner_j = Σ_i conj(small_vec_i) small_ij
        let partner = small.tr_mul(&vec_small.conjugate());
        let partner = partner.unscale(partner.norm());
        u.set_column(col, &vec_small);
        w.set_column(col, &partner);
    }
    let (left, right) = if a_side { (u, w) } else { (w, u) };
    Ok(SchmidtDecomposition {
        spectrum: SchmidtSpectrum::new(lambdas, n_a)?,
        left,
        right,
    })
}

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.purity()
}

/// `−Σ λ log₂ λ`, with `0 log 0 = 0`.
pub fn von_neumann_entropy(spectrum: &SchmidtSpectrum) -> f64 {
    spectrum
        .lambdas()
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.log2())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registers::SubsystemDims;
    use nalgebra::SymmetricEigen;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn diag(v: &[f64]) -> CMatrix {
        CMatrix::from_fn(v.len(), v.len(), |i, j| if i == j { c(v[i], 0.0) } else { c(0.0, 0.0) })
    }

    #[test]
    fn diagonal_inputs() {
        let e = hermitian_eigensystem(&diag(&[0.5, 0.5])).unwrap();
        assert_eq!(e.values, vec![0.5, 0.5]);
        let e = hermitian_eigensystem(&diag(&[0.2, 0.5, 0.3])).unwrap();
        assert_eq!(e.values, vec![0.5, 0.3, 0.2]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 1.0), c(0.0, 1.0), c(1.0, 0.0)]);
        assert!(matches!(hermitian_eigensystem(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn two_by_two_matches_characteristic_polynomial() {
        // eigenvalues of [[a, z], [z*, d]]: (a+d)/2 ± √(((a−d)/2)² + |z|²)
        let (a, d, z) = (0.3, -0.7, c(0.4, -0.25));
        let m = CMatrix::from_row_slice(2, 2, &[c(a, 0.0), z, z.conj(), c(d, 0.0)]);
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + z.norm_sqr()).sqrt();
        let e = hermitian_eigensystem(&m).unwrap();
        assert!((e.values[0] - (mid + rad)).abs() < 1e-14);
        assert!((e.values[1] - (mid - rad)).abs() < 1e-14);
        assert!((e.reconstruct() - m).camax() < 1e-14);
    }

    #[test]
    fn w_state_single_qubit_spectrum() {
        let t = 1.0 / 3f64.sqrt();
        let w = PureState::from_real(&[2, 2, 2], &[0.0, t, t, 0.0, t, 0.0, 0.0, 0.0]).unwrap();
        let rho = w.partial_trace(&[0]).unwrap();
        let e = hermitian_eigensystem(rho.matrix()).unwrap();
        assert!((e.values[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn agrees_with_nalgebra_on_dense_matrix() {
        let n = 7;
        let m = CMatrix::from_fn(n, n, |i, j| {
            let x = (i * 7 + j * 3) as f64;
            c(x.sin(), (x * 0.37).cos())
        });
        let h = &m + m.adjoint();
        let ours = hermitian_eigensystem(&h).unwrap();
        let mut theirs: Vec<f64> = SymmetricEigen::new(h.clone()).eigenvalues.iter().copied().collect();
        theirs.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in ours.values.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((ours.reconstruct() - &h).camax() < 1e-12);
        let gram = ours.vectors.adjoint() * &ours.vectors;
        assert!((gram - CMatrix::identity(n, n)).camax() < 1e-13);
    }

    #[test]
    fn schmidt_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::from_real(&[2, 2], &[h, 0.0, 0.0, h]).unwrap();
        let bp = Bipartition::new(2, &[0]).unwrap();
        let s = schmidt(&bell, &bp).unwrap();
        assert!((s.spectrum.lambdas()[0] - 0.5).abs() < 1e-15);
        assert!((s.spectrum.lambdas()[1] - 0.5).abs() < 1e-15);

        let mut amps = vec![0.0; 9];
        amps[0] = 0.5f64.sqrt();
        amps[4] = 0.3f64.sqrt();
        amps[8] = 0.2f64.sqrt();
        let beta = PureState::from_real(&[3, 3], &amps).unwrap();
        let s = schmidt(&beta, &bp).unwrap();
        for (got, want) in s.spectrum.lambdas().iter().zip([0.5, 0.3, 0.2]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(s.spectrum.n_a(), 3);

        let prod = PureState::basis(SubsystemDims::qubits(2).unwrap(), &[0, 0]).unwrap();
        let s = schmidt(&prod, &bp).unwrap();
        assert_eq!(s.spectrum.lambdas(), &[1.0]);
        assert_eq!(s.spectrum.n_a(), 2);
    }

    #[test]
    fn schmidt_reconstructs_when_block_a_is_larger() {
        // dims (4, 2): block A = {0} has dimension 4 > 2
        let amps: Vec<C64> = (0..8).map(|k| c((k as f64 * 1.3).sin(), (k as f64 * 0.4).cos())).collect();
        let s = PureState::normalized(SubsystemDims::new(vec![4, 2]).unwrap(), amps).unwrap();
        let bp = Bipartition::new(2, &[0]).unwrap();
        let d = schmidt(&s, &bp).unwrap();
        assert_eq!(d.left.nrows(), 4);
        assert_eq!(d.spectrum.n_a(), 2);
        let r = d.reconstruct();
        let overlap = r.dotc(s.amplitudes()).norm();
        assert!((overlap - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spectrum_validation() {
        assert!(SchmidtSpectrum::new(vec![0.6, 0.6], 2).is_err());
        assert!(SchmidtSpectrum::new(vec![0.5, 0.3, 0.2], 2).is_err());
        assert!(SchmidtSpectrum::new(vec![1.0 + 1e-13, -1e-13], 2).is_ok());
        let s = SchmidtSpectrum::new(vec![0.2, 0.8], 2).unwrap();
        assert_eq!(s.lambdas(), &[0.8, 0.2]);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(von_neumann_entropy(&SchmidtSpectrum::new(vec![1.0], 2).unwrap()), 0.0);
        let flat = SchmidtSpectrum::new(vec![0.5, 0.5], 2).unwrap();
        assert!((von_neumann_entropy(&flat) - 1.0).abs() < 1e-15);
        let s = SchmidtSpectrum::new(vec![0.5, 0.3, 0.2], 3).unwrap();
        let oracle = -(0.5 * 0.5f64.log2() + 0.3 * 0.3f64.log2() + 0.2 * 0.2f64.log2());
        assert!((von_neumann_entropy(&s) - oracle).abs() < 1e-15);
        assert!((von_neumann_entropy(&s) - 1.4855).abs() < 5e-5);
    }
}
