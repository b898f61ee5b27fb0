//! Named state families and the parameter sweeps built on them.

mod sweep;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use std::fmt;
use std::str::FromStr;

pub use sweep::{crossings, cusp_scan, max_eig_curves, sweep, SweepCurve, CUSP_FACTOR};

use crate::registers::{PureState, SubsystemDims};
use crate::teleport::beta_r;
use crate::{Error, Result, C64};

/// `(|0…0⟩ + |1…1⟩)/√2` on `n ≥ 2` qubits.
pub fn ghz(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n as f64,
            domain: "n >= 2",
        });
    }
    let dims = SubsystemDims::qubits(n)?;
    let mut amps = vec![C64::new(0.0, 0.0); dims.total()];
    amps[0] = C64::new(FRAC_1_SQRT_2, 0.0);
    amps[dims.total() - 1] = C64::new(FRAC_1_SQRT_2, 0.0);
    PureState::new(dims, amps)
}

/// Equal superposition of the `n` single-excitation basis states, `n ≥ 3`.
pub fn w(n: usize) -> Result<PureState> {
    if n < 3 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n as f64,
            domain: "n >= 3",
        });
    }
    let dims = SubsystemDims::qubits(n)?;
    let a = 1.0 / (n as f64).sqrt();
    let mut amps = vec![C64::new(0.0, 0.0); dims.total()];
    for k in 0..n {
        amps[1 << k] = C64::new(a, 0.0);
    }
    PureState::new(dims, amps)
}

/// Coefficients of the three-qubit canonical form
/// `λ₀|000⟩ + λ₁|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsdCoefficients {
    pub lambda: [C64; 5],
}

/// Basis indices of the five canonical-form terms.
const GSD_INDICES: [usize; 5] = [0, 4, 5, 6, 7];

/// Genuinely entangled LU classes of the canonical form, by which of
/// `λ₁, λ₂, λ₃` vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsdClass {
    /// all three vanish (GHZ class)
    C1,
    /// exactly two vanish
    C2,
    /// exactly one vanishes
    C3,
    /// none vanish (W class)
    C4,
}

impl GsdCoefficients {
    pub fn new(lambda: [C64; 5]) -> Result<Self> {
        let norm: f64 = lambda.iter().map(|l| l.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized(norm.sqrt()));
        }
        Ok(Self { lambda })
    }

    pub fn from_real(lambda: [f64; 5]) -> Result<Self> {
        Self::new(lambda.map(|l| C64::new(l, 0.0)))
    }

    /// Reads the coefficients of a state already in canonical form; `None`
    /// if any amplitude outside the five canonical positions exceeds `tol`.
    pub fn read_canonical(state: &PureState, tol: f64) -> Option<Self> {
        if state.dims().as_slice() != [2, 2, 2] {
            return None;
        }
        let a = state.amplitudes();
        let outside = (0..8).filter(|i| !GSD_INDICES.contains(i)).any(|i| a[i].norm() > tol);
        if outside {
            return None;
        }
        Some(Self {
            lambda: GSD_INDICES.map(|i| a[i]),
        })
    }

    /// Class of a genuinely entangled canonical form (`λ₀, λ₄ ≠ 0`), else `None`.
    pub fn class(&self, tol: f64) -> Option<GsdClass> {
        let nz = |k: usize| self.lambda[k].norm() > tol;
        if !nz(0) || !nz(4) {
            return None;
        }
        match (1..=3).filter(|&k| nz(k)).count() {
            0 => Some(GsdClass::C1),
            1 => Some(GsdClass::C2),
            2 => Some(GsdClass::C3),
            _ => Some(GsdClass::C4),
        }
    }
}

pub fn gsd_state(c: &GsdCoefficients) -> Result<PureState> {
    let mut amps = vec![C64::new(0.0, 0.0); 8];
    for (k, &i) in GSD_INDICES.iter().enumerate() {
        amps[i] = c.lambda[k];
    }
    PureState::new(SubsystemDims::qubits(3)?, amps)
}

fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_2 + 1e-12).contains(&theta) {
        return Err(Error::OutOfDomain {
            name: "theta",
            value: theta,
            domain: "[0, π/2]",
        });
    }
    Ok(())
}

fn three_qubits(terms: &[(usize, f64)]) -> Result<PureState> {
    let mut amps = vec![0.0; 8];
    for &(i, a) in terms {
        amps[i] = a;
    }
    PureState::from_real(&[2, 2, 2], &amps)
}

/// `cos(θ/2)|000⟩ + sin(θ/2)|111⟩`.
pub fn chi1(theta: f64) -> Result<PureState> {
    check_theta(theta)?;
    three_qubits(&[(0, (theta / 2.0).cos()), (7, (theta / 2.0).sin())])
}

/// `(sin θ|000⟩ + cos θ|110⟩ + |111⟩)/√2`.
pub fn chi2(theta: f64) -> Result<PureState> {
    check_theta(theta)?;
    let h = FRAC_1_SQRT_2;
    three_qubits(&[(0, h * theta.sin()), (6, h * theta.cos()), (7, h)])
}

/// `(sin θ|000⟩ + |011⟩ + cos θ|110⟩)/√2`.
pub fn chi3(theta: f64) -> Result<PureState> {
    check_theta(theta)?;
    let h = FRAC_1_SQRT_2;
    three_qubits(&[(0, h * theta.sin()), (3, h), (6, h * theta.cos())])
}

/// A one-parameter family usable in sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Chi1,
    Chi2,
    Chi3,
    /// Two-qutrit `β(r)` channel states.
    Beta,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Chi1 => "chi1",
            Family::Chi2 => "chi2",
            Family::Chi3 => "chi3",
            Family::Beta => "beta",
        }
    }

    pub fn parameter(self) -> &'static str {
        match self {
            Family::Beta => "r",
            _ => "theta",
        }
    }

    pub fn state(self, x: f64) -> Result<PureState> {
        match self {
            Family::Chi1 => chi1(x),
            Family::Chi2 => chi2(x),
            Family::Chi3 => chi3(x),
            Family::Beta => Ok(beta_r(x)?.state().clone()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "chi1" => Ok(Family::Chi1),
            "chi2" => Ok(Family::Chi2),
            "chi3" => Ok(Family::Chi3),
            "beta" => Ok(Family::Beta),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

/// `n` equally spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn ghz_and_w_examples() {
        let g = ghz(3).unwrap();
        let a = g.amplitudes();
        assert_eq!(a[0].re, FRAC_1_SQRT_2);
        assert_eq!(a[7].re, FRAC_1_SQRT_2);
        assert_eq!(a.iter().filter(|z| z.norm() > 0.0).count(), 2);

        let wst = w(3).unwrap();
        let t = 1.0 / 3f64.sqrt();
        for i in 0..8 {
            let want = if [1, 2, 4].contains(&i) { t } else { 0.0 };
            assert!((wst.amplitudes()[i].re - want).abs() < 1e-15);
        }
        let bell = PureState::from_real(&[2, 2], &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
        assert_eq!(ghz(2).unwrap(), bell);
        assert!(ghz(1).is_err());
        assert!(w(2).is_err());
        assert_eq!(w(5).unwrap().amplitudes().iter().filter(|z| z.norm() > 0.0).count(), 5);
    }

    #[test]
    fn gsd_examples() {
        let h = FRAC_1_SQRT_2;
        let c = GsdCoefficients::from_real([h, 0.0, 0.0, 0.0, h]).unwrap();
        assert_eq!(gsd_state(&c).unwrap(), ghz(3).unwrap());
        assert_eq!(c.class(1e-12), Some(GsdClass::C1));

        let c = GsdCoefficients::from_real([0.5, 0.4, 0.3, 0.5, (1.0f64 - 0.75).sqrt()]).unwrap();
        assert_eq!(c.class(1e-12), Some(GsdClass::C4));

        let c = GsdCoefficients::from_real([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let zero = PureState::basis(SubsystemDims::qubits(3).unwrap(), &[0, 0, 0]).unwrap();
        assert_eq!(gsd_state(&c).unwrap(), zero);
        assert_eq!(c.class(1e-12), None);

        assert!(GsdCoefficients::from_real([1.0, 1.0, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn chi_examples() {
        assert!((chi1(FRAC_PI_2).unwrap().inner(&ghz(3).unwrap()).unwrap().norm() - 1.0).abs() < 1e-15);
        for t in linspace(0.0, FRAC_PI_2, 17) {
            for s in [chi1(t).unwrap(), chi2(t).unwrap(), chi3(t).unwrap()] {
                assert!((s.amplitudes().norm() - 1.0).abs() < 1e-12);
            }
        }
        let s = chi3(FRAC_PI_4).unwrap();
        let a = s.amplitudes();
        assert!((a[0].re - 0.5).abs() < 1e-15);
        assert!((a[3].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((a[6].re - 0.5).abs() < 1e-15);
        assert!(chi1(-0.1).is_err());
        assert!(chi3(2.0).is_err());
    }

    #[test]
    fn chi_families_have_their_class_signature() {
        for t in linspace(0.05, FRAC_PI_2, 12) {
            let c1 = GsdCoefficients::read_canonical(&chi1(t).unwrap(), 1e-12).unwrap();
            assert_eq!(c1.class(1e-12), Some(GsdClass::C1));
            let c2 = GsdCoefficients::read_canonical(&chi2(t).unwrap(), 1e-12).unwrap();
            // cos θ vanishes at π/2, collapsing χ₂ onto the GHZ class
            if t < FRAC_PI_2 - 1e-9 {
                assert_eq!(c2.class(1e-12), Some(GsdClass::C2));
            }
        }
        assert!(GsdCoefficients::read_canonical(&chi3(0.5).unwrap(), 1e-12).is_none());
    }

    #[test]
    fn linspace_hits_endpoints() {
        let g = linspace(0.0, FRAC_PI_2, 201);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[200], FRAC_PI_2);
        assert!((g[100] - FRAC_PI_4).abs() < 1e-15);
    }
}
