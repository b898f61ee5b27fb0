//! Teleportation of a qubit through a two-qutrit channel.
//!
//! Register layout of the joint state: subsystem 0 is Alice's input qubit,
//! subsystem 1 her half of the channel, subsystem 2 Bob's qutrit. Alice
//! measures {0, 1} in a basis of six qubit–qutrit Bell-like states; Bob applies
//! a pair-shift correction followed by a sign correction.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use crate::registers::{fidelity_pure_mixed, DensityMatrix, PureState, SubsystemDims};
use crate::{CMatrix, Error, Result, C64};

/// The qubit `√α|0⟩ + √(1−α) e^{iθ}|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputState {
    alpha: f64,
    theta: f64,
}

impl InputState {
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::OutOfDomain {
                name: "alpha",
                value: alpha,
                domain: "[0, 1]",
            });
        }
        if !theta.is_finite() {
            return Err(Error::OutOfDomain {
                name: "theta",
                value: theta,
                domain: "finite reals",
            });
        }
        Ok(Self { alpha, theta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn qubit(&self) -> PureState {
        let amps = vec![
            C64::new(self.alpha.sqrt(), 0.0),
            C64::from_polar((1.0 - self.alpha).sqrt(), self.theta),
        ];
        PureState::normalized(SubsystemDims::new(vec![2]).expect("qubit"), amps).expect("unit qubit")
    }

    /// The input embedded in span{|0⟩, |1⟩} of a qutrit.
    pub fn as_qutrit(&self) -> PureState {
        let q = self.qubit();
        let amps = vec![q.amplitudes()[0], q.amplitudes()[1], C64::new(0.0, 0.0)];
        PureState::normalized(SubsystemDims::new(vec![3]).expect("qutrit"), amps).expect("unit qutrit")
    }
}

/// Shared two-qutrit resource state.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelState {
    /// `None` for the maximally entangled channel.
    r: Option<f64>,
    state: PureState,
}

impl ChannelState {
    /// `(|00⟩ + |11⟩ + |22⟩)/√3`.
    pub fn ideal() -> Self {
        let t = 1.0 / 3f64.sqrt();
        let mut a = vec![0.0; 9];
        a[0] = t;
        a[4] = t;
        a[8] = t;
        Self {
            r: None,
            state: PureState::from_real(&[3, 3], &a).expect("ideal channel"),
        }
    }

    pub fn r(&self) -> Option<f64> {
        self.r
    }

    pub fn state(&self) -> &PureState {
        &self.state
    }
}

/// `√0.5|00⟩ + √(0.5−r)|11⟩ + √r|22⟩`, `r ∈ [0, 0.5]`.
pub fn beta_r(r: f64) -> Result<ChannelState> {
    if !(0.0..=0.5).contains(&r) {
        return Err(Error::OutOfDomain {
            name: "r",
            value: r,
            domain: "[0, 0.5]",
        });
    }
    let mut a = vec![0.0; 9];
    a[0] = 0.5f64.sqrt();
    a[4] = (0.5 - r).sqrt();
    a[8] = r.sqrt();
    Ok(ChannelState {
        r: Some(r),
        state: PureState::from_real(&[3, 3], &a)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One measurement basis element with its classical labels.
#[derive(Debug, Clone)]
pub struct MuState {
    pub sign: Sign,
    pub pair: usize,
    pub state: PureState,
}

/// `(|0,k⟩ ± |1,k+1⟩)/√2` for `k = pair`, on (qubit, qutrit); i.e.
/// pair 0 ↔ {00, 11}, pair 1 ↔ {01, 12}, pair 2 ↔ {02, 10}.
pub fn mu_basis() -> Vec<MuState> {
    let mut out = Vec::with_capacity(6);
    for pair in 0..3 {
        for sign in [Sign::Plus, Sign::Minus] {
            let mut a = vec![0.0; 6];
            a[pair] = FRAC_1_SQRT_2;
            a[3 + (pair + 1) % 3] = match sign {
                Sign::Plus => FRAC_1_SQRT_2,
                Sign::Minus => -FRAC_1_SQRT_2,
            };
            out.push(MuState {
                sign,
                pair,
                state: PureState::from_real(&[2, 3], &a).expect("mu state"),
            });
        }
    }
    out
}

fn real3(rows: [[f64; 3]; 3]) -> CMatrix {
    CMatrix::from_fn(3, 3, |i, j| C64::new(rows[i][j], 0.0))
}

/// Sign-correction gate `diag(1, −1, 1)`.
pub fn u_a() -> CMatrix {
    real3([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]])
}

/// Pair-1 shift: `|1⟩→|0⟩, |2⟩→|1⟩, |0⟩→|2⟩`.
pub fn u_b() -> CMatrix {
    real3([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
}

/// Pair-2 shift: `|2⟩→|0⟩, |0⟩→|1⟩, |1⟩→|2⟩`.
pub fn u_c() -> CMatrix {
    real3([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
}

/// Bob's correction `U_sign · U_pair` (pair shift applied first).
pub fn correction(sign: Sign, pair: usize) -> Result<CMatrix> {
    let shift = match pair {
        0 => CMatrix::identity(3, 3),
        1 => u_b(),
        2 => u_c(),
        _ => {
            return Err(Error::OutOfDomain {
                name: "pair",
                value: pair as f64,
                domain: "{0, 1, 2}",
            })
        }
    };
    Ok(match sign {
        Sign::Plus => shift,
        Sign::Minus => u_a() * shift,
    })
}

/// One branch of the protocol.
#[derive(Debug, Clone)]
pub struct TeleportOutcome {
    pub sign: Sign,
    pub pair: usize,
    pub probability: f64,
    /// Bob's corrected qutrit; `None` when the branch has probability 0.
    pub bob_state: Option<PureState>,
}

#[derive(Debug, Clone)]
pub struct TeleportRun {
    pub rho_out: DensityMatrix,
    pub outcomes: Vec<TeleportOutcome>,
}

/// Runs every measurement branch and mixes Bob's corrected states.
pub fn teleport_once(input: &InputState, channel: &ChannelState) -> Result<TeleportRun> {
    let joint = input.qubit().tensor(channel.state());
    let mut outcomes = Vec::with_capacity(6);
    let mut rho = CMatrix::zeros(3, 3);
    for mu in mu_basis() {
        let (p, residual) = joint.project(&[0, 1], &mu.state)?;
        let bob_state = match residual {
            Some(res) => {
                let fixed = res.apply_local(0, &correction(mu.sign, mu.pair)?)?;
                let a = fixed.amplitudes();
                rho += (a * a.adjoint()) * C64::new(p, 0.0);
                Some(fixed)
            }
            None => None,
        };
        outcomes.push(TeleportOutcome {
            sign: mu.sign,
            pair: mu.pair,
            probability: p,
            bob_state,
        });
    }
    let rho_out = DensityMatrix::from_parts(SubsystemDims::new(vec![3])?, rho)?;
    Ok(TeleportRun { rho_out, outcomes })
}

/// `√⟨ψ|ρ_out|ψ⟩` with ψ embedded in Bob's qutrit.
pub fn fidelity(input: &InputState, channel: &ChannelState) -> Result<f64> {
    let run = teleport_once(input, channel)?;
    fidelity_pure_mixed(&input.as_qutrit(), &run.rho_out)
}

fn trapezoid_weights(n: usize) -> Vec<f64> {
    let mut w = vec![1.0; n];
    w[0] = 0.5;
    w[n - 1] = 0.5;
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

/// Average fidelity over the uniform product grid `α ∈ [0,1]`,
/// `θ ∈ [offset, offset + 2π]`, trapezoidal in both directions.
pub fn fidelity_avg_shifted(
    channel: &ChannelState,
    n_alpha: usize,
    n_theta: usize,
    theta_offset: f64,
) -> Result<f64> {
    if n_alpha < 2 || n_theta < 2 {
        return Err(Error::GridTooShort {
            need: 2,
            got: n_alpha.min(n_theta),
        });
    }
    let wa = trapezoid_weights(n_alpha);
    let wt = trapezoid_weights(n_theta);
    let mut acc = 0.0;
    for (i, wi) in wa.iter().enumerate() {
        let alpha = i as f64 / (n_alpha - 1) as f64;
        for (j, wj) in wt.iter().enumerate() {
            let theta = theta_offset + 2.0 * PI * j as f64 / (n_theta - 1) as f64;
            acc += wi * wj * fidelity(&InputState::new(alpha, theta)?, channel)?;
        }
    }
    Ok(acc)
}

/// Trapezoidal average fidelity over `[0,1] × [0,2π]`.
pub fn fidelity_avg(channel: &ChannelState, n_alpha: usize, n_theta: usize) -> Result<f64> {
    fidelity_avg_shifted(channel, n_alpha, n_theta, 0.0)
}

/// `(r, F_av)` for `n_r` equally spaced `r ∈ [0, 0.5]`.
pub fn fidelity_sweep(n_r: usize, n_alpha: usize, n_theta: usize) -> Result<Vec<(f64, f64)>> {
    if n_r < 2 {
        return Err(Error::GridTooShort { need: 2, got: n_r });
    }
    (0..n_r)
        .map(|k| {
            let r = 0.5 * k as f64 / (n_r - 1) as f64;
            Ok((r, fidelity_avg(&beta_r(r)?, n_alpha, n_theta)?))
        })
        .collect()
}
