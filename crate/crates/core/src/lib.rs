//! Sharp geometric entanglement measures for pure multipartite states.
//!
//! The crate is organised around a handful of modules:
//!
//! * [`registers`]: dense pure states and density matrices on qudit registers,
//!   tensor products, partial traces and projective measurements.
//! * [`spectra`]: Hermitian eigensystems (cyclic Jacobi), Schmidt
//!   decompositions, purity and entanglement entropy.
//! * [`measures`]: the sharp geometric measure (closed form and Bures route),
//!   the standard geometric measure, and multipartite measures built from
//!   bipartitions (GMS, GBC, GGM, GMC, concurrence fill).
//! * [`teleport`]: exact simulation of qubit teleportation through a
//!   two-qutrit channel, with average fidelity sweeps.
//! * [`families`]: GHZ/W/GSD/χ state constructors and parameter sweeps with
//!   cusp and crossover detection.
//! * [`cli`]: the `sharpgm` command-line front end.

pub mod cli;
mod error;
pub mod families;
pub mod measures;
pub mod random;
pub mod registers;
pub mod spectra;
pub mod teleport;

pub use error::{Error, Result};
pub use registers::{Bipartition, DensityMatrix, PureState, SubsystemDims};

/// Complex scalar used throughout.
pub type C64 = nalgebra::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;
