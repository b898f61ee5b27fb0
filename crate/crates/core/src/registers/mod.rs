//! Dense pure states and density matrices on qudit registers.

mod bipartition;
mod density;
mod dims;
pub mod io;
mod state;

pub use bipartition::Bipartition;
pub use density::{
    bures_distance, bures_distance_to_maximally_mixed, fidelity_pure_mixed, uhlmann_fidelity,
    DensityMatrix,
};
pub use dims::SubsystemDims;
pub use state::{tensor_product, PureState, INPUT_NORM_TOL};
