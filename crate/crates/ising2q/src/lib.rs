pub mod entanglement;
pub mod error;
pub mod linalg4;
pub mod model;
pub mod piexpr;
pub mod sweep;
pub mod thermal;

pub use entanglement::{
    concurrence, concurrence_bruteforce, entanglement_of_formation, ConcurrenceResult,
};
pub use error::{Error, Result};
pub use model::{ground_energy, hamiltonian, ModelParams};
pub use sweep::{argmax, figure_preset, run_preset, run_sweep, PresetId, SweepResult, SweepSpec};
pub use thermal::{ground_state, partition_function, thermal_state, DensityMatrix, StateKind};
