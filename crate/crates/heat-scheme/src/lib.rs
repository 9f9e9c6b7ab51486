//! DSC heat-propagation scheme on non-orthogonal hexahedral meshes.
//!
//! Each cell carries 6x3 port states `z_p` (face quantities, switching on
//! integer time steps) and node states `z_n` (cell quantities, switching on
//! half-shifted steps) plus a nodal temperature. One full cycle is a
//! connection step, which exchanges states across every interface so that
//! interface temperature continuity and heat-current conservation hold by
//! construction, followed by a reflection step, which integrates the nodal
//! temperature from the face currents and sources and re-embds it into the
//! node states.
//!
//! The normal components embed temperatures as `z[i][i/2] = 2 (-1)^i T`;
//! tangential components carry opposite-face port temperature differences.

mod audit;
mod coefficients;
mod error;
mod source;
mod stability;
mod state;
mod step;
mod wrap;

pub use audit::{energy_audit, energy_scale};
pub use coefficients::{
    compute_coefficients, face_current, gradient_components_linear, recovered_gradient,
    SchemeCoefficients,
};
pub use error::SchemeError;
pub use source::{dielectric_source, CellSource};
pub use stability::stable_timestep;
pub use state::{embed_normal, init_state, HalfPhase, SchemeState};
pub use step::{connection_step, reflection_step, step_cycle, CycleEnergy};
pub use wrap::{cycle_pair, CycleMap};

pub use hexmesh::{Mesh, Vec3};
