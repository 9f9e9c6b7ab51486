//! Core machinery of dual scattering channel (DSC) processes: discrete
//! timelines, back-in-time signal histories with shift and truncation
//! operators, the two-step connection-reflection recursion, and an
//! alpha-passivity harness with the associated stability bound.
//!
//! Times are carried as integer counts of half steps, `t = k * tau / 2`,
//! so grid membership and shifts are exact. The update lattice `I` holds
//! the even counts, the half-shifted lattice `J` the odd ones, and
//! `H = I u J` all of them. Propagating states switch on their lattice:
//! a value born at a lattice point is carried unchanged through the next
//! half step.

mod error;
mod passivity;
mod process;
mod signal;
mod time;

pub use error::{HistoryError, ProcessError, TimeError};
pub use passivity::{
    check_alpha_passivity, dirac_probes, excitation_integral, random_probes, stability_bound,
    DelimitingViolation, PassivityFunctional, PassivityReport, PassivityViolation,
};
pub use process::{
    run_process, DscState, FnPropagator, ProcessTrajectory, Propagator, PropagatorPair,
    ShiftedPropagator,
};
pub use signal::{SignalHistory, Trajectory};
pub use time::{GridKind, HalfStep, Timeline};
