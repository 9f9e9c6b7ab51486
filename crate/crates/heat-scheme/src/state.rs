use crate::{SchemeCoefficients, SchemeError};
use hexmesh::Mesh;

/// Which half-step the state is waiting for. A full cycle is a connection
/// step followed by a reflection step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPhase {
    Connection,
    Reflection,
}

/// Temperature embedding of the normal slot of face `iota`:
/// `z[iota][iota/2] = 2 (-1)^iota T`. Doubling is exact in IEEE arithmetic,
/// which makes uniform fields exact fixed points of the stepping kernels.
#[inline]
pub fn embed_normal(iota: usize, t: f64) -> f64 {
    if iota % 2 == 0 {
        2.0 * t
    } else {
        -2.0 * t
    }
}

/// Port and node states of the whole mesh plus nodal temperatures.
///
/// `z_n[c][iota][mu]` and `z_p[c][iota][mu]` hold the node and port states
/// of cell `c`, face `iota`, direction `mu` (K). After every reflection the
/// normal node slots carry `2 (-1)^iota T_n` and the tangential slots the
/// opposite-face port temperature differences of the previous half-step.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeState {
    pub z_n: Vec<[[f64; 3]; 6]>,
    pub z_p: Vec<[[f64; 3]; 6]>,
    pub t_n: Vec<f64>,
    /// Simulation time (s); advances tau/2 per half-step.
    pub time: f64,
    pub tau: f64,
    pub phase: HalfPhase,
    /// Completed full cycles.
    pub cycles: u64,
}

impl SchemeState {
    /// Port temperature of face `iota` of cell `c`:
    /// `T_p = (-1)^iota z_p[iota][iota/2] / 2`.
    pub fn port_temperature(&self, c: usize, iota: usize) -> f64 {
        let sign = if iota % 2 == 0 { 1.0 } else { -1.0 };
        sign * self.z_p[c][iota][iota / 2] / 2.0
    }

    /// Physical time of the current nodal temperatures (half a step behind
    /// the port states after a completed cycle).
    pub fn node_time(&self) -> f64 {
        self.time - self.tau / 2.0
    }
}

/// Builds the initial state from a per-cell temperature field.
///
/// The node normals embed the field exactly; tangential entries come from
/// the face-temperature differences of a connection pass evaluated before
/// any boundary onset, so the embedded state is static-field consistent
/// (identically zero tangentials for uniform starts).
pub fn init_state(
    mesh: &Mesh,
    coeffs: &SchemeCoefficients,
    tau: f64,
    initial: &[f64],
) -> Result<SchemeState, SchemeError> {
    if !(tau > 0.0) {
        return Err(SchemeError::NonPositiveTau { tau });
    }
    if initial.len() != mesh.cells.len() {
        return Err(SchemeError::FieldCountMismatch {
            given: initial.len(),
            cells: mesh.cells.len(),
        });
    }
    let n = mesh.cells.len();
    let mut state = SchemeState {
        z_n: vec![[[0.0; 3]; 6]; n],
        z_p: vec![[[0.0; 3]; 6]; n],
        t_n: initial.to_vec(),
        time: -tau, // pre-onset: fixed-temperature boundaries stay closed
        tau,
        phase: HalfPhase::Connection,
        cycles: 0,
    };
    for c in 0..n {
        for iota in 0..6 {
            state.z_n[c][iota][iota / 2] = embed_normal(iota, state.t_n[c]);
        }
    }
    // Static embedding pass: ports from the initial node state, then
    // tangential node entries from the resulting port temperatures.
    crate::step::connection_step(&mut state, coeffs, mesh)?;
    for c in 0..n {
        for mu in 0..3 {
            let v = -0.5 * (state.z_p[c][2 * mu + 1][mu] + state.z_p[c][2 * mu][mu]);
            for iota in 0..6 {
                if mu != iota / 2 {
                    state.z_n[c][iota][mu] = v;
                }
            }
        }
    }
    state.time = 0.0;
    state.phase = HalfPhase::Connection;
    Ok(state)
}
