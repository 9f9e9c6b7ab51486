use crate::state::{embed_normal, HalfPhase, SchemeState};
use crate::{SchemeCoefficients, SchemeError};
use hexmesh::{BoundaryCondition, Mesh};

/// Power bookkeeping of one reflection half-step, used by the energy audit:
/// total source power and total boundary heat current (W) at the time the
/// nodal update consumed them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleEnergy {
    pub source_power: f64,
    pub boundary_flux: f64,
}

/// `P - q T_ref` for one side of an interface, evaluated in deviation form:
/// the normal slot enters as `s_n (z_n - 2 (-1)^i T_ref)`, which cancels
/// exactly (to the last bit) when the cell sits at the reference
/// temperature, so uniform fields are exact fixed points.
#[inline]
fn side_imbalance(
    s: &hexmesh::Vec3,
    z_n: &[f64; 3],
    iota: usize,
    t_ref: f64,
) -> f64 {
    let mut acc = 0.0;
    for mu in 0..3 {
        let reference = if mu == iota / 2 {
            embed_normal(iota, t_ref)
        } else {
            0.0
        };
        acc += s[mu] * (z_n[mu] - reference);
    }
    acc
}

/// Connection half-step: updates every port state to t + tau/2 from the
/// node states at t.
///
/// Interior links receive the unique interface temperature for which the
/// heat currents of the two sides cancel, so temperature continuity and
/// current conservation hold by construction. Adiabatic boundary faces get
/// the port value that zeroes the face current; fixed-temperature faces are
/// pinned to their setpoint once their onset time is reached (adiabatic
/// before). Tangential port components copy the node entries.
pub fn connection_step(
    state: &mut SchemeState,
    coeffs: &SchemeCoefficients,
    mesh: &Mesh,
) -> Result<(), SchemeError> {
    check_cells(state, mesh)?;
    if state.phase != HalfPhase::Connection {
        return Err(SchemeError::PhaseMismatch {
            expected: HalfPhase::Connection,
            actual: state.phase,
        });
    }
    let t_now = state.time;

    for c in 0..mesh.cells.len() {
        for iota in 0..6 {
            for mu in 0..3 {
                if mu != iota / 2 {
                    state.z_p[c][iota][mu] = state.z_n[c][iota][mu];
                }
            }
        }
    }

    for (li, link) in mesh.links.iter().enumerate() {
        let (ca, fa, cb, fb) = (link.cell_a, link.face_a, link.cell_b, link.face_b);
        // q = 2 (-1)^i s_n is the coefficient of the interface temperature
        // in the face current.
        let qa = embed_normal(fa, 1.0) * coeffs.s_normal[ca][fa];
        let qb = embed_normal(fb, 1.0) * coeffs.s_normal[cb][fb];
        let denom = qa + qb;
        let scale = qa.abs().max(qb.abs());
        if denom.abs() <= 1e-14 * scale.max(f64::MIN_POSITIVE) {
            return Err(SchemeError::SingularInterface {
                link: li,
                cell_a: ca,
                face_a: fa,
                cell_b: cb,
                face_b: fb,
                denominator: denom,
            });
        }
        let t_ref = state.t_n[ca];
        let num = side_imbalance(&coeffs.s[ca][fa], &state.z_n[ca][fa], fa, t_ref)
            + side_imbalance(&coeffs.s[cb][fb], &state.z_n[cb][fb], fb, t_ref);
        let t_port = t_ref + num / denom;
        state.z_p[ca][fa][fa / 2] = embed_normal(fa, t_port);
        state.z_p[cb][fb][fb / 2] = embed_normal(fb, t_port);
    }

    for b in &mesh.boundaries {
        let (c, iota) = (b.cell, b.face);
        let fixed = match b.condition {
            BoundaryCondition::Adiabatic => None,
            BoundaryCondition::FixedTemperature { t_fix, onset } => {
                (t_now >= onset).then_some(t_fix)
            }
        };
        let t_port = match fixed {
            Some(t_fix) => t_fix,
            None => {
                // Zero-current port value, in deviation form.
                let t_ref = state.t_n[c];
                let q = embed_normal(iota, 1.0) * coeffs.s_normal[c][iota];
                let num = side_imbalance(&coeffs.s[c][iota], &state.z_n[c][iota], iota, t_ref);
                t_ref + num / q
            }
        };
        state.z_p[c][iota][iota / 2] = embed_normal(iota, t_port);
    }

    state.time = t_now + state.tau / 2.0;
    state.phase = HalfPhase::Reflection;
    Ok(())
}

/// Reflection half-step: updates every node state and nodal temperature to
/// t + tau/2 from the node states at t - tau/2 and the ports at t.
///
/// The nodal temperature integrates once per cell,
/// `T += tau/(c_v V) (S + sum_i J_i)`, with the face currents
/// `J_i = s_i . (z_n - delta z_p)`, and is broadcast back into the six
/// normal slots; tangential slots become the opposite-face port
/// temperature differences. Returns the power bookkeeping for the audit.
pub fn reflection_step(
    state: &mut SchemeState,
    coeffs: &SchemeCoefficients,
    sources: &[f64],
    mesh: &Mesh,
) -> Result<CycleEnergy, SchemeError> {
    check_cells(state, mesh)?;
    if state.phase != HalfPhase::Reflection {
        return Err(SchemeError::PhaseMismatch {
            expected: HalfPhase::Reflection,
            actual: state.phase,
        });
    }
    if !sources.is_empty() && sources.len() != mesh.cells.len() {
        return Err(SchemeError::SourceCountMismatch {
            given: sources.len(),
            cells: mesh.cells.len(),
        });
    }

    let mut source_power = 0.0;
    let mut boundary_flux = 0.0;

    for c in 0..mesh.cells.len() {
        let source = sources.get(c).copied().unwrap_or(0.0);
        if !source.is_finite() {
            return Err(SchemeError::NonFiniteSource {
                cell: c,
                value: source,
            });
        }
        let mut flux = 0.0;
        for iota in 0..6 {
            let mut current = 0.0;
            for mu in 0..3 {
                let port = if mu == iota / 2 {
                    state.z_p[c][iota][mu]
                } else {
                    0.0
                };
                current += coeffs.s[c][iota][mu] * (state.z_n[c][iota][mu] - port);
            }
            flux += current;
            if coeffs.boundary_mask[c][iota] {
                boundary_flux += current;
            }
        }
        source_power += source;

        let t_new = state.t_n[c] + state.tau / coeffs.heat_capacity[c] * (source + flux);
        state.t_n[c] = t_new;
        for iota in 0..6 {
            state.z_n[c][iota][iota / 2] = embed_normal(iota, t_new);
        }
        for mu in 0..3 {
            let v = -0.5 * (state.z_p[c][2 * mu + 1][mu] + state.z_p[c][2 * mu][mu]);
            for iota in 0..6 {
                if mu != iota / 2 {
                    state.z_n[c][iota][mu] = v;
                }
            }
        }
    }

    state.time += state.tau / 2.0;
    state.phase = HalfPhase::Connection;
    state.cycles += 1;
    Ok(CycleEnergy {
        source_power,
        boundary_flux,
    })
}

/// One full cycle: connection, then reflection.
pub fn step_cycle(
    state: &mut SchemeState,
    coeffs: &SchemeCoefficients,
    sources: &[f64],
    mesh: &Mesh,
) -> Result<CycleEnergy, SchemeError> {
    connection_step(state, coeffs, mesh)?;
    reflection_step(state, coeffs, sources, mesh)
}

fn check_cells(state: &SchemeState, mesh: &Mesh) -> Result<(), SchemeError> {
    if state.t_n.len() != mesh.cells.len() {
        return Err(SchemeError::CellCountMismatch {
            state_cells: state.t_n.len(),
            mesh_cells: mesh.cells.len(),
        });
    }
    Ok(())
}
