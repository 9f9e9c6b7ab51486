use crate::step::CycleEnergy;
use crate::{SchemeCoefficients, SchemeState};

/// Energy-balance residual of one full cycle (J):
///
/// `sum_cells c_v V (T_after - T_before) - tau (S + J_boundary)`.
///
/// Interior currents cancel pairwise by the connection construction, so on
/// any mesh the residual stays at rounding level (<= 1e-10 of the total
/// energy scale) regardless of sources or boundary activity.
pub fn energy_audit(
    before: &SchemeState,
    after: &SchemeState,
    coeffs: &SchemeCoefficients,
    energy: &CycleEnergy,
    tau: f64,
) -> f64 {
    let mut delta = 0.0;
    for c in 0..before.t_n.len() {
        delta += coeffs.heat_capacity[c] * (after.t_n[c] - before.t_n[c]);
    }
    delta - tau * (energy.source_power + energy.boundary_flux)
}

/// Scale against which the audit residual should be judged:
/// the total stored energy magnitude plus the cycle throughput.
pub fn energy_scale(state: &SchemeState, coeffs: &SchemeCoefficients, energy: &CycleEnergy, tau: f64) -> f64 {
    let stored: f64 = state
        .t_n
        .iter()
        .zip(&coeffs.heat_capacity)
        .map(|(t, cv)| (cv * t).abs())
        .sum();
    stored + tau * (energy.source_power.abs() + energy.boundary_flux.abs())
}
