use crate::SchemeCoefficients;

/// Heuristic stable time step:
///
/// `tau = safety * min_cells c_v V / sum_i |s_i^[i/2]|`.
///
/// For a cube of side h this is `safety * c_v h^2 / (6 lambda)`, i.e. the
/// classical 3-D explicit diffusion limit scaled by `safety`. The empirical
/// divergence boundary (located by bisection in the verification suites)
/// sits above this value for safety <= 1/2, while four times the heuristic
/// demonstrably diverges.
pub fn stable_timestep(coeffs: &SchemeCoefficients, safety: f64) -> f64 {
    let mut tau = f64::INFINITY;
    for c in 0..coeffs.heat_capacity.len() {
        let total: f64 = coeffs.s_normal[c].iter().map(|s| s.abs()).sum();
        if total > 0.0 {
            tau = tau.min(coeffs.heat_capacity[c] / total);
        }
    }
    safety * tau
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compute_coefficients;
    use hexmesh::{build_structured_mesh, Material, StructuredSpec};

    #[test]
    fn unit_cube_heuristic() {
        let mesh = build_structured_mesh(&StructuredSpec::uniform(
            1,
            1,
            1,
            1.0,
            Material::new(1.0, 1.0).unwrap(),
        ))
        .unwrap();
        let coeffs = compute_coefficients(&mesh).unwrap();
        let tau = stable_timestep(&coeffs, 0.5);
        assert!((tau - 1.0 / 12.0).abs() < 1e-15, "tau = {tau}");
    }

    #[test]
    fn halved_spacing_quarters_tau() {
        let mat = Material::new(2.0, 3.0).unwrap();
        let coarse = compute_coefficients(
            &build_structured_mesh(&StructuredSpec::uniform(2, 2, 2, 0.1, mat)).unwrap(),
        )
        .unwrap();
        let fine = compute_coefficients(
            &build_structured_mesh(&StructuredSpec::uniform(2, 2, 2, 0.05, mat)).unwrap(),
        )
        .unwrap();
        let ratio = stable_timestep(&coarse, 0.5) / stable_timestep(&fine, 0.5);
        assert!((ratio - 4.0).abs() < 1e-12);
    }

    #[test]
    fn zero_safety_gives_zero_tau() {
        let mesh = build_structured_mesh(&StructuredSpec::uniform(
            1,
            1,
            1,
            1.0,
            Material::new(1.0, 1.0).unwrap(),
        ))
        .unwrap();
        let coeffs = compute_coefficients(&mesh).unwrap();
        let tau = stable_timestep(&coeffs, 0.0);
        assert_eq!(tau, 0.0);
        // Downstream construction rejects it.
        assert!(crate::init_state(&mesh, &coeffs, tau, &[0.0]).is_err());
    }
}
