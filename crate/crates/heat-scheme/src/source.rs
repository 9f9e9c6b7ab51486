use crate::SchemeError;
use hexmesh::HexCell;
use num_complex::Complex64;

/// Heat power deposited in one cell (W), either given directly or derived
/// from dielectric losses of an externally computed field solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSource {
    pub power: f64,
}

impl CellSource {
    pub fn constant(power: f64) -> Self {
        Self { power }
    }

    /// Source from dielectric losses, see [`dielectric_source`].
    pub fn dielectric(
        cell: &HexCell,
        sigma: f64,
        nodal_voltages: [Complex64; 3],
    ) -> Result<Self, SchemeError> {
        Ok(Self {
            power: dielectric_source(cell, sigma, nodal_voltages)?,
        })
    }
}

/// Dielectric loss power of one cell (W):
///
/// `S = 1/2 sigma V sum_n |gamma_n^m U_m|^2`,
///
/// where `U` are the complex nodal voltages `<b_m, E>` of a frequency-domain
/// field solution and `sigma = 2 pi f epsilon tan(delta)` the effective loss
/// conductivity, supplied pre-combined. Always non-negative.
pub fn dielectric_source(
    cell: &HexCell,
    sigma: f64,
    nodal_voltages: [Complex64; 3],
) -> Result<f64, SchemeError> {
    if !(sigma >= 0.0) {
        return Err(SchemeError::NegativeConductivity { sigma });
    }
    // E_n = gamma_n^m U_m, applied per real/imaginary part since gamma is real.
    let mut total = 0.0;
    for nu in 0..3 {
        let mut e = Complex64::new(0.0, 0.0);
        for mu in 0..3 {
            e += cell.gamma[(nu, mu)] * nodal_voltages[mu];
        }
        total += e.norm_sqr();
    }
    Ok(0.5 * sigma * cell.volume * total)
}
