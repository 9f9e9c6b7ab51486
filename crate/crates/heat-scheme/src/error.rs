use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("state has {state_cells} cells but the mesh has {mesh_cells}")]
    CellCountMismatch {
        state_cells: usize,
        mesh_cells: usize,
    },

    #[error("expected a {expected:?} half-step, but the state is awaiting {actual:?}")]
    PhaseMismatch {
        expected: crate::HalfPhase,
        actual: crate::HalfPhase,
    },

    #[error("singular interface denominator {denominator} at link {link} (cell {cell_a} face {face_a} vs cell {cell_b} face {face_b})")]
    SingularInterface {
        link: usize,
        cell_a: usize,
        face_a: usize,
        cell_b: usize,
        face_b: usize,
        denominator: f64,
    },

    #[error("source power for cell {cell} is not finite: {value}")]
    NonFiniteSource { cell: usize, value: f64 },

    #[error("sources were given for {given} cells but the mesh has {cells}")]
    SourceCountMismatch { given: usize, cells: usize },

    #[error("initial temperature field has {given} entries but the mesh has {cells} cells")]
    FieldCountMismatch { given: usize, cells: usize },

    #[error("time step must be positive, got {tau}")]
    NonPositiveTau { tau: f64 },

    #[error("dielectric conductivity must be non-negative, got {sigma}")]
    NegativeConductivity { sigma: f64 },
}
