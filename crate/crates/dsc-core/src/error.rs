use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TimeError {
    #[error("time step must be positive, got {tau}")]
    NonPositiveTau { tau: f64 },

    #[error("{value} s is not an integer multiple of tau/2 = {half_tau} s")]
    NotHalfStepMultiple { value: f64, half_tau: f64 },
}

#[derive(Debug, Error, PartialEq)]
pub enum HistoryError {
    #[error("sample {index} has dimension {got}, expected {expected}")]
    DimMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
}

#[derive(Debug, Error, PartialEq)]
pub enum ProcessError {
    #[error("{side} propagator needs {depth} half-steps of history but only {retained} are retained")]
    DepthExceedsRetained {
        side: &'static str,
        depth: usize,
        retained: usize,
    },

    #[error("{side} propagator dimension {got} does not match process dimension {expected}")]
    PropagatorDim {
        side: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("excitation sample {index} has dimension {got}, expected {expected}")]
    ExcitationDim {
        index: usize,
        got: usize,
        expected: usize,
    },

    #[error("propagator returned dimension {got} at half-step {half_step}, expected {expected}")]
    OutputDim {
        half_step: i64,
        got: usize,
        expected: usize,
    },

    #[error("shift composition with r = {r}, s = {s} half-steps is not causal (r + s must be <= 0)")]
    NonCausalShift { r: i64, s: i64 },
}
