use crate::TimeError;

/// A point of the half-step lattice: `t = k * tau / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfStep(pub i64);

impl HalfStep {
    pub const ZERO: HalfStep = HalfStep(0);

    /// True when the point lies on the integer lattice I = { k tau }.
    pub fn on_integer_grid(self) -> bool {
        self.0.rem_euclid(2) == 0
    }

    /// True when the point lies on J = { (2k+1) tau / 2 }.
    pub fn on_half_grid(self) -> bool {
        !self.on_integer_grid()
    }

    pub fn seconds(self, tau: f64) -> f64 {
        self.0 as f64 * (tau / 2.0)
    }

    /// Nearest lattice point for a time in seconds; rejects values that are
    /// not integer multiples of tau/2 (to 1e-9 relative).
    pub fn from_seconds(t: f64, tau: f64) -> Result<Self, TimeError> {
        if !(tau > 0.0) {
            return Err(TimeError::NonPositiveTau { tau });
        }
        let half = tau / 2.0;
        let k = (t / half).round();
        if (t - k * half).abs() > 1e-9 * half.max(t.abs()) {
            return Err(TimeError::NotHalfStepMultiple {
                value: t,
                half_tau: half,
            });
        }
        Ok(HalfStep(k as i64))
    }
}

impl std::ops::Add<i64> for HalfStep {
    type Output = HalfStep;
    fn add(self, rhs: i64) -> HalfStep {
        HalfStep(self.0 + rhs)
    }
}

impl std::ops::Sub<i64> for HalfStep {
    type Output = HalfStep;
    fn sub(self, rhs: i64) -> HalfStep {
        HalfStep(self.0 - rhs)
    }
}

/// Which sub-lattice of the half-step lattice a timeline covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// I = { k tau }: integer multiples of the time step.
    Integer,
    /// J = { (2k+1) tau/2 }: half-shifted multiples.
    HalfShifted,
    /// H = I u J.
    Union,
}

impl GridKind {
    pub fn contains(self, t: HalfStep) -> bool {
        match self {
            GridKind::Integer => t.on_integer_grid(),
            GridKind::HalfShifted => t.on_half_grid(),
            GridKind::Union => true,
        }
    }
}

/// A discrete timeline: time step, sub-lattice, and the uniform atomic
/// measure assigning weight tau to every sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timeline {
    tau: f64,
    kind: GridKind,
}

impl Timeline {
    pub fn new(tau: f64, kind: GridKind) -> Result<Self, TimeError> {
        if !(tau > 0.0) {
            return Err(TimeError::NonPositiveTau { tau });
        }
        Ok(Self { tau, kind })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// Measure weight of one sample.
    pub fn sample_weight(&self) -> f64 {
        self.tau
    }

    pub fn contains(&self, t: HalfStep) -> bool {
        self.kind.contains(t)
    }
}
