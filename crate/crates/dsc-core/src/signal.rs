use crate::{HalfStep, HistoryError};

/// A finite back-in-time sequence of state vectors: sample `n` lives at
/// `anchor - n` half-steps. Entries beyond the stored window are zero.
///
/// The shift operator `T_q: f(t) -> f(t + q)` re-anchors the window:
/// shifting by `q` half-steps decreases the anchor by `q` while keeping
/// the samples, so `shift(shift(f, p), q) = shift(f, p + q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalHistory {
    anchor: HalfStep,
    dim: usize,
    samples: Vec<Vec<f64>>,
}

impl SignalHistory {
    pub fn new(
        anchor: HalfStep,
        dim: usize,
        samples: Vec<Vec<f64>>,
    ) -> Result<Self, HistoryError> {
        for (index, s) in samples.iter().enumerate() {
            if s.len() != dim {
                return Err(HistoryError::DimMismatch {
                    index,
                    got: s.len(),
                    expected: dim,
                });
            }
        }
        Ok(Self {
            anchor,
            dim,
            samples,
        })
    }

    pub fn zero(anchor: HalfStep, dim: usize, len: usize) -> Self {
        Self {
            anchor,
            dim,
            samples: vec![vec![0.0; dim]; len],
        }
    }

    pub fn anchor(&self) -> HalfStep {
        self.anchor
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sample `n` half-steps before the anchor, if stored.
    pub fn sample(&self, n: usize) -> Option<&[f64]> {
        self.samples.get(n).map(Vec::as_slice)
    }

    /// The most recent sample (at the anchor). Zero if the history is empty.
    pub fn latest(&self) -> &[f64] {
        static EMPTY: [f64; 0] = [];
        self.samples.first().map(Vec::as_slice).unwrap_or(&EMPTY)
    }

    pub fn time_of_sample(&self, n: usize) -> HalfStep {
        self.anchor - n as i64
    }

    /// `T_q` with `q` in half-steps.
    pub fn shift_steps(&self, q: i64) -> SignalHistory {
        SignalHistory {
            anchor: self.anchor - q,
            dim: self.dim,
            samples: self.samples.clone(),
        }
    }

    /// `T_q` with `q` in seconds; rejects q that is not a half-step multiple.
    pub fn shift_seconds(&self, q: f64, tau: f64) -> Result<SignalHistory, crate::TimeError> {
        let steps = HalfStep::from_seconds(q, tau)?;
        Ok(self.shift_steps(steps.0))
    }

    /// Same samples with the window re-stamped to a new anchor.
    pub fn with_anchor(&self, anchor: HalfStep) -> SignalHistory {
        SignalHistory {
            anchor,
            dim: self.dim,
            samples: self.samples.clone(),
        }
    }

    /// Drops the `d` newest samples: the window of the same signal anchored
    /// `d` half-steps earlier.
    pub fn drop_newest(&self, d: usize) -> SignalHistory {
        SignalHistory {
            anchor: self.anchor - d as i64,
            dim: self.dim,
            samples: self.samples.get(d..).map(<[_]>::to_vec).unwrap_or_default(),
        }
    }

    /// Truncation `[f]_{<= t}`: zeroes every sample whose time exceeds `t`.
    /// Idempotent.
    pub fn truncate_at(&self, t: HalfStep) -> SignalHistory {
        let mut out = self.clone();
        for n in 0..out.samples.len() {
            if out.time_of_sample(n) > t {
                out.samples[n].iter_mut().for_each(|x| *x = 0.0);
            }
        }
        out
    }
}

/// A forward-time sequence of state vectors on the half-step lattice:
/// sample `k` lives at `start + k`. Outside the window the signal is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    start: HalfStep,
    dim: usize,
    samples: Vec<Vec<f64>>,
    zeros: Vec<f64>,
}

impl Trajectory {
    pub fn new(start: HalfStep, dim: usize, samples: Vec<Vec<f64>>) -> Result<Self, HistoryError> {
        for (index, s) in samples.iter().enumerate() {
            if s.len() != dim {
                return Err(HistoryError::DimMismatch {
                    index,
                    got: s.len(),
                    expected: dim,
                });
            }
        }
        Ok(Self {
            start,
            dim,
            samples,
            zeros: vec![0.0; dim],
        })
    }

    pub fn start(&self) -> HalfStep {
        self.start
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn value_at(&self, t: HalfStep) -> &[f64] {
        let offset = t.0 - self.start.0;
        if offset < 0 {
            return &self.zeros;
        }
        self.samples
            .get(offset as usize)
            .map(Vec::as_slice)
            .unwrap_or(&self.zeros)
    }

    /// Back-in-time window of `depth` half-step samples anchored at `t`.
    pub fn history_at(&self, t: HalfStep, depth: usize) -> SignalHistory {
        let samples = (0..depth)
            .map(|n| self.value_at(t - n as i64).to_vec())
            .collect();
        SignalHistory {
            anchor: t,
            dim: self.dim,
            samples,
        }
    }

    /// Zeroes all samples at times strictly after `t`.
    pub fn truncate_at(&self, t: HalfStep) -> Trajectory {
        let mut out = self.clone();
        for k in 0..out.samples.len() {
            if out.start + k as i64 > t {
                out.samples[k].iter_mut().for_each(|x| *x = 0.0);
            }
        }
        out
    }
}
