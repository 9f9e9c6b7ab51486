use crate::{GridKind, HalfStep, ProcessError, SignalHistory};

/// One propagating-field state: the incident and outgoing components,
/// both vectors in the same normed space.
#[derive(Debug, Clone, PartialEq)]
pub struct DscState {
    pub incident: Vec<f64>,
    pub outgoing: Vec<f64>,
}

impl DscState {
    pub fn zero(dim: usize) -> Self {
        Self {
            incident: vec![0.0; dim],
            outgoing: vec![0.0; dim],
        }
    }

    /// The node-boundary map: swaps incident and outgoing. An involution
    /// and an isometry of the paired norm.
    pub fn nb(&self) -> DscState {
        DscState {
            incident: self.outgoing.clone(),
            outgoing: self.incident.clone(),
        }
    }

    /// Paired norm `sqrt(|incident|^2 + |outgoing|^2)`.
    pub fn pair_norm(&self) -> f64 {
        (norm_sq(&self.incident) + norm_sq(&self.outgoing)).sqrt()
    }

    /// Total field `incident + outgoing` (port type on I, node type on J).
    pub fn total(&self) -> Vec<f64> {
        self.incident
            .iter()
            .zip(&self.outgoing)
            .map(|(a, b)| a + b)
            .collect()
    }
}

fn norm_sq(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    norm_sq(v).sqrt()
}

/// A causal update map evaluated on anchored histories.
///
/// `eval` receives a back-in-time window anchored at the update time and
/// returns the new state vector for that time. Causality is structural:
/// the window only reaches backwards. `depth` declares how many half-step
/// samples (including the anchor) the map reads.
pub trait Propagator {
    fn dim(&self) -> usize;
    fn depth(&self) -> usize;
    /// Lattice on which the map switches (J for reflection, I for connection).
    fn grid(&self) -> GridKind;
    fn eval(&self, history: &SignalHistory) -> Vec<f64>;
}

/// Propagator backed by a closure over the latest `depth` samples.
pub struct FnPropagator<F: Fn(&SignalHistory) -> Vec<f64>> {
    pub dim: usize,
    pub depth: usize,
    pub grid: GridKind,
    pub f: F,
}

impl<F: Fn(&SignalHistory) -> Vec<f64>> FnPropagator<F> {
    pub fn new(dim: usize, depth: usize, grid: GridKind, f: F) -> Self {
        Self {
            dim,
            depth,
            grid,
            f,
        }
    }
}

impl<F: Fn(&SignalHistory) -> Vec<f64>> Propagator for FnPropagator<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn depth(&self) -> usize {
        self.depth
    }
    fn grid(&self) -> GridKind {
        self.grid
    }
    fn eval(&self, history: &SignalHistory) -> Vec<f64> {
        (self.f)(history)
    }
}

/// `T_r o F o T_s` with shifts in half-steps: evaluated at anchor t, the
/// inner map runs at anchor `t + r` on the window of the `s`-shifted input,
/// so its newest visible sample is the input at `t + r + s`. Requires
/// `r + s <= 0`; the net delay makes the composition causal and preserves
/// alpha-passivity of the inner map.
pub struct ShiftedPropagator<P: Propagator> {
    inner: P,
    r: i64,
    s: i64,
}

impl<P: Propagator> ShiftedPropagator<P> {
    pub fn new(inner: P, r: i64, s: i64) -> Result<Self, ProcessError> {
        if r + s > 0 {
            return Err(ProcessError::NonCausalShift { r, s });
        }
        Ok(Self { inner, r, s })
    }
}

impl<P: Propagator> Propagator for ShiftedPropagator<P> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn depth(&self) -> usize {
        self.inner.depth() + (-(self.r + self.s)) as usize
    }
    fn grid(&self) -> GridKind {
        GridKind::Union
    }
    fn eval(&self, history: &SignalHistory) -> Vec<f64> {
        let delay = (-(self.r + self.s)) as usize;
        let window = history
            .drop_newest(delay)
            .with_anchor(history.anchor() + self.r);
        self.inner.eval(&window)
    }
}

/// Reflection/connection pair generating a DSC process.
pub struct PropagatorPair {
    pub reflection: Box<dyn Propagator>,
    pub connection: Box<dyn Propagator>,
}

impl PropagatorPair {
    pub fn new(reflection: Box<dyn Propagator>, connection: Box<dyn Propagator>) -> Self {
        Self {
            reflection,
            connection,
        }
    }
}

/// Trajectory of a DSC process over the half-step lattice H.
///
/// `states[k]` is the state at half-step k; index 0 is the zero state at
/// t = 0. Incident switches on I (fresh at even k), outgoing on J.
#[derive(Debug, Clone)]
pub struct ProcessTrajectory {
    pub dim: usize,
    pub states: Vec<DscState>,
}

impl ProcessTrajectory {
    /// Incident component at cycle k (t = k tau).
    pub fn incident_at_cycle(&self, k: usize) -> &[f64] {
        &self.states[2 * k].incident
    }

    pub fn outgoing_at(&self, half_step: usize) -> &[f64] {
        &self.states[half_step].outgoing
    }

    pub fn state_at(&self, half_step: usize) -> &DscState {
        &self.states[half_step]
    }

    pub fn cycles(&self) -> usize {
        (self.states.len() - 1) / 2
    }

    /// Largest incident norm over cycles `from..=cycles`.
    pub fn max_incident_norm_from(&self, from: usize) -> f64 {
        (from..=self.cycles())
            .map(|k| norm(self.incident_at_cycle(k)))
            .fold(0.0, f64::max)
    }
}

/// Runs the DSC process excited with `excitation` for `steps` full cycles.
///
/// The excitation is incident-only, supported on cycles 0..N. Starting from
/// the zero state, each half-step applies one branch of the two-step
/// recursion: at t in I the outgoing component updates through the
/// reflection map applied to the half-step-shifted history of
/// `excitation + incident`, at t in J the incident component updates
/// through the connection map applied to the shifted outgoing history; the
/// untouched component carries over. Histories are sampled on H with
/// switching-carried values, so a propagator of depth d sees the latest d
/// half-step samples.
///
/// `retain` is the length of the history window the runner keeps for the
/// propagators; a propagator declaring a deeper reach is rejected.
pub fn run_process(
    pair: &PropagatorPair,
    excitation: &[Vec<f64>],
    steps: usize,
    retain: usize,
) -> Result<ProcessTrajectory, ProcessError> {
    let dim = pair.reflection.dim();
    if pair.connection.dim() != dim {
        return Err(ProcessError::PropagatorDim {
            side: "connection",
            got: pair.connection.dim(),
            expected: dim,
        });
    }
    for (side, p) in [
        ("reflection", &pair.reflection),
        ("connection", &pair.connection),
    ] {
        if p.depth() > retain {
            return Err(ProcessError::DepthExceedsRetained {
                side,
                depth: p.depth(),
                retained: retain,
            });
        }
    }
    for (index, e) in excitation.iter().enumerate() {
        if e.len() != dim {
            return Err(ProcessError::ExcitationDim {
                index,
                got: e.len(),
                expected: dim,
            });
        }
    }

    // e extended to H by the switching convention of incident fields:
    // fresh at even half-steps, carried at odd ones.
    let e_at = |half_step: i64| -> Option<&[f64]> {
        if half_step < 0 {
            return None;
        }
        let cycle = (half_step / 2) as usize;
        excitation.get(cycle).map(Vec::as_slice)
    };

    let mut states = Vec::with_capacity(2 * steps + 1);
    states.push(DscState::zero(dim));

    for k in 0..(2 * steps as i64) {
        let current = states.last().unwrap().clone();
        let next = if HalfStep(k).on_integer_grid() {
            // Reflection half-step: history of e + incident over H.
            let depth = pair.reflection.depth();
            let mut samples = Vec::with_capacity(depth);
            for n in 0..depth as i64 {
                let m = k - n;
                let mut s = if m >= 0 {
                    states[m as usize].incident.clone()
                } else {
                    vec![0.0; dim]
                };
                if let Some(e) = e_at(m) {
                    for (si, ei) in s.iter_mut().zip(e) {
                        *si += ei;
                    }
                }
                samples.push(s);
            }
            let hist = SignalHistory::new(HalfStep(k), dim, samples)
                .expect("window dims are consistent")
                .shift_steps(-1);
            let outgoing = pair.reflection.eval(&hist);
            if outgoing.len() != dim {
                return Err(ProcessError::OutputDim {
                    half_step: k + 1,
                    got: outgoing.len(),
                    expected: dim,
                });
            }
            DscState {
                incident: current.incident,
                outgoing,
            }
        } else {
            // Connection half-step: history of outgoing over H.
            let depth = pair.connection.depth();
            let mut samples = Vec::with_capacity(depth);
            for n in 0..depth as i64 {
                let m = k - n;
                samples.push(if m >= 0 {
                    states[m as usize].outgoing.clone()
                } else {
                    vec![0.0; dim]
                });
            }
            let hist = SignalHistory::new(HalfStep(k), dim, samples)
                .expect("window dims are consistent")
                .shift_steps(-1);
            let incident = pair.connection.eval(&hist);
            if incident.len() != dim {
                return Err(ProcessError::OutputDim {
                    half_step: k + 1,
                    got: incident.len(),
                    expected: dim,
                });
            }
            DscState {
                incident,
                outgoing: current.outgoing,
            }
        };
        states.push(next);
    }

    Ok(ProcessTrajectory { dim, states })
}
