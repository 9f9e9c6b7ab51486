use crate::process::{norm, Propagator};
use crate::signal::Trajectory;
use crate::HalfStep;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A delimiting functional: a non-negative `alpha` together with constants
/// `a >= 0`, `b > 0`, `c > 0` such that `|z| <= a + b * alpha(z)^c` on the
/// states of interest.
pub struct PassivityFunctional {
    alpha: Box<dyn Fn(&[f64]) -> f64 + Send + Sync>,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// A sampled state violating the delimiting inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct DelimitingViolation {
    pub sample: usize,
    pub norm: f64,
    pub bound: f64,
}

impl PassivityFunctional {
    pub fn new(
        alpha: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        a: f64,
        b: f64,
        c: f64,
    ) -> Self {
        assert!(a >= 0.0 && b > 0.0 && c > 0.0, "delimiting constants");
        Self {
            alpha: Box::new(alpha),
            a,
            b,
            c,
        }
    }

    /// `alpha = |.|` with constants a = 0, b = 1, c = 1.
    pub fn state_norm() -> Self {
        Self::new(norm, 0.0, 1.0, 1.0)
    }

    /// `alpha = |.|^2` with constants a = 0, b = 1, c = 1/2.
    pub fn norm_squared() -> Self {
        Self::new(|z: &[f64]| z.iter().map(|x| x * x).sum(), 0.0, 1.0, 0.5)
    }

    pub fn alpha(&self, z: &[f64]) -> f64 {
        (self.alpha)(z)
    }

    /// Checks `alpha >= 0` and the delimiting inequality on every sample.
    pub fn check_delimiting<'a>(
        &self,
        samples: impl IntoIterator<Item = &'a [f64]>,
    ) -> Result<(), DelimitingViolation> {
        for (i, z) in samples.into_iter().enumerate() {
            let a = self.alpha(z);
            let n = norm(z);
            let bound = self.a + self.b * a.powf(self.c);
            if a < 0.0 || n > bound * (1.0 + 1e-12) + 1e-300 {
                return Err(DelimitingViolation {
                    sample: i,
                    norm: n,
                    bound,
                });
            }
        }
        Ok(())
    }
}

/// First probe/step at which the running alpha-sum comparison failed.
#[derive(Debug, Clone, PartialEq)]
pub struct PassivityViolation {
    pub probe: usize,
    pub step: usize,
    pub margin: f64,
}

/// Outcome of the sampling-based passivity check.
///
/// This is a falsifier, not a proof: it evaluates the running alpha-sum
/// inequality on the supplied probes only. `worst_margin` is the smallest
/// slack `sum alpha(f) - sum alpha(Ff)` observed over all probes and time
/// horizons.
#[derive(Debug, Clone, PartialEq)]
pub struct PassivityReport {
    pub passive: bool,
    pub worst_margin: f64,
    pub first_violation: Option<PassivityViolation>,
}

/// Evaluates the alpha-passivity inequality for the map on each probe:
/// for every t up to `horizon` full steps,
/// `sum_{s<t} alpha(Ff(s)) tau <= sum_{s<t} alpha(f(s)) tau + tol`.
///
/// The map is applied along each probe on its own switching lattice
/// (tau-spaced anchors starting at the probe start), consuming the probe's
/// half-step history at each anchor.
pub fn check_alpha_passivity(
    map: &dyn Propagator,
    functional: &PassivityFunctional,
    probes: &[Trajectory],
    horizon: usize,
    tau: f64,
    tol: f64,
) -> PassivityReport {
    let mut worst = f64::INFINITY;
    let mut first_violation = None;

    for (pi, probe) in probes.iter().enumerate() {
        let mut sum_in = 0.0;
        let mut sum_out = 0.0;
        for step in 0..horizon {
            let anchor = probe.start() + 2 * step as i64;
            let input = probe.value_at(anchor);
            let output = map.eval(&probe.history_at(anchor, map.depth()));
            sum_in += functional.alpha(input) * tau;
            sum_out += functional.alpha(&output) * tau;
            let margin = sum_in - sum_out;
            if margin < worst {
                worst = margin;
            }
            if margin < -tol && first_violation.is_none() {
                first_violation = Some(PassivityViolation {
                    probe: pi,
                    step,
                    margin,
                });
            }
        }
    }

    PassivityReport {
        passive: first_violation.is_none(),
        worst_margin: worst,
        first_violation,
    }
}

/// The stability bound of the iterated passive causal process:
/// `a + (b / tau * integral)^c`, where `integral` is the running integral
/// of `alpha(e + g) - alpha(g)` over the excitation support. A negative
/// integral clamps to the trivial bound `a`.
pub fn stability_bound(functional: &PassivityFunctional, tau: f64, integral: f64) -> f64 {
    if integral <= 0.0 {
        functional.a
    } else {
        functional.a + (functional.b / tau * integral).powf(functional.c)
    }
}

/// `sum_{k<N} [alpha(e_k + g(k tau)) - alpha(g(k tau))] * tau` for an
/// excitation supported on cycles `0..N`.
pub fn excitation_integral(
    functional: &PassivityFunctional,
    excitation: &[Vec<f64>],
    g_at_cycle: impl Fn(usize) -> Vec<f64>,
    tau: f64,
) -> f64 {
    let mut total = 0.0;
    for (k, e) in excitation.iter().enumerate() {
        let g = g_at_cycle(k);
        let sum: Vec<f64> = e.iter().zip(&g).map(|(a, b)| a + b).collect();
        total += (functional.alpha(&sum) - functional.alpha(&g)) * tau;
    }
    total
}

/// Uniform random probes in `[-1, 1]^dim`, supported on `support` full
/// steps from t = 0 (zero at half-shifted slots).
pub fn random_probes(dim: usize, count: usize, support: usize, seed: u64) -> Vec<Trajectory> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut samples = Vec::with_capacity(2 * support);
            for k in 0..2 * support {
                if k % 2 == 0 {
                    samples.push((0..dim).map(|_| rng.random_range(-1.0..1.0)).collect());
                } else {
                    samples.push(vec![0.0; dim]);
                }
            }
            Trajectory::new(HalfStep(0), dim, samples).expect("consistent dims")
        })
        .collect()
}

/// Free-running orbit probes: trajectories `f(k+1) = F(f(k) history)`
/// seeded with random states. On an orbit the running alpha-sum inequality
/// telescopes to `alpha(f(t)) <= alpha(f(0))`, so these probes expose
/// instabilities that single applications on random states dilute (a
/// growing mode emerges under iteration like in power iteration).
pub fn orbit_probes(
    map: &dyn Propagator,
    count: usize,
    cycles: usize,
    seed: u64,
) -> Vec<Trajectory> {
    let dim = map.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x0: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            let mut samples: Vec<Vec<f64>> = vec![x0.clone(), x0];
            for k in 0..cycles {
                let so_far = Trajectory::new(HalfStep(0), dim, samples.clone())
                    .expect("consistent dims");
                let next = map.eval(&so_far.history_at(HalfStep(2 * k as i64), map.depth()));
                samples.push(next.clone()); // fresh at the even slot
                samples.push(next); // carried across the half step
            }
            samples.truncate(2 * cycles + 1);
            Trajectory::new(HalfStep(0), dim, samples).expect("consistent dims")
        })
        .collect()
}

/// Axis-aligned Dirac probes: the unit impulse `e_i` at t = 0, for up to
/// `max_axes` axes (evenly spread over the dimensions).
pub fn dirac_probes(dim: usize, max_axes: usize) -> Vec<Trajectory> {
    let count = max_axes.min(dim).max(1);
    let stride = (dim / count).max(1);
    (0..dim)
        .step_by(stride)
        .take(count)
        .map(|axis| {
            let mut sample = vec![0.0; dim];
            sample[axis] = 1.0;
            Trajectory::new(HalfStep(0), dim, vec![sample]).expect("consistent dims")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::process::FnPropagator;
    use crate::GridKind;

    #[test]
    fn zero_map_is_passive_with_full_slack() {
        let zero = FnPropagator::new(3, 1, GridKind::Integer, |h| vec![0.0; h.dim()]);
        let pf = PassivityFunctional::norm_squared();
        let probes = random_probes(3, 8, 4, 1);
        let tau = 0.5;
        let report = check_alpha_passivity(&zero, &pf, &probes, 6, tau, 1e-12);
        assert!(report.passive);
        // Slack equals the full alpha-sum of the richest probe... at least
        // it must be non-negative and equal the smallest probe mass.
        let min_mass = probes
            .iter()
            .map(|p| {
                (0..6)
                    .map(|k| pf.alpha(p.value_at(HalfStep(2 * k))) * tau)
                    .sum::<f64>()
            })
            .fold(f64::INFINITY, f64::min);
        assert!(report.worst_margin <= min_mass + 1e-12);
        assert!(report.worst_margin >= 0.0);
    }

    #[test]
    fn scaling_map_fails_on_any_nonzero_probe() {
        let scale = FnPropagator::new(2, 1, GridKind::Integer, |h: &crate::SignalHistory| {
            h.latest().iter().map(|x| 1.5 * x).collect()
        });
        let pf = PassivityFunctional::state_norm();
        let probes = random_probes(2, 4, 3, 2);
        let report = check_alpha_passivity(&scale, &pf, &probes, 4, 1.0, 1e-12);
        assert!(!report.passive);
        assert_eq!(report.first_violation.as_ref().unwrap().step, 0);
    }

    #[test]
    fn bound_clamps_negative_integral() {
        let pf = PassivityFunctional::new(norm, 2.0, 1.0, 1.0);
        assert_eq!(stability_bound(&pf, 0.1, -3.0), 2.0);
        assert_eq!(stability_bound(&pf, 0.1, 0.0), 2.0);
    }

    #[test]
    fn dirac_bound_matches_corollaries() {
        let tau = 0.25;
        // Corollary for alpha = |.|: bound = (1/tau) * integral of |e|.
        let pf = PassivityFunctional::state_norm();
        let e0 = vec![3.0, 4.0];
        let integral =
            excitation_integral(&pf, &[e0.clone()], |_| vec![0.0, 0.0], tau);
        assert!((integral - 5.0 * tau).abs() < 1e-15);
        assert!((stability_bound(&pf, tau, integral) - 5.0).abs() < 1e-12);

        // Dirac case for general alpha: a + (b/tau * tau alpha(e0))^c.
        let pf2 = PassivityFunctional::norm_squared();
        let integral2 = excitation_integral(&pf2, &[e0.clone()], |_| vec![0.0, 0.0], tau);
        let expected = 0.0 + (1.0_f64 / tau * (tau * 25.0)).powf(0.5);
        assert!((stability_bound(&pf2, tau, integral2) - expected).abs() < 1e-12);
        assert!((expected - 5.0).abs() < 1e-12);
    }

    #[test]
    fn delimiting_check_catches_violations() {
        // alpha = |.|^2 with c = 1/2 delimits exactly.
        let pf = PassivityFunctional::norm_squared();
        let samples = [vec![1.0, -2.0], vec![0.0, 0.0], vec![10.0, 0.1]];
        assert!(pf
            .check_delimiting(samples.iter().map(Vec::as_slice))
            .is_ok());

        // A functional too weak for the claimed constants fails.
        let weak = PassivityFunctional::new(|_z: &[f64]| 0.0, 0.0, 1.0, 1.0);
        assert!(weak
            .check_delimiting(samples.iter().map(Vec::as_slice))
            .is_err());
    }

    #[test]
    fn alpha_continuity_under_small_perturbations() {
        let pf = PassivityFunctional::norm_squared();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let z: Vec<f64> = (0..5).map(|_| rng.random_range(-1.0..1.0)).collect();
            let dz: Vec<f64> = z.iter().map(|x| x + 1e-9).collect();
            assert!((pf.alpha(&z) - pf.alpha(&dz)).abs() < 1e-7);
        }
    }
}
