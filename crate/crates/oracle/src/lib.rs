//! Independent ground truth for transient conduction: the analytic slab
//! solution behind the dispersion test, and a classical explicit 1-D
//! finite-difference solver for cross-checks.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("slab parameters must be positive: L = {length}, alpha = {diffusivity}, T_step = {t_step}")]
    InvalidSlab {
        length: f64,
        diffusivity: f64,
        t_step: f64,
    },

    #[error("series must keep at least 20 terms, got {terms}")]
    TooFewTerms { terms: usize },

    #[error("explicit step tau = {tau} exceeds the 1-D stability limit {limit}")]
    UnstableStep { tau: f64, limit: f64 },

    #[error("fd1d needs at least 2 cells, got {cells}")]
    TooFewCells { cells: usize },
}

/// Slab of length L, initially at 0, with a Heaviside temperature step
/// imposed at x = 0 and an insulated far end at x = L.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabProblem {
    /// Slab length (m).
    pub length: f64,
    /// Diffusivity lambda_H / c_v (m^2/s).
    pub diffusivity: f64,
    /// Imposed step temperature (K).
    pub t_step: f64,
    /// Cap on the number of series terms; truncation is adaptive below it.
    pub series_terms: usize,
}

/// Below this Fourier number the sine series converges slowly and the
/// complementary-error-function image series is used instead.
const SHORT_TIME_FO: f64 = 0.05;

/// Adaptive truncation: stop once a term falls below this fraction of T_step.
const TERM_CUTOFF: f64 = 1e-14;

impl SlabProblem {
    pub fn new(length: f64, diffusivity: f64, t_step: f64) -> Result<Self, OracleError> {
        if !(length > 0.0 && diffusivity > 0.0 && t_step > 0.0) {
            return Err(OracleError::InvalidSlab {
                length,
                diffusivity,
                t_step,
            });
        }
        Ok(Self {
            length,
            diffusivity,
            t_step,
            series_terms: 200,
        })
    }

    pub fn with_series_terms(mut self, terms: usize) -> Result<Self, OracleError> {
        if terms < 20 {
            return Err(OracleError::TooFewTerms { terms });
        }
        self.series_terms = terms;
        Ok(self)
    }

    pub fn fourier_number(&self, t: f64) -> f64 {
        self.diffusivity * t / (self.length * self.length)
    }

    /// Temperature at the insulated end x = L at time t >= 0:
    ///
    /// `T(L,t) = T_step [1 - (4/pi) sum_n ((-1)^n/(2n+1)) exp(-(2n+1)^2 pi^2 Fo/4)]`
    ///
    /// switching to the image series
    /// `T(L,t) = 2 T_step sum_k (-1)^k erfc((2k+1)/(2 sqrt(Fo)))`
    /// for Fo < 0.05, where the sine series converges slowly. Monotone
    /// non-decreasing in t and approaching T_step as t grows.
    pub fn response_at_insulated_end(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "time must be non-negative");
        let fo = self.fourier_number(t);
        if fo <= 0.0 {
            return 0.0;
        }
        if fo < SHORT_TIME_FO {
            self.short_time_response(fo)
        } else {
            self.series_response(fo)
        }
    }

    fn series_response(&self, fo: f64) -> f64 {
        let mut sum = 0.0;
        for n in 0..self.series_terms {
            let m = (2 * n + 1) as f64;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign / m * (-m * m * std::f64::consts::PI.powi(2) * fo / 4.0).exp();
            sum += term;
            if term.abs() < TERM_CUTOFF {
                break;
            }
        }
        self.t_step * (1.0 - 4.0 / std::f64::consts::PI * sum)
    }

    fn short_time_response(&self, fo: f64) -> f64 {
        let mut sum = 0.0;
        for k in 0..self.series_terms {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign * libm::erfc((2 * k + 1) as f64 / (2.0 * fo.sqrt()));
            sum += term;
            if term.abs() < TERM_CUTOFF {
                break;
            }
        }
        2.0 * self.t_step * sum
    }
}

/// Explicit central-difference solution of the same slab problem on a
/// node-centered grid: `cells` intervals give `cells + 1` nodes, with the
/// step boundary at node 0 and a mirror (insulated) condition at the far
/// node. Returns the temperature at every node after `steps` steps.
pub fn fd1d_solve(
    cells: usize,
    spacing: f64,
    diffusivity: f64,
    tau: f64,
    steps: usize,
    t_step: f64,
) -> Result<Vec<f64>, OracleError> {
    run_fd1d(cells, spacing, diffusivity, tau, steps, t_step, |_, _| {})
}

/// As [`fd1d_solve`], additionally recording `(time, T)` at the insulated
/// end after every step.
pub fn fd1d_endpoint_trace(
    cells: usize,
    spacing: f64,
    diffusivity: f64,
    tau: f64,
    steps: usize,
    t_step: f64,
) -> Result<Vec<(f64, f64)>, OracleError> {
    let mut trace = Vec::with_capacity(steps);
    run_fd1d(cells, spacing, diffusivity, tau, steps, t_step, |t, field| {
        trace.push((t, *field.last().unwrap()))
    })?;
    Ok(trace)
}

fn run_fd1d(
    cells: usize,
    spacing: f64,
    diffusivity: f64,
    tau: f64,
    steps: usize,
    t_step: f64,
    mut on_step: impl FnMut(f64, &[f64]),
) -> Result<Vec<f64>, OracleError> {
    if cells < 2 {
        return Err(OracleError::TooFewCells { cells });
    }
    let limit = spacing * spacing / (2.0 * diffusivity);
    if !(tau > 0.0) || tau > limit {
        return Err(OracleError::UnstableStep { tau, limit });
    }
    let r = diffusivity * tau / (spacing * spacing);
    let n = cells; // nodes 0..=n
    let mut field = vec![0.0; n + 1];
    let mut next = vec![0.0; n + 1];
    for s in 0..steps {
        field[0] = t_step;
        next[0] = t_step;
        for i in 1..n {
            next[i] = field[i] + r * (field[i + 1] - 2.0 * field[i] + field[i - 1]);
        }
        // Mirror node beyond the insulated end: T[n+1] := T[n-1].
        next[n] = field[n] + r * (2.0 * field[n - 1] - 2.0 * field[n]);
        std::mem::swap(&mut field, &mut next);
        on_step((s + 1) as f64 * tau, &field);
    }
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_slab() -> SlabProblem {
        SlabProblem::new(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn initial_condition_is_zero() {
        assert_eq!(unit_slab().response_at_insulated_end(0.0), 0.0);
    }

    #[test]
    fn steady_state_reaches_step() {
        let v = unit_slab().response_at_insulated_end(10.0);
        assert!((v - 1.0).abs() < 1e-10, "Fo=10 gives {v}");
    }

    #[test]
    fn frozen_value_at_unit_fourier_number() {
        // Independently evaluated series value at Fo = 1.
        let v = unit_slab().response_at_insulated_end(1.0);
        assert!((v - 0.892022955555891).abs() < 1e-12, "got {v}");
        assert!((v - 0.8920).abs() < 1e-4);
    }

    #[test]
    fn series_and_short_time_forms_agree_at_the_switch() {
        let slab = unit_slab();
        for fo in [0.04, 0.049999, 0.050001, 0.08] {
            let series = slab.series_response(fo);
            let short = slab.short_time_response(fo);
            assert!(
                (series - short).abs() < 1e-12,
                "Fo={fo}: series {series} vs erfc {short}"
            );
        }
    }

    #[test]
    fn response_is_monotone_and_bounded() {
        let slab = SlabProblem::new(0.2, 3.4e-5, 80.0).unwrap();
        let mut prev = 0.0;
        for k in 0..200 {
            let t = k as f64 * 20.0;
            let v = slab.response_at_insulated_end(t);
            assert!(v >= prev - 1e-12);
            assert!((0.0..=80.0 + 1e-9).contains(&v));
            prev = v;
        }
    }

    #[test]
    fn scales_linearly_with_step() {
        let a = SlabProblem::new(1.0, 1.0, 1.0).unwrap();
        let b = SlabProblem::new(1.0, 1.0, 7.5).unwrap();
        let t = 0.3;
        assert!(
            (b.response_at_insulated_end(t) - 7.5 * a.response_at_insulated_end(t)).abs() < 1e-12
        );
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(SlabProblem::new(0.0, 1.0, 1.0).is_err());
        assert!(SlabProblem::new(1.0, -1.0, 1.0).is_err());
        assert!(unit_slab().with_series_terms(5).is_err());
    }

    #[test]
    fn fd_uniform_field_is_unchanged_without_forcing() {
        // Zero step: nothing ever moves.
        let field = fd1d_solve(50, 0.02, 1.0, 1e-4, 100, 0.0).unwrap();
        assert!(field.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn fd_unstable_step_rejected() {
        let err = fd1d_solve(10, 0.1, 1.0, 0.1, 1, 1.0).unwrap_err();
        assert!(matches!(err, OracleError::UnstableStep { .. }));
    }

    #[test]
    fn fd_matches_series_at_moderate_resolution() {
        // 100 cells: endpoint trace within 0.5% of the analytic curve on
        // Fo in [0.1, 2].
        let n = 100;
        let dx = 1.0 / n as f64;
        let tau = 0.25 * dx * dx;
        let steps = (2.0 / tau).ceil() as usize;
        let trace = fd1d_endpoint_trace(n, dx, 1.0, tau, steps, 1.0).unwrap();
        let slab = unit_slab();
        let mut worst = 0.0f64;
        for (t, v) in trace {
            if (0.1..=2.0).contains(&t) {
                worst = worst.max((v - slab.response_at_insulated_end(t)).abs());
            }
        }
        assert!(worst < 5e-3, "worst deviation {worst}");
    }

    #[test]
    fn fd_refinement_shrinks_error_quadratically() {
        // Error vs the analytic solution at Fo = 0.5 drops ~4x per 2x
        // refinement.
        let err_at = |n: usize| -> f64 {
            let dx = 1.0 / n as f64;
            let tau = 0.25 * dx * dx;
            let steps = (0.5 / tau).round() as usize;
            let field = fd1d_solve(n, dx, 1.0, tau, steps, 1.0).unwrap();
            let exact = unit_slab().response_at_insulated_end(steps as f64 * tau);
            (field[n] - exact).abs()
        };
        let e1 = err_at(50);
        let e2 = err_at(100);
        let order = (e1 / e2).log2();
        assert!(
            (1.8..=2.2).contains(&order),
            "convergence order {order} (errors {e1}, {e2})"
        );
    }
}
