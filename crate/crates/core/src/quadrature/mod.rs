//! Adaptive integration of complex-valued integrands over finite intervals,
//! the half line, the real line and the imaginary axis.
//!
//! Unbounded domains are truncated to a window `[0, L]` or `[-L, L]` that
//! grows geometrically from `initial_truncation` until the `|f|`-mass of the
//! newest window drops below tolerance. The integral of `|f|` over each new
//! window is tracked; if it fails to decrease for two consecutive growths
//! the integrand is declared divergent.
//!
//! Error budget: 0.4 of the tolerance for the first window, a geometric
//! series totalling 0.3 for the growth pieces, and the rest for the tail.

mod gk;

use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Bisection budget per finite panel.
    pub max_subdivisions: usize,
    /// Half-width of the first window on unbounded domains.
    pub initial_truncation: f64,
    pub max_truncation: f64,
    pub window_growth: f64,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            initial_truncation: 8.0,
            max_truncation: 120.0,
            window_growth: 1.5,
        }
    }
}

impl QuadratureOptions {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_owned()));
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return bad("abs_tol must be positive");
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return bad("rel_tol must be positive");
        }
        if self.max_subdivisions == 0 {
            return bad("max_subdivisions must be at least 1");
        }
        if !(self.initial_truncation > 0.0 && self.initial_truncation < self.max_truncation) {
            return bad("need 0 < initial_truncation < max_truncation");
        }
        if !self.max_truncation.is_finite() {
            return bad("max_truncation must be finite");
        }
        if !(self.window_growth > 1.0 && self.window_growth.is_finite()) {
            return bad("window_growth must exceed 1");
        }
        Ok(())
    }

    fn tolerance(&self, value: Complex) -> f64 {
        self.abs_tol.max(self.rel_tol * value.norm())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex,
    pub error_estimate: f64,
    pub evaluations: usize,
    /// Final window half-width; `None` on finite intervals.
    pub truncation_used: Option<f64>,
    pub converged: bool,
}

fn non_convergence(value: Complex, error_estimate: f64, evaluations: usize) -> Error {
    Error::NonConvergence {
        value_re: value.re,
        value_im: value.im,
        error_estimate,
        evaluations,
    }
}

/// Integrates `f` over `[lo, hi]`.
pub fn integrate_finite<F>(f: F, lo: f64, hi: f64, opts: &QuadratureOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex>,
{
    opts.validate()?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidParameter(format!(
            "integration bounds must satisfy lo < hi, got [{lo}, {hi}]"
        )));
    }
    let run = gk::adaptive(&f, lo, hi, opts.abs_tol, opts.rel_tol, opts.max_subdivisions)?;
    if !run.converged {
        return Err(non_convergence(run.value, run.error, run.evaluations));
    }
    Ok(QuadratureResult {
        value: run.value,
        error_estimate: run.error,
        evaluations: run.evaluations,
        truncation_used: None,
        converged: true,
    })
}

/// Integrates `f` over `[0, ∞)`.
pub fn integrate_half_line<F>(f: F, opts: &QuadratureOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex>,
{
    windowed(&f, opts, false)
}

/// Integrates `f` over `(-∞, ∞)`.
pub fn integrate_real_line<F>(f: F, opts: &QuadratureOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex>,
{
    windowed(&f, opts, true)
}

/// Computes `(1/2πi) ∫ g(s) ds` along the imaginary axis from `-i∞` to
/// `i∞`, i.e. `(1/2π) ∫ g(it) dt` over the real line.
pub fn integrate_imaginary_axis<G>(g: G, opts: &QuadratureOptions) -> Result<QuadratureResult>
where
    G: Fn(Complex) -> Result<Complex>,
{
    let mut r = windowed(&|t: f64| g(Complex::new(0.0, t)), opts, true)?;
    r.value /= 2.0 * PI;
    r.error_estimate /= 2.0 * PI;
    Ok(r)
}

fn windowed<F>(f: &F, opts: &QuadratureOptions, symmetric: bool) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex>,
{
    opts.validate()?;
    let mut width = opts.initial_truncation;
    let lo = if symmetric { -width } else { 0.0 };
    let first = gk::adaptive(
        f,
        lo,
        width,
        0.4 * opts.abs_tol,
        0.4 * opts.rel_tol,
        opts.max_subdivisions,
    )?;
    let mut value = first.value;
    let mut error = first.error;
    let mut evaluations = first.evaluations;
    let mut previous_mass = first.abs_mass;
    let mut rising = 0;
    let mut share = 0.075;

    while width < opts.max_truncation {
        let next = (width * opts.window_growth).min(opts.max_truncation);
        let piece_tol = share * opts.tolerance(value);
        share *= 0.5;
        let grown = |a: f64, b: f64| -> Result<gk::Adaptive> {
            gk::adaptive(f, a, b, piece_tol, 0.0, opts.max_subdivisions).map_err(|e| match e {
                Error::NonFinite { x } => Error::Divergence(format!(
                    "integrand overflowed at x = {x} while growing the window past |x| = {width}"
                )),
                other => other,
            })
        };
        // left piece first so the reduction order is fixed
        let mut pieces = Vec::with_capacity(2);
        if symmetric {
            pieces.push(grown(-next, -width)?);
        }
        pieces.push(grown(width, next)?);

        let mass: f64 = pieces.iter().map(|p| p.abs_mass).sum();
        for p in &pieces {
            value += p.value;
            error += p.error;
            evaluations += p.evaluations;
        }

        if mass >= previous_mass {
            rising += 1;
            if rising >= 2 {
                return Err(Error::Divergence(format!(
                    "|f| mass per window stopped decreasing (window out to |x| = {next}, mass {mass:.3e})"
                )));
            }
        } else {
            rising = 0;
        }
        previous_mass = mass;
        width = next;

        let total_error = error + mass;
        if total_error <= opts.tolerance(value) {
            return Ok(QuadratureResult {
                value,
                error_estimate: total_error,
                evaluations,
                truncation_used: Some(width),
                converged: true,
            });
        }
    }
    Err(non_convergence(value, error + previous_mass, evaluations))
}
