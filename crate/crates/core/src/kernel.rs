//! The weight `cosh x / (1 + 2a² cosh 2x + a⁴)` and the identities built on it.
//!
//! * the seed integral, for `a, t > 0`:
//!   `∫₀^∞ e^{-tx²} cos(tπx) w_a(x) dx = π e^{-t(π²/4 + ln²a)} / (4a(1+a²))`
//! * the master formula, for an admissible Laplace image `F`:
//!   `∫ F(x² + iπx) w_a(x) dx = π F(π²/4 + ln²a) / (2a(1+a²))` over ℝ,
//!   which at `a = 1` reads `∫ F(x² + iπx) sech x dx = π F(π²/4)`.

use crate::error::{Error, Result};
use crate::numerics::I;
use crate::quadrature::{integrate_half_line, integrate_real_line, QuadratureOptions, QuadratureResult};
use crate::Complex;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// Default relative (or absolute) agreement required between the two sides.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Floor on `|rhs|` when forming the relative difference.
pub const REL_DIFF_FLOOR: f64 = 1e-300;

const QUARTER_PI_SQ: f64 = PI * PI / 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    a: Complex,
}

impl KernelParams {
    /// Complex `a` is admitted but only real `a > 0` is the canonical domain.
    pub fn new(a: Complex) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite()) || a == Complex::new(0.0, 0.0) {
            return Err(Error::InvalidParameter(format!(
                "kernel parameter a = {a} must be finite and nonzero"
            )));
        }
        let norm = a * (1.0 + a * a);
        if norm == Complex::new(0.0, 0.0) {
            return Err(Error::InvalidParameter(format!("a(1 + a²) vanishes at a = {a}")));
        }
        Ok(Self { a })
    }

    pub fn real(a: f64) -> Result<Self> {
        Self::new(Complex::new(a, 0.0))
    }

    pub fn a(&self) -> Complex {
        self.a
    }

    /// Real and positive.
    pub fn is_canonical(&self) -> bool {
        self.a.im == 0.0 && self.a.re > 0.0
    }

    /// The parameter `1/a`; the weight is covariant under `a → 1/a`.
    pub fn inverted(&self) -> Self {
        Self { a: self.a.inv() }
    }

    /// `ln a` on the principal branch.
    pub fn ln_a(&self) -> Complex {
        crate::numerics::ln(self.a).expect("a is nonzero")
    }

    /// `π²/4 + ln²a`, the point at which the right side samples `F`.
    pub fn evaluation_point(&self) -> Complex {
        let l = self.ln_a();
        l * l + QUARTER_PI_SQ
    }

    /// `a(1 + a²)`.
    pub fn normalization(&self) -> Complex {
        self.a * (1.0 + self.a * self.a)
    }
}

/// A Laplace image `F(k) = ∫₀^∞ e^{-kt} f(t) dt`, used as a black box.
///
/// The Schwarz flag records whether `F(k̄) = conj F(k)`, which holds when
/// `f` is real and makes the real-line integrals real for real `a`.
#[derive(Clone)]
pub struct TransformFunction {
    name: String,
    f: Arc<dyn Fn(Complex) -> Result<Complex> + Send + Sync>,
    schwarz: bool,
}

impl TransformFunction {
    pub fn new<F>(name: impl Into<String>, f: F, schwarz: bool) -> Self
    where
        F: Fn(Complex) -> Result<Complex> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            f: Arc::new(f),
            schwarz,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_schwarz(&self) -> bool {
        self.schwarz
    }

    pub fn eval(&self, k: Complex) -> Result<Complex> {
        let v = (self.f)(k)?;
        crate::numerics::ensure_finite(v, "F(k)")
    }

    /// Checks `F(k̄) = conj F(k)` at the given points, to `tol` relative.
    pub fn satisfies_schwarz(&self, samples: &[Complex], tol: f64) -> bool {
        samples.iter().all(|&k| match (self.eval(k.conj()), self.eval(k)) {
            (Ok(lhs), Ok(rhs)) => (lhs - rhs.conj()).norm() <= tol * rhs.norm().max(1.0),
            _ => false,
        })
    }
}

impl fmt::Debug for TransformFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransformFunction")
            .field("name", &self.name)
            .field("schwarz", &self.schwarz)
            .finish()
    }
}

/// Both sides of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub case_name: String,
    pub params: BTreeMap<String, Complex>,
    pub lhs: Complex,
    pub rhs: Complex,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub diagnostics: QuadratureResult,
    /// Set when the run leaves the domain where the identity is established
    /// (complex `a`, non-Schwarz `F`, complex parameters that should be real).
    pub experimental: bool,
    pub notes: Vec<String>,
    /// Comparison against a tabulated check value, when one applies.
    pub check: Option<crate::catalog::CheckOutcome>,
}

impl VerificationReport {
    pub fn new(
        case_name: impl Into<String>,
        params: BTreeMap<String, Complex>,
        lhs: QuadratureResult,
        rhs: Complex,
        tolerance: f64,
    ) -> Self {
        let abs_diff = (lhs.value - rhs).norm();
        let rel_diff = abs_diff / rhs.norm().max(REL_DIFF_FLOOR);
        Self {
            case_name: case_name.into(),
            params,
            lhs: lhs.value,
            rhs,
            abs_diff,
            rel_diff,
            tolerance,
            pass: rel_diff < tolerance || abs_diff < tolerance,
            diagnostics: lhs,
            experimental: false,
            notes: Vec::new(),
            check: None,
        }
    }
}

/// `cosh x / (1 + 2a² cosh 2x + a⁴)`, evaluated through the factorization
/// `(a² + e^{2x})(a² + e^{-2x})` scaled by `e^{-2|x|}` so nothing overflows.
pub fn kernel_weight(params: &KernelParams, x: f64) -> Result<Complex> {
    let a2 = params.a * params.a;
    let u = x.abs();
    let e = (-2.0 * u).exp();
    let den = (1.0 + a2 * e) * (a2 + e);
    if den.norm() < REL_DIFF_FLOOR {
        return Err(Error::Domain(format!(
            "kernel denominator vanishes at x = {x}, a = {}",
            params.a
        )));
    }
    Ok(Complex::new((-u).exp() * (1.0 + e) * 0.5, 0.0) / den)
}

fn positive_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("t must be positive, got {t}")))
    }
}

/// `π e^{-t(π²/4 + ln²a)} / (4a(1 + a²))`.
pub fn ramanujan_rhs(params: &KernelParams, t: f64) -> Result<Complex> {
    positive_t(t)?;
    let v = PI * (-params.evaluation_point() * t).exp() / (4.0 * params.normalization());
    crate::numerics::ensure_finite(v, "seed right side")
}

/// `∫₀^∞ e^{-tx²} cos(tπx) w_a(x) dx` for real `a > 0`.
pub fn ramanujan_lhs(params: &KernelParams, t: f64, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    positive_t(t)?;
    if !params.is_canonical() {
        return Err(Error::InvalidParameter("the seed integral needs real a > 0".into()));
    }
    integrate_half_line(
        |x| Ok(kernel_weight(params, x)? * ((-t * x * x).exp() * (t * PI * x).cos())),
        opts,
    )
}

/// `π F(π²/4 + ln²a) / (2a(1 + a²))`.
pub fn master_rhs(f: &TransformFunction, params: &KernelParams) -> Result<Complex> {
    let v = PI * f.eval(params.evaluation_point())? / (2.0 * params.normalization());
    crate::numerics::ensure_finite(v, "master right side")
}

/// `∫ F(x² + iπx) w_a(x) dx` over the real line.
pub fn master_lhs(f: &TransformFunction, params: &KernelParams, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    integrate_real_line(
        |x| {
            let k = Complex::new(x * x, 0.0) + I * (PI * x);
            Ok(f.eval(k)? * kernel_weight(params, x)?)
        },
        opts,
    )
}

/// Evaluates both sides of the master formula.
pub fn verify_master(
    f: &TransformFunction,
    params: &KernelParams,
    opts: &QuadratureOptions,
    tolerance: f64,
) -> Result<VerificationReport> {
    let lhs = master_lhs(f, params, opts)?;
    let rhs = master_rhs(f, params)?;
    let mut report = VerificationReport::new(f.name(), [("a".to_owned(), params.a())].into(), lhs, rhs, tolerance);
    if params.a() == Complex::new(1.0, 0.0) {
        report
            .notes
            .push("a = 1: weight is sech(x)/4, right side is π F(π²/4)/4".into());
    }
    if !params.is_canonical() {
        report.experimental = true;
        report
            .notes
            .push("complex a: outside the established domain a > 0".into());
    }
    if !f.is_schwarz() {
        report.experimental = true;
        report
            .notes
            .push("F is not Schwarz-symmetric: F(conj k) != conj F(k)".into());
    }
    Ok(report)
}

/// Evaluates both sides of the seed integral at `(a, t)`.
pub fn verify_seed(
    params: &KernelParams,
    t: f64,
    opts: &QuadratureOptions,
    tolerance: f64,
) -> Result<VerificationReport> {
    let lhs = ramanujan_lhs(params, t, opts)?;
    let rhs = ramanujan_rhs(params, t)?;
    let ps = [("a".to_owned(), params.a()), ("t".to_owned(), Complex::new(t, 0.0))].into();
    Ok(VerificationReport::new("seed", ps, lhs, rhs, tolerance))
}
