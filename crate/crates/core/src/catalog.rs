//! The worked instances, each with its left side in its own normalization
//! (half-line integrals carry the `4a` normalization, full-line ones `2a`)
//! and its closed-form right side.
//!
//! | id         | transform `F(k)`       | domain         |
//! |------------|------------------------|----------------|
//! | `rational` | `1/(k + b)`            | half line      |
//! | `bessel`   | `1/sqrt(1 + k²)`       | real line      |
//! | `gaussian` | `exp(-b k²)`           | half line      |
//! | `cosine`   | `cos(αk)`              | half line      |
//! | `gamma`    | `1/Γ(4ak/π² + b)`      | real line      |
//! | `zeta`     | `x^{k/π²}/ζⁿ(4ak/π²)`  | imaginary axis |

use crate::error::{Error, Result};
use crate::kernel::{kernel_weight, KernelParams, VerificationReport};
use crate::numerics::{cpow, recip_gamma, recip_zeta, sech, sqrt, I};
use crate::quadrature::{
    integrate_half_line, integrate_imaginary_axis, integrate_real_line, QuadratureOptions, QuadratureResult,
};
use crate::Complex;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

pub type Params = BTreeMap<String, Complex>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    HalfLine,
    RealLine,
    ImaginaryAxis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: Complex,
    pub constraint: &'static str,
}

/// A published check value and the parameters it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckValue {
    pub params: &'static [(&'static str, Complex)],
    pub expected: Complex,
    /// Per-component agreement that counts as reproducing the value.
    pub tolerance: f64,
}

/// Outcome of comparing both sides against a [`CheckValue`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOutcome {
    pub expected: Complex,
    pub tolerance: f64,
    pub lhs_matches: bool,
    pub rhs_matches: bool,
}

/// Left-side integrand, parametrized by a real variable on the case's
/// domain (`x` on the lines, `s = it` on the imaginary axis).
pub enum Integrand {
    Real(Box<dyn Fn(f64) -> Result<Complex> + Send + Sync>),
    Contour(Box<dyn Fn(Complex) -> Result<Complex> + Send + Sync>),
}

struct Assessment {
    experimental: bool,
    notes: Vec<String>,
}

pub struct CaseDefinition {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    pub domain: Domain,
    pub check: Option<CheckValue>,
    pub notes: &'static str,
    assess: fn(&Params) -> Result<Assessment>,
    integrand: fn(&Params) -> Result<Integrand>,
    closed_form: fn(&Params) -> Result<Complex>,
    tune: fn(&Params, &QuadratureOptions) -> QuadratureOptions,
}

impl std::fmt::Debug for CaseDefinition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CaseDefinition")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl CaseDefinition {
    /// Default parameter assignment.
    pub fn defaults(&self) -> Params {
        self.params.iter().map(|p| (p.name.to_owned(), p.default)).collect()
    }

    /// Fills in defaults and rejects names the case does not know.
    pub fn resolve(&self, overrides: &Params) -> Result<Params> {
        let mut params = self.defaults();
        for (name, value) in overrides {
            if !params.contains_key(name) {
                let known: Vec<_> = self.params.iter().map(|p| p.name).collect();
                return Err(Error::InvalidParameter(format!(
                    "case `{}` has no parameter `{name}` (expected one of {})",
                    self.id,
                    known.join(", ")
                )));
            }
            params.insert(name.clone(), *value);
        }
        Ok(params)
    }

    pub fn lhs_integrand(&self, params: &Params) -> Result<Integrand> {
        (self.assess)(params)?;
        (self.integrand)(params)
    }

    pub fn rhs_closed_form(&self, params: &Params) -> Result<Complex> {
        (self.assess)(params)?;
        (self.closed_form)(params)
    }

    /// Integrates the left side over the case's domain.
    pub fn lhs(&self, params: &Params, opts: &QuadratureOptions) -> Result<QuadratureResult> {
        let opts = (self.tune)(params, opts);
        match (self.lhs_integrand(params)?, self.domain) {
            (Integrand::Real(f), Domain::HalfLine) => integrate_half_line(f, &opts),
            (Integrand::Real(f), Domain::RealLine) => integrate_real_line(f, &opts),
            (Integrand::Contour(g), Domain::ImaginaryAxis) => integrate_imaginary_axis(g, &opts),
            _ => unreachable!("integrand shape does not match domain for `{}`", self.id),
        }
    }
}

static CASES: [CaseDefinition; 6] = [
    CaseDefinition {
        id: "rational",
        summary: "∫₀^∞ (x²+b) cosh x / [(x⁴+(2b+π²)x²+b²)(1+2a²cosh 2x+a⁴)] dx = π / [4a(1+a²)(b+π²/4+ln²a)]",
        params: &[
            ParamSpec {
                name: "a",
                default: Complex::new(0.7, 0.0),
                constraint: "a != 0",
            },
            ParamSpec {
                name: "b",
                default: Complex::new(2.0, 0.0),
                constraint: "real b > 0",
            },
        ],
        domain: Domain::HalfLine,
        check: Some(CheckValue {
            params: &[("a", Complex::new(0.7, 0.0)), ("b", Complex::new(2.0, 0.0))],
            expected: Complex::new(0.163891, 0.0),
            tolerance: 5e-7,
        }),
        notes: "b must be positive: the limit b -> 0 of the integral differs from its value at b = 0.",
        assess: assess_rational,
        integrand: rational_lhs,
        closed_form: rational_rhs,
        tune: keep_options,
    },
    CaseDefinition {
        id: "bessel",
        summary: "∫ cosh x / (1+2a²cosh 2x+a⁴) dx / sqrt(1+(x²+iπx)²) = π / [2a(1+a²) sqrt(1+(π²/4+ln²a)²)]",
        params: &[ParamSpec {
            name: "a",
            default: Complex::new(7.0, 0.0),
            constraint: "a != 0",
        }],
        domain: Domain::RealLine,
        check: Some(CheckValue {
            params: &[("a", Complex::new(7.0, 0.0))],
            expected: Complex::new(0.000708622, 0.0),
            tolerance: 5e-9,
        }),
        notes: "The check value 0.000708622 is attained at a = 7 (0.000708621113); \
                at a = 0.7 both sides are 0.541612194 instead.",
        assess: assess_kernel_only,
        integrand: bessel_lhs,
        closed_form: bessel_rhs,
        tune: keep_options,
    },
    CaseDefinition {
        id: "gaussian",
        summary: "∫₀^∞ e^{-bx²(x²-π²)} cos(2bπx³) cosh x / (1+2a²cosh 2x+a⁴) dx = e^{-b(π²/4+ln²a)²} π / [4a(1+a²)]",
        params: &[
            ParamSpec {
                name: "a",
                default: Complex::new(0.3, 0.0),
                constraint: "a != 0",
            },
            ParamSpec {
                name: "b",
                default: Complex::new(0.3, 0.0),
                constraint: "real b",
            },
        ],
        domain: Domain::HalfLine,
        check: Some(CheckValue {
            params: &[("a", Complex::new(0.3, 0.0)), ("b", Complex::new(0.3, 0.0))],
            expected: Complex::new(0.0240764, 0.0),
            tolerance: 5e-8,
        }),
        notes: "",
        assess: assess_gaussian,
        integrand: gaussian_lhs,
        closed_form: gaussian_rhs,
        tune: keep_options,
    },
    CaseDefinition {
        id: "cosine",
        summary: "∫₀^∞ cos(αx²) cosh(απx) cosh x / (1+2a²cosh 2x+a⁴) dx = π cos[α(π²/4+ln²a)] / [4a(1+a²)]",
        params: &[
            ParamSpec {
                name: "alpha",
                default: Complex::new(0.1, 0.0),
                constraint: "real alpha, alpha*pi <= 1",
            },
            ParamSpec {
                name: "a",
                default: Complex::new(1.0, 2.0),
                constraint: "a != 0",
            },
        ],
        domain: Domain::HalfLine,
        check: Some(CheckValue {
            params: &[("alpha", Complex::new(0.1, 0.0)), ("a", Complex::new(1.0, 2.0))],
            expected: Complex::new(-0.0783703, 0.00264214),
            tolerance: 5e-8,
        }),
        notes: "The integrand grows like e^{(alpha*pi - 1)|x|}; alpha*pi > 1 diverges.",
        assess: assess_cosine,
        integrand: cosine_lhs,
        closed_form: cosine_rhs,
        tune: keep_options,
    },
    CaseDefinition {
        id: "gamma",
        summary: "∫ dx / [cosh(πx) Γ(4ax(x+i)+b)] = 1/Γ(a+b)",
        params: &[
            ParamSpec {
                name: "a",
                default: Complex::new(0.5, 0.0),
                constraint: "real a",
            },
            ParamSpec {
                name: "b",
                default: Complex::new(1.0, 0.0),
                constraint: "real b",
            },
        ],
        domain: Domain::RealLine,
        check: None,
        notes: "Instance of the a = 1 master formula with F(k) = 1/Γ(4ak/π² + b) after x -> x/π.",
        assess: assess_gamma,
        integrand: gamma_lhs,
        closed_form: gamma_rhs,
        tune: keep_options,
    },
    CaseDefinition {
        id: "zeta",
        summary: "∫_{-i∞}^{i∞} x^{s(1-s)} / [cos(πs) ζⁿ(4as(1-s))] ds/(2πi) = x^{1/4} / [2π ζⁿ(a)]",
        params: &[
            ParamSpec {
                name: "n",
                default: Complex::new(2.0, 0.0),
                constraint: "integer 0 <= n <= 4",
            },
            ParamSpec {
                name: "x",
                default: Complex::new(0.5, 0.0),
                constraint: "real 0 < x < 1",
            },
            ParamSpec {
                name: "a",
                default: Complex::new(2.0, 0.0),
                constraint: "real a > 0",
            },
        ],
        domain: Domain::ImaginaryAxis,
        check: None,
        notes: "At a = 1 the right side is 0 since 1/ζ has a zero at 1.",
        assess: assess_zeta,
        integrand: zeta_lhs,
        closed_form: zeta_rhs,
        tune: zeta_options,
    },
];

/// The built-in cases, in catalog order.
pub fn list_cases() -> &'static [CaseDefinition] {
    &CASES
}

pub fn find_case(id: &str) -> Result<&'static CaseDefinition> {
    CASES
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_owned()))
}

/// Evaluates both sides of case `id`; unspecified parameters take their
/// defaults.
pub fn run_case(id: &str, params: &Params, opts: &QuadratureOptions, tolerance: f64) -> Result<VerificationReport> {
    let case = find_case(id)?;
    let params = case.resolve(params)?;
    let assessment = (case.assess)(&params)?;
    let lhs = case.lhs(&params, opts)?;
    let rhs = (case.closed_form)(&params)?;

    let mut report = VerificationReport::new(case.id, params.clone(), lhs, rhs, tolerance);
    report.experimental = assessment.experimental;
    if !case.notes.is_empty() {
        report.notes.push(case.notes.to_owned());
    }
    report.notes.extend(assessment.notes);
    if let Some(check) = &case.check {
        let applies = check.params.iter().all(|(n, v)| params.get(*n) == Some(v));
        if applies {
            let near = |z: Complex| {
                (z.re - check.expected.re).abs() < check.tolerance && (z.im - check.expected.im).abs() < check.tolerance
            };
            let outcome = CheckOutcome {
                expected: check.expected,
                tolerance: check.tolerance,
                lhs_matches: near(report.lhs),
                rhs_matches: near(report.rhs),
            };
            report.notes.push(format!(
                "check value {}{:+}i: left side {}, right side {}",
                check.expected.re,
                check.expected.im,
                if outcome.lhs_matches { "matches" } else { "DIFFERS" },
                if outcome.rhs_matches { "matches" } else { "DIFFERS" },
            ));
            report.check = Some(outcome);
        }
    }
    Ok(report)
}

/// Runs every case at its default parameters, in parallel; results come
/// back in catalog order.
pub fn run_all(opts: &QuadratureOptions, tolerance: f64) -> Vec<(&'static str, Result<VerificationReport>)> {
    CASES
        .par_iter()
        .map(|c| (c.id, run_case(c.id, &Params::new(), opts, tolerance)))
        .collect()
}

fn param(params: &Params, name: &str) -> Complex {
    params[name]
}

fn real_param(params: &Params, name: &str) -> Result<f64> {
    let v = param(params, name);
    if v.im != 0.0 {
        return Err(Error::InvalidParameter(format!("{name} must be real, got {v}")));
    }
    Ok(v.re)
}

fn kernel(params: &Params) -> Result<KernelParams> {
    KernelParams::new(param(params, "a"))
}

fn assess_kernel_only(params: &Params) -> Result<Assessment> {
    let k = kernel(params)?;
    let mut notes = Vec::new();
    if !k.is_canonical() {
        notes.push("complex a: outside the established domain a > 0".to_owned());
    }
    Ok(Assessment {
        experimental: !k.is_canonical(),
        notes,
    })
}

fn keep_options(_: &Params, opts: &QuadratureOptions) -> QuadratureOptions {
    *opts
}

// rational

fn assess_rational(params: &Params) -> Result<Assessment> {
    let b = real_param(params, "b")?;
    if b.is_nan() || b <= 0.0 {
        return Err(Error::InvalidParameter(format!("rational case needs b > 0, got {b}")));
    }
    assess_kernel_only(params)
}

fn rational_lhs(params: &Params) -> Result<Integrand> {
    let k = kernel(params)?;
    let b = real_param(params, "b")?;
    let c = 2.0 * b + PI * PI;
    Ok(Integrand::Real(Box::new(move |x| {
        let x2 = x * x;
        let ratio = (x2 + b) / (x2 * x2 + c * x2 + b * b);
        Ok(kernel_weight(&k, x)? * ratio)
    })))
}

fn rational_rhs(params: &Params) -> Result<Complex> {
    let k = kernel(params)?;
    let b = real_param(params, "b")?;
    Ok(PI / (4.0 * k.normalization() * (k.evaluation_point() + b)))
}

// bessel

fn bessel_lhs(params: &Params) -> Result<Integrand> {
    let k = kernel(params)?;
    Ok(Integrand::Real(Box::new(move |x| {
        let arg = Complex::new(x * x, 0.0) + I * (PI * x);
        Ok(kernel_weight(&k, x)? / sqrt(1.0 + arg * arg))
    })))
}

fn bessel_rhs(params: &Params) -> Result<Complex> {
    let k = kernel(params)?;
    let p = k.evaluation_point();
    Ok(PI / (2.0 * k.normalization() * sqrt(1.0 + p * p)))
}

// gaussian

fn assess_gaussian(params: &Params) -> Result<Assessment> {
    real_param(params, "b")?;
    assess_kernel_only(params)
}

fn gaussian_lhs(params: &Params) -> Result<Integrand> {
    let k = kernel(params)?;
    let b = real_param(params, "b")?;
    Ok(Integrand::Real(Box::new(move |x| {
        let x2 = x * x;
        let envelope = (-b * x2 * (x2 - PI * PI)).exp();
        let phase = (2.0 * b * PI * x2 * x).cos();
        Ok(kernel_weight(&k, x)? * (envelope * phase))
    })))
}

fn gaussian_rhs(params: &Params) -> Result<Complex> {
    let k = kernel(params)?;
    let b = real_param(params, "b")?;
    let p = k.evaluation_point();
    Ok((-(p * p) * b).exp() * PI / (4.0 * k.normalization()))
}

// cosine

fn assess_cosine(params: &Params) -> Result<Assessment> {
    let alpha = real_param(params, "alpha")?;
    let mut out = assess_kernel_only(params)?;
    if alpha * PI > 1.0 {
        out.notes.push(format!(
            "alpha*pi = {:.6} exceeds 1: the integral is not expected to converge",
            alpha * PI
        ));
    }
    Ok(out)
}

fn cosine_lhs(params: &Params) -> Result<Integrand> {
    let k = kernel(params)?;
    let alpha = real_param(params, "alpha")?;
    Ok(Integrand::Real(Box::new(move |x| {
        Ok(kernel_weight(&k, x)? * ((alpha * x * x).cos() * (alpha * PI * x).cosh()))
    })))
}

fn cosine_rhs(params: &Params) -> Result<Complex> {
    let k = kernel(params)?;
    let alpha = real_param(params, "alpha")?;
    Ok(PI * (k.evaluation_point() * alpha).cos() / (4.0 * k.normalization()))
}

// gamma

fn assess_gamma(params: &Params) -> Result<Assessment> {
    let complex = param(params, "a").im != 0.0 || param(params, "b").im != 0.0;
    let mut notes = Vec::new();
    if complex {
        notes.push("complex a or b: the identity is stated for real parameters".to_owned());
    }
    Ok(Assessment {
        experimental: complex,
        notes,
    })
}

fn gamma_lhs(params: &Params) -> Result<Integrand> {
    let a = param(params, "a");
    let b = param(params, "b");
    Ok(Integrand::Real(Box::new(move |x| {
        let z = a * 4.0 * Complex::new(x * x, x) + b;
        Ok(recip_gamma(z) * sech(PI * x))
    })))
}

fn gamma_rhs(params: &Params) -> Result<Complex> {
    Ok(recip_gamma(param(params, "a") + param(params, "b")))
}

// zeta

/// Imaginary parts of the first nontrivial zeta zeros.
const ZETA_ZEROS: [f64; 10] = [
    14.134_725_141_734_693,
    21.022_039_638_771_555,
    25.010_857_580_145_688,
    30.424_876_125_859_513,
    32.935_061_587_739_19,
    37.586_178_158_825_671,
    40.918_719_012_147_495,
    43.327_073_280_914_999,
    48.005_150_881_167_159,
    49.773_832_477_672_302,
];

const ZERO_PROXIMITY: f64 = 0.05;

fn zeta_order(params: &Params) -> Result<i32> {
    let n = real_param(params, "n")?;
    if n.fract() != 0.0 || !(0.0..=4.0).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "zeta case needs integer n in 0..=4, got {n}"
        )));
    }
    Ok(n as i32)
}

/// Closest approach of `w(t) = 4a(t² + it)` to a tabulated zeta zero.
fn closest_zero(a: f64) -> (f64, f64) {
    let mut best = (f64::INFINITY, 0.0);
    for &gamma in &ZETA_ZEROS {
        // on the contour Re w = (Im w)² / (4a)
        let steps = 4000;
        for j in 0..=steps {
            let v = gamma - 2.0 + 4.0 * j as f64 / steps as f64;
            let d = (v * v / (4.0 * a) - 0.5).hypot(v - gamma);
            if d < best.0 {
                best = (d, gamma);
            }
        }
    }
    best
}

fn assess_zeta(params: &Params) -> Result<Assessment> {
    let n = zeta_order(params)?;
    let x = real_param(params, "x")?;
    let a = real_param(params, "a")?;
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::InvalidParameter(format!("zeta case needs 0 < x < 1, got {x}")));
    }
    if a.is_nan() || a <= 0.0 {
        return Err(Error::InvalidParameter(format!("zeta case needs a > 0, got {a}")));
    }
    let mut notes = Vec::new();
    if n > 0 {
        let (d, gamma) = closest_zero(a);
        if d < ZERO_PROXIMITY {
            notes.push(format!(
                "warning: contour passes within {d:.3} of the zeta zero 1/2 + {gamma}i; accuracy degraded"
            ));
        }
    }
    Ok(Assessment {
        experimental: false,
        notes,
    })
}

fn zeta_lhs(params: &Params) -> Result<Integrand> {
    let n = zeta_order(params)?;
    let x = Complex::new(real_param(params, "x")?, 0.0);
    let a = real_param(params, "a")?;
    Ok(Integrand::Contour(Box::new(move |s| {
        let q = s * (1.0 - s);
        let mut v = cpow(x, q)? / (s * PI).cos();
        if n > 0 {
            v *= crate::numerics::powi(recip_zeta(q * (4.0 * a))?, n)?;
        }
        Ok(v)
    })))
}

fn zeta_rhs(params: &Params) -> Result<Complex> {
    let n = zeta_order(params)?;
    let x = real_param(params, "x")?;
    let a = real_param(params, "a")?;
    let z = crate::numerics::powi(recip_zeta(Complex::new(a, 0.0))?, n)?;
    Ok(z * x.powf(0.25) / (2.0 * PI))
}

/// Starts the window where `x^{t²}/cosh(πt)` has already dropped below
/// `abs_tol · 1e-2`.
fn zeta_options(params: &Params, opts: &QuadratureOptions) -> QuadratureOptions {
    let x = param(params, "x").re;
    let target = (opts.abs_tol * 1e-2).ln();
    let mut t: f64 = 1.0;
    while t < opts.max_truncation / opts.window_growth && t * t * x.ln() - PI * t + 2f64.ln() > target {
        t += 0.25;
    }
    QuadratureOptions {
        initial_truncation: t,
        ..*opts
    }
}
