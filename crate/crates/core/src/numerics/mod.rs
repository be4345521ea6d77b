//! Complex arithmetic conventions and special functions.
//!
//! All multivalued functions use the principal branch: `ln z` has imaginary
//! part in `(-π, π]`, `sqrt z = exp(ln z / 2)` and `z^w = exp(w ln z)`.
//! Everything here is a pure function of its arguments.

mod gamma;
mod zeta;

pub use gamma::{gamma, ln_gamma, recip_gamma};
pub use zeta::{recip_zeta, zeta, zeta_accuracy_warning};

use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

/// The branch convention shared by every complex function in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchConvention;

impl BranchConvention {
    /// Upper (inclusive) bound of the imaginary part of `ln z`.
    pub const LOG_IM_MAX: f64 = PI;
    /// Lower (exclusive) bound of the imaginary part of `ln z`.
    pub const LOG_IM_MIN: f64 = -PI;
}

/// Distance from a pole below which gamma and zeta refuse to evaluate.
pub const POLE_GUARD: f64 = 1e-8;

pub(crate) const I: Complex = Complex::new(0.0, 1.0);

pub(crate) fn finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn ensure_finite(z: Complex, what: &str) -> Result<Complex> {
    if finite(z) {
        Ok(z)
    } else {
        Err(Error::Domain(format!("{what} is not finite")))
    }
}

/// Maps a signed-zero imaginary part to `+0` so that the negative real axis
/// always lands on the `+π` side of the cut.
fn on_branch(z: Complex) -> Complex {
    if z.im == 0.0 {
        Complex::new(z.re, 0.0)
    } else {
        z
    }
}

/// Principal logarithm, with `ln 0` reported as a domain error.
pub fn ln(z: Complex) -> Result<Complex> {
    if z == Complex::new(0.0, 0.0) {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    Ok(on_branch(z).ln())
}

/// Principal square root.
pub fn sqrt(z: Complex) -> Complex {
    on_branch(z).sqrt()
}

/// `base^exponent = exp(exponent · ln base)` on the principal branch.
///
/// `0^w` is `0` for `Re w > 0` and a domain error otherwise.
pub fn cpow(base: Complex, exponent: Complex) -> Result<Complex> {
    if base == Complex::new(0.0, 0.0) {
        if exponent.re > 0.0 {
            return Ok(Complex::new(0.0, 0.0));
        }
        return Err(Error::Domain(format!("0 raised to {}{:+}i", exponent.re, exponent.im)));
    }
    ensure_finite((exponent * on_branch(base).ln()).exp(), "power")
}

/// `num / den` by Smith's scaling, so `|den|²` is never formed and large
/// denominators do not overflow to a zero quotient.
pub fn div(num: Complex, den: Complex) -> Result<Complex> {
    if den == Complex::new(0.0, 0.0) {
        return Err(Error::Domain("division by zero".into()));
    }
    let q = if den.re.abs() >= den.im.abs() {
        let r = den.im / den.re;
        let d = den.re + den.im * r;
        Complex::new((num.re + num.im * r) / d, (num.im - num.re * r) / d)
    } else {
        let r = den.re / den.im;
        let d = den.re * r + den.im;
        Complex::new((num.re * r + num.im) / d, (num.im * r - num.re) / d)
    };
    ensure_finite(q, "quotient")
}

/// Integer power by repeated squaring; exact for small Gaussian integers.
pub fn powi(base: Complex, n: i32) -> Result<Complex> {
    if n < 0 {
        if base == Complex::new(0.0, 0.0) {
            return Err(Error::Domain("0 raised to a negative power".into()));
        }
        return div(Complex::new(1.0, 0.0), powi(base, -n)?);
    }
    let mut acc = Complex::new(1.0, 0.0);
    let mut sq = base;
    let mut k = n as u32;
    while k > 0 {
        if k & 1 == 1 {
            acc *= sq;
        }
        k >>= 1;
        if k > 0 {
            sq *= sq;
        }
    }
    ensure_finite(acc, "power")
}

/// `sech x` without overflow for large `|x|`.
pub fn sech(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// A logarithm of `sin(πz)`, on some branch.
///
/// Only meant to be exponentiated; stays finite where `sin(πz)` itself
/// would overflow. Returns a real part of `-inf` at the zeros.
pub(crate) fn ln_sin_pi(z: Complex) -> Complex {
    // sin(π(z - n)) = (-1)^n sin(πz)
    let n = z.re.round();
    let r = Complex::new(z.re - n, z.im);
    let parity = if n.rem_euclid(2.0) == 1.0 {
        I * PI
    } else {
        Complex::new(0.0, 0.0)
    };
    let w = r * PI;
    let s = if w.im.abs() < 1.0 {
        w.sin().ln()
    } else if w.im > 0.0 {
        // sin w = e^{-iw} (e^{2iw} - 1) / (2i)
        -I * w + (((I * w) * 2.0).exp() - 1.0).ln() - (2.0 * I).ln()
    } else {
        // sin w = e^{iw} (1 - e^{-2iw}) / (2i)
        I * w + (1.0 - ((-I * w) * 2.0).exp()).ln() - (2.0 * I).ln()
    };
    s + parity
}
