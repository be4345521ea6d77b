use super::gamma::ln_gamma;
use super::{ensure_finite, ln_sin_pi, POLE_GUARD};
use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::{LN_2, PI};

// B_{2k} / (2k)!, k = 1..=15
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    8.333_333_333_333_333_333e-2,
    -1.388_888_888_888_888_889e-3,
    3.306_878_306_878_306_878e-5,
    -8.267_195_767_195_767_196e-7,
    2.087_675_698_786_809_898e-8,
    -5.284_190_138_687_493_185e-10,
    1.338_253_653_068_467_883e-11,
    -3.389_680_296_322_582_867e-13,
    8.586_062_056_277_844_564e-15,
    -2.174_868_698_558_061_873e-16,
    5.509_002_828_360_229_515e-18,
    -1.395_446_468_581_252_334e-19,
    3.534_707_039_629_467_472e-21,
    -8.953_517_427_037_546_850e-23,
    2.267_952_452_337_683_060e-24,
];

/// `ζ(z)` for complex `z`.
///
/// Accurate to about 10 significant digits or better for `Re z >= 0` and
/// `|Im z| <= 50`; see [`zeta_accuracy_warning`] for arguments outside
/// that region.
pub fn zeta(z: Complex) -> Result<Complex> {
    if (z - 1.0).norm() < POLE_GUARD {
        return Err(Error::pole("zeta", z));
    }
    let value = if z.re >= 40.0 {
        dirichlet_head(z)
    } else if z.norm() < 0.05 || eta_factor(z).norm() < 0.1 {
        euler_maclaurin(z)
    } else if z.re >= 0.5 {
        eta_borwein(z) / eta_factor(z)
    } else {
        reflected(z)?
    };
    ensure_finite(value, "zeta")
}

/// `1/ζ(z)`, defined as its limit `0` at the pole `z = 1`.
pub fn recip_zeta(z: Complex) -> Result<Complex> {
    let d = z - 1.0;
    if d.norm() < POLE_GUARD {
        // ζ(z) = 1/(z-1) + γ + O(z-1)
        return Ok(d);
    }
    let v = zeta(z)?;
    if v == Complex::new(0.0, 0.0) {
        return Err(Error::Domain(format!("zeta vanishes at {z}")));
    }
    ensure_finite(v.inv(), "reciprocal zeta")
}

/// Describes the expected accuracy loss when `z` lies outside the region
/// where [`zeta`] has been validated.
pub fn zeta_accuracy_warning(z: Complex) -> Option<String> {
    if z.im.abs() > 50.0 {
        Some(format!("zeta({z}): |Im z| > 50, accuracy not validated"))
    } else if z.re < -20.0 {
        Some(format!("zeta({z}): Re z < -20, accuracy not validated"))
    } else {
        None
    }
}

/// `1 - 2^{1-z}`, the factor relating η and ζ.
fn eta_factor(z: Complex) -> Complex {
    1.0 - ((1.0 - z) * LN_2).exp()
}

fn n_pow_neg(n: f64, z: Complex) -> Complex {
    (-z * n.ln()).exp()
}

fn dirichlet_head(z: Complex) -> Complex {
    (1..=8).rev().map(|n| n_pow_neg(n as f64, z)).sum()
}

/// Borwein's accelerated alternating series for the Dirichlet eta function.
fn eta_borwein(z: Complex) -> Complex {
    let n = (20.0 + (1.3 * z.im.abs()).ceil()).min(300.0) as usize;
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 1.0;
    d.push(acc);
    for i in 1..=n {
        let fi = i as f64;
        term *= 4.0 * (nf + fi - 1.0) * (nf - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = Complex::new(0.0, 0.0);
    for k in (0..n).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += n_pow_neg((k + 1) as f64, z) * (sign * (dn - d[k]) / dn);
    }
    sum
}

fn euler_maclaurin(z: Complex) -> Complex {
    let n = (z.norm().ceil() + 30.0) as usize;
    let nf = n as f64;
    let mut sum: Complex = (1..n).rev().map(|j| n_pow_neg(j as f64, z)).sum();
    let n_pow = n_pow_neg(nf, z);
    sum += n_pow * nf / (z - 1.0) + n_pow * 0.5;
    // rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1}
    let mut rising = z;
    let mut tail = n_pow / nf;
    for (k, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if k > 0 {
            let m = (2 * k) as f64;
            rising *= (z + (m - 1.0)) * (z + m);
            tail /= nf * nf;
        }
        let term = rising * tail * b;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// ζ(z) = 2^z π^{z-1} sin(πz/2) Γ(1-z) ζ(1-z)
fn reflected(z: Complex) -> Result<Complex> {
    let w = 1.0 - z;
    let log_factor = z * LN_2 + (z - 1.0) * PI.ln() + ln_sin_pi(z * 0.5) + ln_gamma(w)?;
    if log_factor.re == f64::NEG_INFINITY {
        return Ok(Complex::new(0.0, 0.0));
    }
    Ok(log_factor.exp() * zeta(w)?)
}
