use super::{ensure_finite, ln_sin_pi, POLE_GUARD};
use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn near_pole(z: Complex) -> bool {
    let n = z.re.round();
    n <= 0.0 && Complex::new(z.re - n, z.im).norm() < POLE_GUARD
}

/// Lanczos log-gamma for `Re z >= 1/2`.
fn ln_gamma_right(z: Complex) -> Complex {
    let z = z - 1.0;
    let mut series = Complex::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + series.ln()
}

/// A logarithm of `Γ(z)`.
///
/// The imaginary part is not reduced to the principal branch of `ln Γ`;
/// exponentiating always recovers `Γ(z)`.
pub fn ln_gamma(z: Complex) -> Result<Complex> {
    if near_pole(z) {
        return Err(Error::pole("gamma", z));
    }
    if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        Ok(PI.ln() - ln_sin_pi(z) - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// `Γ(z)` for complex `z`, refusing within `POLE_GUARD` of a non-positive
/// integer.
pub fn gamma(z: Complex) -> Result<Complex> {
    if z.im == 0.0 && z.re > 171.7 {
        return Err(Error::Domain(format!("gamma({}) overflows", z.re)));
    }
    ensure_finite(ln_gamma(z)?.exp(), "gamma")
}

/// `1/Γ(z)`, an entire function: exactly zero at the poles of `Γ` and
/// underflowing gracefully for large arguments.
pub fn recip_gamma(z: Complex) -> Complex {
    if z.re < 0.5 {
        // 1/Γ(z) = Γ(1 - z) sin(πz) / π
        let ls = ln_sin_pi(z);
        if ls.re == f64::NEG_INFINITY {
            return Complex::new(0.0, 0.0);
        }
        (ln_gamma_right(1.0 - z) + ls).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}
