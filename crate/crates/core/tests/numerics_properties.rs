//! Property suites for the special functions, checked against oracles that
//! share no code with the library implementations.

#![allow(clippy::excessive_precision)]

use masterint::numerics::{cpow, gamma, zeta};
use masterint::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const SAMPLES: usize = 1000;

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / b.norm()
}

fn dist_to_integer(z: Complex) -> f64 {
    Complex::new(z.re - z.re.round(), z.im).norm()
}

fn strip_point(rng: &mut ChaCha8Rng, min_dist: f64) -> Complex {
    loop {
        let z = Complex::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        if dist_to_integer(z) > min_dist {
            return z;
        }
    }
}

/// Γ via upward recurrence to Re w >= 20 and the Stirling series there.
fn stirling_gamma(z: Complex) -> Complex {
    const B: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let mut w = z;
    let mut log_prod = Complex::new(0.0, 0.0);
    while w.re < 20.0 {
        log_prod += w.ln();
        w += 1.0;
    }
    let mut series = Complex::new(0.0, 0.0);
    for (k, b) in B.iter().enumerate() {
        let k2 = 2.0 * (k + 1) as f64;
        series += *b / (k2 * (k2 - 1.0) * w.powf(k2 - 1.0));
    }
    let ln_gamma_w = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    (ln_gamma_w - log_prod).exp()
}

#[test]
fn gamma_matches_stirling_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let z = Complex::new(1.0, 1.0);
    assert!(
        rel(
            stirling_gamma(z),
            Complex::new(0.498_015_668_118_356_04, -0.154_949_828_301_810_69)
        ) < 1e-14
    );
    for _ in 0..SAMPLES {
        let z = strip_point(&mut rng, 0.1);
        let got = gamma(z).unwrap();
        assert!(rel(got, stirling_gamma(z)) < 1e-12, "gamma({z})");
    }
}

#[test]
fn gamma_recurrence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..SAMPLES {
        let z = strip_point(&mut rng, 0.1);
        let next = gamma(z + 1.0).unwrap();
        let err = (next - z * gamma(z).unwrap()).norm() / next.norm();
        worst = worst.max(err);
    }
    assert!(worst < 1e-11, "worst recurrence error {worst:e}");
}

#[test]
fn gamma_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..SAMPLES {
        let z = strip_point(&mut rng, 0.1);
        let v = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (z * PI).sin() / PI;
        worst = worst.max((v - 1.0).norm());
    }
    assert!(worst < 1e-10, "worst reflection error {worst:e}");
}

/// Σ_{n<N} n^{-z} plus the Euler–Maclaurin tail through the B₂ term; the
/// remainder is bounded by |z(z+1)| N^{-σ-1} / (12(σ+1)).
fn dirichlet_with_bound(z: Complex, n_terms: usize) -> (Complex, f64) {
    let nf = n_terms as f64;
    let mut s = Complex::new(0.0, 0.0);
    for n in (1..n_terms).rev() {
        s += (-z * (n as f64).ln()).exp();
    }
    let n_pow = (-z * nf.ln()).exp();
    s += n_pow * nf / (z - 1.0) + n_pow * 0.5 + z * n_pow / (12.0 * nf);
    let sigma = z.re;
    let bound = (z * (z + 1.0)).norm() * nf.powf(-sigma - 1.0) / (12.0 * (sigma + 1.0));
    (s, bound)
}

#[test]
fn zeta_against_dirichlet_series() {
    let (oracle, bound) = dirichlet_with_bound(Complex::new(3.0, 4.0), 20_000);
    assert!(bound < 1e-13);
    assert!(rel(zeta(Complex::new(3.0, 4.0)).unwrap(), oracle) < 1e-10);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let z = Complex::new(rng.gen_range(2.0..8.0), rng.gen_range(-50.0..50.0));
        let (oracle, bound) = dirichlet_with_bound(z, 20_000);
        let got = zeta(z).unwrap();
        assert!((got - oracle).norm() <= bound + 1e-10 * oracle.norm(), "zeta({z})");
    }
}

/// 2^z π^{z-1} sin(πz/2) Γ(1-z) ζ(1-z), evaluated directly.
fn functional_equation(z: Complex) -> Complex {
    let two_z = (z * 2f64.ln()).exp();
    let pi_z = ((z - 1.0) * PI.ln()).exp();
    two_z * pi_z * (z * PI / 2.0).sin() * gamma(1.0 - z).unwrap() * zeta(1.0 - z).unwrap()
}

#[test]
fn zeta_functional_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for _ in 0..SAMPLES {
        let z = Complex::new(rng.gen_range(0.2..0.8), rng.gen_range(-30.0..30.0));
        let direct = zeta(z).unwrap();
        worst = worst.max(rel(direct, functional_equation(z)));
    }
    assert!(worst < 1e-9, "worst functional-equation mismatch {worst:e}");
}

#[test]
fn zeta_on_the_critical_strip_against_reference() {
    // mpmath, 25 digits
    let cases = [
        (
            Complex::new(0.5, 14.0),
            Complex::new(0.022_241_142_609_993_59, -0.103_258_123_266_450_06),
        ),
        (
            Complex::new(0.3, 40.0),
            Complex::new(0.748_775_209_504_225_8, -1.440_885_440_634_440_5),
        ),
    ];
    for (z, want) in cases {
        assert!(rel(zeta(z).unwrap(), want) < 1e-10);
    }
    // first nontrivial zero
    let rho = Complex::new(0.5, 14.134_725_141_734_693);
    assert!(zeta(rho).unwrap().norm() < 1e-12);
}

#[test]
fn cpow_additivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..SAMPLES {
        let x = Complex::new(rng.gen_range(0.01..1.0), 0.0);
        let u = Complex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let v = Complex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let whole = cpow(x, u + v).unwrap();
        let split = cpow(x, u).unwrap() * cpow(x, v).unwrap();
        assert!(rel(split, whole) < 1e-12, "x={x} u={u} v={v}");
    }
}

#[test]
fn complex_field_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut draw = || Complex::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
    for _ in 0..SAMPLES {
        let (a, b, c) = (draw(), draw(), draw());
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert!(((a * (b + c)) - (a * b + a * c)).norm() <= 1e-13 * (a.norm() * (b.norm() + c.norm())));
        assert_eq!((a * b).conj(), a.conj() * b.conj());
        assert_eq!((a + b).conj(), a.conj() + b.conj());
        assert!((a * a.inv() - 1.0).norm() < 1e-15);
    }
}

#[test]
fn pure_and_thread_safe() {
    let z = Complex::new(0.37, 22.5);
    let reference = (gamma(z).unwrap(), zeta(z).unwrap());
    let handles: Vec<_> = (0..4)
        .map(|_| std::thread::spawn(move || (gamma(z).unwrap(), zeta(z).unwrap())))
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), reference);
    }
}
