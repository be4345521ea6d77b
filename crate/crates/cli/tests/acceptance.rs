//! Acceptance criteria, one PASS/FAIL line each.

use masterint::numerics::{gamma, zeta};
use masterint::{
    master_lhs, ramanujan_lhs, ramanujan_rhs, run_case, verify_master, Complex, Error, KernelParams, Params,
    QuadratureOptions, TransformFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(pairs: &[(&str, Complex)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_owned(), v)).collect()
}

fn re(v: f64) -> Complex {
    Complex::new(v, 0.0)
}

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / b.norm()
}

fn opts() -> QuadratureOptions {
    QuadratureOptions::default()
}

fn run(id: &str, ps: &[(&str, Complex)], tol: f64) -> Result<masterint::VerificationReport, String> {
    run_case(id, &params(ps), &opts(), tol).map_err(|e| format!("{id} {ps:?}: {e}"))
}

fn rational_reproduction() -> Check {
    let r = run("rational", &[("a", re(0.7)), ("b", re(2.0))], 1e-9)?;
    for (side, v) in [("lhs", r.lhs), ("rhs", r.rhs)] {
        ensure((v.re - 0.163_891).abs() < 5e-7 && v.im.abs() < 5e-7, || {
            format!("{side} = {v}")
        })?;
    }
    ensure(r.rel_diff < 1e-9, || format!("rel_diff {:e}", r.rel_diff))
}

fn gaussian_reproduction() -> Check {
    let r = run("gaussian", &[("a", re(0.3)), ("b", re(0.3))], 1e-9)?;
    for (side, v) in [("lhs", r.lhs), ("rhs", r.rhs)] {
        ensure((v.re - 0.024_076_4).abs() < 5e-8 && v.im.abs() < 5e-8, || {
            format!("{side} = {v}")
        })?;
    }
    ensure(r.rel_diff < 1e-9, || format!("rel_diff {:e}", r.rel_diff))
}

fn cosine_reproduction() -> Check {
    let r = run("cosine", &[("alpha", re(0.1)), ("a", Complex::new(1.0, 2.0))], 1e-8)?;
    let want = Complex::new(-0.078_370_3, 0.002_642_14);
    for (side, v) in [("lhs", r.lhs), ("rhs", r.rhs)] {
        ensure((v.re - want.re).abs() < 5e-8 && (v.im - want.im).abs() < 5e-8, || {
            format!("{side} = {v}")
        })?;
    }
    ensure(r.pass, || format!("sides disagree: {:e}", r.rel_diff))
}

fn bessel_recovery() -> Check {
    let r = run("bessel", &[("a", re(7.0))], 1e-8)?;
    for (side, v) in [("lhs", r.lhs), ("rhs", r.rhs)] {
        ensure((v.re - 0.000_708_622).abs() < 5e-9 && v.im.abs() < 5e-9, || {
            format!("{side} = {v}")
        })?;
    }
    ensure(r.pass, || "sides disagree".into())?;
    ensure(
        r.notes.iter().any(|n| n.contains("a = 0.7") && n.contains("0.54")),
        || format!("notes: {:?}", r.notes),
    )?;
    let small_a = run("bessel", &[("a", re(0.7))], 1e-8)?;
    ensure((small_a.lhs.re - 0.54).abs() < 0.005 && small_a.pass, || {
        format!("a = 0.7 gives {}", small_a.lhs)
    })
}

fn seed_grid() -> Check {
    for i in 0..5 {
        for j in 0..5 {
            let a = 0.3 + 2.7 * f64::from(i) / 4.0;
            let t = 0.2 + 1.8 * f64::from(j) / 4.0;
            let p = KernelParams::real(a).map_err(|e| e.to_string())?;
            let lhs = ramanujan_lhs(&p, t, &opts())
                .map_err(|e| format!("a={a} t={t}: {e}"))?
                .value;
            let rhs = ramanujan_rhs(&p, t).map_err(|e| e.to_string())?;
            ensure(rel(lhs, rhs) < 1e-9, || format!("a={a} t={t}: {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

fn gamma_identity() -> Check {
    for (a, b) in [(0.5, 1.0), (1.0, 1.0), (0.25, 2.0)] {
        let r = run("gamma", &[("a", re(a)), ("b", re(b))], 1e-8)?;
        ensure(r.lhs.im.abs() <= r.diagnostics.error_estimate, || {
            format!("a={a} b={b}: lhs {} not real", r.lhs)
        })?;
        let oracle = gamma(re(a + b)).map_err(|e| e.to_string())?.inv();
        ensure(rel(r.lhs, oracle) < 1e-8, || {
            format!("a={a} b={b}: {} vs {oracle}", r.lhs)
        })?;
    }
    Ok(())
}

fn zeta_integral() -> Check {
    for x in [0.3, 0.5, 0.8] {
        let mut without_zeta = Vec::new();
        for n in [0.0, 1.0, 2.0] {
            for a in [0.5, 1.0, 2.0] {
                let r = run("zeta", &[("n", re(n)), ("x", re(x)), ("a", re(a))], 1e-7)?;
                ensure(r.pass, || {
                    format!("n={n} x={x} a={a}: rel {:e} abs {:e}", r.rel_diff, r.abs_diff)
                })?;
                if n == 0.0 {
                    without_zeta.push(r.lhs);
                }
            }
        }
        for v in &without_zeta[1..] {
            ensure((v - without_zeta[0]).norm() < 1e-10, || {
                format!("n=0 x={x} depends on a")
            })?;
        }
    }
    Ok(())
}

fn master_family() -> Check {
    for b in [0.5, 1.0, 2.0, 5.0] {
        let f = TransformFunction::new(format!("1/(k+{b})"), move |k: Complex| Ok((k + b).inv()), true);
        for a in [0.3, 0.7, 1.0, 2.0, 5.0] {
            let p = KernelParams::real(a).map_err(|e| e.to_string())?;
            let r = verify_master(&f, &p, &opts(), 1e-8).map_err(|e| format!("a={a} b={b}: {e}"))?;
            ensure(r.pass && r.rel_diff < 1e-8, || {
                format!("a={a} b={b}: rel {:e}", r.rel_diff)
            })?;
            let inv = master_lhs(&f, &p.inverted(), &opts()).map_err(|e| e.to_string())?.value;
            ensure(rel(inv, a.powi(4) * r.lhs) < 1e-8, || {
                format!("a={a} b={b}: covariance {inv} vs {}", r.lhs)
            })?;
        }
    }
    Ok(())
}

fn binary_exit(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_masterint"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    out.status.code().ok_or_else(|| "terminated by signal".into())
}

fn rejection() -> Check {
    let alpha = 1.25 / PI;
    match run_case(
        "cosine",
        &params(&[("alpha", re(alpha)), ("a", re(1.0))]),
        &opts(),
        1e-8,
    ) {
        Err(Error::Divergence(_)) => {}
        other => return Err(format!("cosine απ=1.25: {other:?}")),
    }
    let growing = TransformFunction::new("exp(k)", |k: Complex| Ok(k.exp()), true);
    match verify_master(&growing, &KernelParams::real(1.0).unwrap(), &opts(), 1e-8) {
        Err(Error::Divergence(_)) => {}
        other => return Err(format!("F = e^k: {other:?}")),
    }
    let alpha_arg = format!("alpha={alpha}");
    let code = binary_exit(&["verify", "cosine", "--param", &alpha_arg, "--param", "a=1"])?;
    ensure(code == 3, || format!("cosine exit {code}"))?;
    let code = binary_exit(&["custom", "--F", "exp(k)", "--a", "1"])?;
    ensure(code == 3, || format!("exp(k) exit {code}"))
}

fn off_integers(rng: &mut ChaCha8Rng) -> Complex {
    loop {
        let z = Complex::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        if Complex::new(z.re - z.re.round(), z.im).norm() > 0.1 {
            return z;
        }
    }
}

fn numerics_layer() -> Check {
    let g = |z: Complex| gamma(z).map_err(|e| format!("gamma({z}): {e}"));
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..1000 {
        let z = off_integers(&mut rng);
        let next = g(z + 1.0)?;
        ensure(rel(z * g(z)?, next) < 1e-11, || format!("recurrence at {z}"))?;
    }
    for _ in 0..1000 {
        let z = off_integers(&mut rng);
        let v = g(z)? * g(1.0 - z)? * (PI * z).sin() / PI;
        ensure((v - 1.0).norm() < 1e-10, || format!("reflection at {z}"))?;
    }
    for _ in 0..1000 {
        let z = Complex::new(rng.gen_range(0.2..0.8), rng.gen_range(-30.0..30.0));
        let direct = zeta(z).map_err(|e| e.to_string())?;
        let chi = (z * 2f64.ln()).exp() * ((z - 1.0) * PI.ln()).exp() * (z * PI / 2.0).sin() * g(1.0 - z)?;
        let via = chi * zeta(1.0 - z).map_err(|e| e.to_string())?;
        ensure(rel(direct, via) < 1e-9, || format!("functional equation at {z}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("rational case reproduces 0.163891", rational_reproduction),
        ("gaussian case reproduces 0.0240764", gaussian_reproduction),
        (
            "cosine case at complex a reproduces -0.0783703+0.00264214i",
            cosine_reproduction,
        ),
        ("bessel case recovers 0.000708622 at a = 7", bessel_recovery),
        ("seed identity on the 5x5 (a, t) grid", seed_grid),
        ("gamma identity equals 1/Γ(a+b)", gamma_identity),
        ("zeta contour integral, 27 combinations", zeta_integral),
        (
            "master formula over the rational family, with a -> 1/a covariance",
            master_family,
        ),
        ("divergent inputs are rejected with exit 3", rejection),
        ("gamma and zeta property suites", numerics_layer),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
