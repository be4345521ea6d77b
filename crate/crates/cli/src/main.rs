//! `masterint`: batch verification of the master integral identity.
//!
//! Exit status: 0 when every check passes, 1 when sides disagree beyond the
//! tolerance, 2 on usage or parse errors, 3 on numerical failures
//! (non-convergence, divergence, poles).

mod args;
mod output;

use args::{Cli, Command, Format};
use clap::Parser;
use masterint::expr::{parse, transform_function, Bindings};
use masterint::{run_all, run_case, verify_master, verify_seed, Error, KernelParams, Params, QuadratureOptions};
use output::Row;
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("masterint: {e}");
            ExitCode::from(if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_USAGE })
        }
    }
}

/// Runs the command; `Err` is reserved for input problems found before any
/// verification starts.
fn run(cli: &Cli) -> masterint::Result<u8> {
    let opts = cli.quadrature.options()?;
    let rows = match &cli.command {
        Command::List => {
            print!("{}", output::case_list());
            return Ok(0);
        }
        Command::VerifyAll => run_all(&opts, cli.tol)
            .into_iter()
            .map(|(id, outcome)| Row {
                label: id.to_owned(),
                outcome,
            })
            .collect(),
        Command::Verify { case, params } => {
            let params: Params = params.iter().cloned().collect();
            let outcome = run_case(case, &params, &opts, cli.tol);
            if let Err(e) = &outcome {
                if !e.is_numerical() {
                    return Err(e.clone());
                }
            }
            vec![Row {
                label: case.clone(),
                outcome,
            }]
        }
        Command::Custom { f, a, params } => vec![custom(f, *a, params, &opts, cli.tol)?],
        Command::KernelCheck {
            points,
            a_min,
            a_max,
            t_min,
            t_max,
        } => kernel_check(*points, (*a_min, *a_max), (*t_min, *t_max), &opts, cli.tol)?,
    };
    emit(cli, &rows)?;
    Ok(exit_code(&rows))
}

fn custom(
    text: &str,
    a: masterint::Complex,
    params: &[(String, masterint::Complex)],
    opts: &QuadratureOptions,
    tol: f64,
) -> masterint::Result<Row> {
    let bindings: Bindings = params.iter().cloned().collect();
    if bindings.contains_key("k") {
        return Err(Error::InvalidParameter(
            "`k` is the transform variable and cannot be bound".into(),
        ));
    }
    let ast = parse(text)?;
    let f = transform_function(text, ast, bindings.clone())?;
    let kernel = KernelParams::new(a)?;
    let outcome = verify_master(&f, &kernel, opts, tol).map(|mut r| {
        r.params.extend(bindings);
        r
    });
    Ok(Row {
        label: text.to_owned(),
        outcome,
    })
}

fn grid(points: u32, (lo, hi): (f64, f64)) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    (0..points)
        .map(|i| lo + (hi - lo) * f64::from(i) / f64::from(points - 1))
        .collect()
}

fn kernel_check(
    points: u32,
    a_range: (f64, f64),
    t_range: (f64, f64),
    opts: &QuadratureOptions,
    tol: f64,
) -> masterint::Result<Vec<Row>> {
    for (name, (lo, hi)) in [("a", a_range), ("t", t_range)] {
        if lo > hi {
            return Err(Error::InvalidParameter(format!("{name} range is empty: {lo} > {hi}")));
        }
    }
    let mut rows = Vec::new();
    for a in grid(points, a_range) {
        let kernel = KernelParams::real(a)?;
        for t in grid(points, t_range) {
            rows.push(Row {
                label: "seed".into(),
                outcome: verify_seed(&kernel, t, opts, tol),
            });
        }
    }
    Ok(rows)
}

fn emit(cli: &Cli, rows: &[Row]) -> masterint::Result<()> {
    match cli.format {
        Format::Table => print!("{}", output::table(rows)),
        Format::Json => print!("{}", output::json(rows)),
    }
    if let Some(path) = &cli.json {
        std::fs::write(path, output::json(rows))
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
    }
    if cli.format == Format::Json {
        for row in rows {
            if let Err(e) = &row.outcome {
                eprintln!("masterint: {}: {e}", row.label);
            }
        }
    }
    Ok(())
}

fn exit_code(rows: &[Row]) -> u8 {
    if rows.iter().any(|r| r.outcome.is_err()) {
        EXIT_NUMERICAL
    } else if rows.iter().all(|r| matches!(&r.outcome, Ok(r) if r.pass)) {
        0
    } else {
        EXIT_FAIL
    }
}
