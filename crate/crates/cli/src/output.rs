//! Table and JSON rendering of report records.

use masterint::{list_cases, Complex, Error, ReportRecord, VerificationReport};
use std::fmt::Write as _;

/// One row of a run: a finished report or the error that stopped it.
pub struct Row {
    pub label: String,
    pub outcome: Result<VerificationReport, Error>,
}

/// `x` to 9 significant digits.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.8e}")
    }
}

pub fn complex9(z: Complex) -> String {
    if z.im == 0.0 {
        sig9(z.re)
    } else if z.re == 0.0 {
        format!("{}i", sig9(z.im))
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{}{sign}{}i", sig9(z.re), sig9(z.im.abs()))
    }
}

fn short(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

pub fn table(rows: &[Row]) -> String {
    let header = ["case", "params", "lhs", "rhs", "rel_diff", "result"];
    let mut cells: Vec<[String; 6]> = Vec::new();
    let mut trailers: Vec<Vec<String>> = Vec::new();
    for row in rows {
        match &row.outcome {
            Ok(r) => {
                let params = r
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={}", short(*v)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let mut verdict = if r.pass { "PASS" } else { "FAIL" }.to_owned();
                if r.experimental {
                    verdict.push_str(" (experimental)");
                }
                cells.push([
                    row.label.clone(),
                    params,
                    complex9(r.lhs),
                    complex9(r.rhs),
                    format!("{:.2e}", r.rel_diff),
                    verdict,
                ]);
                trailers.push(r.notes.clone());
            }
            Err(e) => {
                let kind = if e.is_numerical() { "NUMERICAL ERROR" } else { "ERROR" };
                cells.push([
                    row.label.clone(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    kind.into(),
                ]);
                trailers.push(vec![e.to_string()]);
            }
        }
    }
    let mut widths = header.map(str::len);
    for c in &cells {
        for (w, s) in widths.iter_mut().zip(c) {
            *w = (*w).max(s.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, fields: &[String]| {
        let mut s = String::new();
        for (i, (f, w)) in fields.iter().zip(widths).enumerate() {
            if i + 1 == fields.len() {
                s.push_str(f);
            } else {
                let _ = write!(s, "{f:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut out, &header.map(String::from));
    for (c, notes) in cells.iter().zip(&trailers) {
        line(&mut out, c);
        for n in notes {
            let _ = writeln!(out, "    {n}");
        }
    }
    let passed = rows.iter().filter(|r| matches!(&r.outcome, Ok(r) if r.pass)).count();
    let errors = rows.iter().filter(|r| r.outcome.is_err()).count();
    let _ = writeln!(
        out,
        "{passed} passed, {} failed, {errors} errors",
        rows.len() - passed - errors
    );
    out
}

pub fn records(rows: &[Row]) -> Vec<ReportRecord> {
    rows.iter()
        .filter_map(|r| r.outcome.as_ref().ok())
        .map(ReportRecord::from)
        .collect()
}

pub fn json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(&records(rows)).expect("records serialize");
    s.push('\n');
    s
}

pub fn case_list() -> String {
    let mut out = String::new();
    for case in list_cases() {
        let domain = format!("{:?}", case.domain);
        let _ = writeln!(out, "{:<9} {:<14} {}", case.id, domain, case.summary);
        for p in case.params {
            let _ = writeln!(out, "    {:<5} = {:<8} {}", p.name, short(p.default), p.constraint);
        }
    }
    out
}
