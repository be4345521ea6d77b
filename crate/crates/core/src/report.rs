//! JSON report records and the complex literal syntax used on the command
//! line.
//!
//! One run produces a JSON array of records:
//!
//! ```json
//! {"case": "rational", "params": {"a": {"re": 0.7, "im": 0.0}, ...},
//!  "lhs": {"re": .., "im": ..}, "rhs": {"re": .., "im": ..},
//!  "abs_diff": .., "rel_diff": .., "pass": true, "evaluations": 195,
//!  "truncation": 40.5, "experimental": false}
//! ```

use crate::error::{Error, Result};
use crate::kernel::VerificationReport;
use crate::Complex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexJson {
    fn from(z: Complex) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex {
    fn from(z: ComplexJson) -> Self {
        Complex::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub case: String,
    pub params: BTreeMap<String, ComplexJson>,
    pub lhs: ComplexJson,
    pub rhs: ComplexJson,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub pass: bool,
    pub evaluations: usize,
    pub truncation: f64,
    pub experimental: bool,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        Self {
            case: r.case_name.clone(),
            params: r.params.iter().map(|(k, v)| (k.clone(), (*v).into())).collect(),
            lhs: r.lhs.into(),
            rhs: r.rhs.into(),
            abs_diff: r.abs_diff,
            rel_diff: finite_or_max(r.rel_diff),
            pass: r.pass,
            evaluations: r.diagnostics.evaluations,
            truncation: r.diagnostics.truncation_used.unwrap_or(0.0),
            experimental: r.experimental,
        }
    }
}

// JSON has no infinity
fn finite_or_max(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

/// Parses `"RE"`, `"RE+IMi"`, `"RE-IMi"`, `"IMi"` or `"i"`-style literals.
pub fn parse_complex_literal(text: &str) -> Result<Complex> {
    let s = text.trim();
    let bad = || Error::InvalidParameter(format!("`{text}` is not a complex literal (RE, RE+IMi or IMi)"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return plain_real(s).map(|re| Complex::new(re, 0.0)).ok_or_else(bad);
    };
    // split before the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("", body),
    };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => plain_real(t).ok_or_else(bad)?,
    };
    let re = if re_text.is_empty() {
        0.0
    } else {
        plain_real(re_text).ok_or_else(bad)?
    };
    Ok(Complex::new(re, im))
}

fn plain_real(s: &str) -> Option<f64> {
    let ok = s
        .bytes()
        .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-'));
    if !ok {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}
