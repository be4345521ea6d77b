//! Adaptive 7/15-point Gauss–Kronrod integration on a finite interval.

use crate::error::{Error, Result};
use crate::Complex;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

// Kronrod abscissae in decreasing order; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One GK15 panel.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub value: Complex,
    pub error: f64,
    /// Kronrod estimate of the integral of `|f|`.
    pub abs_mass: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn eval<F>(f: &F, x: f64) -> Result<Complex>
where
    F: Fn(f64) -> Result<Complex>,
{
    let v = f(x)?;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { x })
    }
}

pub(crate) fn gk15<F>(f: &F, lo: f64, hi: f64) -> Result<Segment>
where
    F: Fn(f64) -> Result<Complex>,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let f_center = eval(f, center)?;
    let mut fv1 = [Complex::new(0.0, 0.0); 7];
    let mut fv2 = [Complex::new(0.0, 0.0); 7];

    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut abs_sum = WGK[7] * f_center.norm();

    for j in 0..7 {
        let dx = half * XGK[j];
        let a = eval(f, center - dx)?;
        let b = eval(f, center + dx)?;
        fv1[j] = a;
        fv2[j] = b;
        kronrod += (a + b) * WGK[j];
        abs_sum += WGK[j] * (a.norm() + b.norm());
        if j % 2 == 1 {
            gauss += (a + b) * WG[j / 2];
        }
    }

    let mean = kronrod * 0.5;
    let mut asc = WGK[7] * (f_center - mean).norm();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }

    let scale = half.abs();
    let value = kronrod * half;
    let abs_mass = abs_sum * scale;
    asc *= scale;

    let mut error = ((kronrod - gauss) * half).norm();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    error = error.max(4.0 * f64::EPSILON * abs_mass);

    Ok(Segment {
        lo,
        hi,
        value,
        error,
        abs_mass,
    })
}

pub(crate) const EVALS_PER_PANEL: usize = 15;

/// Outcome of adaptive bisection; `converged` is false when the budget ran
/// out or every remaining panel was too narrow to split.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Adaptive {
    pub value: Complex,
    pub error: f64,
    pub abs_mass: f64,
    pub evaluations: usize,
    pub converged: bool,
}

pub(crate) fn adaptive<F>(
    f: &F,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Adaptive>
where
    F: Fn(f64) -> Result<Complex>,
{
    let first = gk15(f, lo, hi)?;
    let mut evaluations = EVALS_PER_PANEL;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::new();
    let mut frozen = Vec::new();
    heap.push(first);

    let mut subdivisions = 0;
    let mut converged = false;
    loop {
        if error <= abs_tol.max(rel_tol * value.norm()) {
            converged = true;
            break;
        }
        if subdivisions >= max_subdivisions {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) || worst.hi - worst.lo < 1e3 * f64::EPSILON * mid.abs().max(1.0) {
            frozen.push(worst);
            continue;
        }
        let left = gk15(f, worst.lo, mid)?;
        let right = gk15(f, mid, worst.hi)?;
        evaluations += 2 * EVALS_PER_PANEL;
        subdivisions += 1;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in a fixed left-to-right order.
    let mut segments: Vec<Segment> = heap.into_vec();
    segments.extend(frozen);
    segments.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let value = segments.iter().fold(Complex::new(0.0, 0.0), |acc, s| acc + s.value);
    let error: f64 = segments.iter().map(|s| s.error).sum();
    let abs_mass = segments.iter().map(|s| s.abs_mass).sum();
    Ok(Adaptive {
        value,
        error,
        abs_mass,
        evaluations,
        converged: converged && error <= abs_tol.max(rel_tol * value.norm()),
    })
}
