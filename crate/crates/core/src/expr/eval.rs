use super::{BinaryOp, Constant, Expr, Function};
use crate::error::{Error, Result};
use crate::kernel::TransformFunction;
use crate::numerics::{self, ensure_finite};
use crate::Complex;
use std::collections::BTreeMap;
use std::f64::consts::{E, PI};

pub type Bindings = BTreeMap<String, Complex>;

/// Evaluates `ast` over the complex numbers; every identifier must be bound.
pub fn evaluate(ast: &Expr, bindings: &Bindings) -> Result<Complex> {
    eval_with(ast, &|name| bindings.get(name).copied())
}

fn eval_with(ast: &Expr, lookup: &dyn Fn(&str) -> Option<Complex>) -> Result<Complex> {
    match ast {
        Expr::Number(x) => Ok(Complex::new(*x, 0.0)),
        Expr::Constant(Constant::Pi) => Ok(Complex::new(PI, 0.0)),
        Expr::Constant(Constant::E) => Ok(Complex::new(E, 0.0)),
        Expr::Constant(Constant::I) => Ok(Complex::new(0.0, 1.0)),
        Expr::Variable(name) => lookup(name).ok_or_else(|| Error::UnboundVariable(name.clone())),
        Expr::Negate(e) => Ok(-eval_with(e, lookup)?),
        Expr::Binary { op, left, right } => {
            let l = eval_with(left, lookup)?;
            let r = eval_with(right, lookup)?;
            binary(*op, l, r)
        }
        Expr::Call { func, args } => {
            let x = eval_with(&args[0], lookup)?;
            call(*func, x)
        }
    }
}

fn binary(op: BinaryOp, l: Complex, r: Complex) -> Result<Complex> {
    let v = match op {
        BinaryOp::Add => l + r,
        BinaryOp::Sub => l - r,
        BinaryOp::Mul => l * r,
        BinaryOp::Div => return numerics::div(l, r),
        BinaryOp::Pow => {
            if r.im == 0.0 && r.re.fract() == 0.0 && r.re.abs() <= 1024.0 {
                return numerics::powi(l, r.re as i32);
            }
            return numerics::cpow(l, r);
        }
    };
    ensure_finite(v, "arithmetic result")
}

fn call(func: Function, x: Complex) -> Result<Complex> {
    let v = match func {
        Function::Exp => x.exp(),
        Function::Log => numerics::ln(x)?,
        Function::Sqrt => numerics::sqrt(x),
        Function::Sin => x.sin(),
        Function::Cos => x.cos(),
        Function::Sinh => x.sinh(),
        Function::Cosh => x.cosh(),
        Function::Gamma => numerics::gamma(x)?,
        Function::Zeta => numerics::zeta(x)?,
    };
    ensure_finite(v, func.name())
}

/// Sample points for the empirical Schwarz-symmetry check.
const SCHWARZ_SAMPLES: [Complex; 4] = [
    Complex::new(0.7, 0.3),
    Complex::new(2.5, -1.25),
    Complex::new(6.0, 4.0),
    Complex::new(1.5, 9.0),
];

/// Wraps an expression in the variable `k` as a transform function.
///
/// Every other identifier must be bound in `bindings`. The Schwarz flag is
/// determined empirically by sampling `F(k̄)` against `conj F(k)`.
pub fn transform_function(name: impl Into<String>, ast: Expr, bindings: Bindings) -> Result<TransformFunction> {
    if let Some(unbound) = ast
        .variables()
        .into_iter()
        .find(|v| v != "k" && !bindings.contains_key(v))
    {
        return Err(Error::UnboundVariable(unbound));
    }
    let f = move |k: Complex| {
        eval_with(&ast, &|name| {
            if name == "k" {
                Some(k)
            } else {
                bindings.get(name).copied()
            }
        })
    };
    let probe = TransformFunction::new("", f.clone(), true);
    let schwarz = probe.satisfies_schwarz(&SCHWARZ_SAMPLES, 1e-12);
    Ok(TransformFunction::new(name, f, schwarz))
}
