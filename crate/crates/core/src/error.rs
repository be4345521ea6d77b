use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants fall into two families that the CLI maps onto distinct exit
/// codes: input problems (bad expressions, unknown cases, constraint
/// violations) and numerical failures (poles, non-convergence, divergence).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {re}{im:+}i")]
    Pole { function: &'static str, re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },

    #[error(
        "quadrature did not converge: value {value_re}{value_im:+}i, \
         error estimate {error_estimate:e} after {evaluations} evaluations"
    )]
    NonConvergence {
        value_re: f64,
        value_im: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("integrand diverges: {0}")]
    Divergence(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown function `{name}` at offset {offset}")]
    UnknownFunction { name: String, offset: usize },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for failures of the numerical machinery, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::Domain(_)
                | Error::NonFinite { .. }
                | Error::NonConvergence { .. }
                | Error::Divergence(_)
        )
    }

    pub(crate) fn pole(function: &'static str, z: crate::Complex) -> Self {
        Error::Pole {
            function,
            re: z.re,
            im: z.im,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
