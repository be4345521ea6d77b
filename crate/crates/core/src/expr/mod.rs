//! A small expression language for user-supplied transform functions.
//!
//! Grammar (version 1):
//!
//! ```text
//! expr    := sum
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := atom ("^" unary)?            right-associative
//! atom    := number | constant | ident | func "(" expr ")" | "(" expr ")"
//! ```
//!
//! Constants are `pi`, `e` and `i`; functions are `exp log sqrt sin cos sinh
//! cosh gamma zeta`, all unary and all on the principal branch. Numbers are
//! decimal with optional fraction and exponent; a `-` directly before a
//! number that is not the base of `^` is folded into the literal, so `-2`
//! is the number -2 while `-2^2` is -(2^2). There is no implicit
//! multiplication: `2k` is a syntax error, write `2*k`.

mod eval;
mod lexer;
mod parser;

pub use eval::{evaluate, transform_function, Bindings};
pub use parser::parse;

use std::collections::BTreeSet;
use std::fmt;

pub const GRAMMAR_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Pi,
    E,
    I,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::E => "e",
            Constant::I => "i",
        }
    }

    fn lookup(name: &str) -> Option<Self> {
        match name {
            "pi" => Some(Constant::Pi),
            "e" => Some(Constant::E),
            "i" => Some(Constant::I),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    pub fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Gamma,
    Zeta,
}

impl Function {
    pub const ALL: [Function; 9] = [
        Function::Exp,
        Function::Log,
        Function::Sqrt,
        Function::Sin,
        Function::Cos,
        Function::Sinh,
        Function::Cosh,
        Function::Gamma,
        Function::Zeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::Exp => "exp",
            Function::Log => "log",
            Function::Sqrt => "sqrt",
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Sinh => "sinh",
            Function::Cosh => "cosh",
            Function::Gamma => "gamma",
            Function::Zeta => "zeta",
        }
    }

    pub fn arity(self) -> usize {
        1
    }

    fn lookup(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Constant(Constant),
    Variable(String),
    Negate(Box<Expr>),
    Binary {
        op: BinaryOp,
        left: Box<Expr>,
        right: Box<Expr>,
    },
    Call {
        func: Function,
        args: Vec<Expr>,
    },
}

impl Expr {
    /// Free identifiers, in sorted order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Variable(name) => {
                out.insert(name.clone());
            }
            Expr::Negate(e) => e.collect_variables(out),
            Expr::Binary { left, right, .. } => {
                left.collect_variables(out);
                right.collect_variables(out);
            }
            Expr::Call { args, .. } => args.iter().for_each(|a| a.collect_variables(out)),
            Expr::Number(_) | Expr::Constant(_) => {}
        }
    }
}

/// Canonical, fully parenthesized form that parses back to an equivalent
/// tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) if x.is_sign_negative() => write!(f, "(-{:?})", -x),
            Expr::Number(x) => write!(f, "{x:?}"),
            Expr::Constant(c) => f.write_str(c.name()),
            Expr::Variable(v) => f.write_str(v),
            Expr::Negate(e) if matches!(**e, Expr::Number(_)) => write!(f, "(-({e}))"),
            Expr::Negate(e) => write!(f, "(-{e})"),
            Expr::Binary { op, left, right } => write!(f, "({left} {} {right})", op.symbol()),
            Expr::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}
