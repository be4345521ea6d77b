//! Pratt parser over the token stream.

use super::lexer::{tokenize, Token};
use super::{BinaryOp, Constant, Expr, Function};
use crate::error::{Error, Result};

const UNARY_BP: u8 = 30;

/// (left, right) binding power; higher binds tighter.
fn infix_binding(tok: &Token) -> Option<(BinaryOp, u8, u8)> {
    match tok {
        Token::Plus => Some((BinaryOp::Add, 10, 11)),
        Token::Minus => Some((BinaryOp::Sub, 10, 11)),
        Token::Star => Some((BinaryOp::Mul, 20, 21)),
        Token::Slash => Some((BinaryOp::Div, 20, 21)),
        Token::Caret => Some((BinaryOp::Pow, 40, 40)),
        _ => None,
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

/// Parses an expression in the transform-function language.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let expr = p.expr(0)?;
    match p.peek() {
        Token::End => Ok(expr),
        other => Err(p.error(format!("expected operator or end of input, found {}", other.describe()))),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn peek_second(&self) -> &Token {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn advance(&mut self) -> Token {
        let tok = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            offset: self.offset(),
            message,
        }
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        if *self.peek() == want {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr> {
        let mut left = self.prefix()?;
        while let Some((op, lbp, rbp)) = infix_binding(self.peek()) {
            if lbp < min_bp {
                break;
            }
            self.advance();
            let right = self.expr(rbp)?;
            left = Expr::Binary {
                op,
                left: Box::new(left),
                right: Box::new(right),
            };
        }
        Ok(left)
    }

    fn prefix(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.advance() {
            Token::Number(x) => Ok(Expr::Number(x)),
            Token::Minus => match (self.peek().clone(), self.peek_second()) {
                // signed literal, unless it is the base of a power
                (Token::Number(x), next) if *next != Token::Caret => {
                    self.advance();
                    Ok(Expr::Number(-x))
                }
                _ => Ok(Expr::Negate(Box::new(self.expr(UNARY_BP)?))),
            },
            Token::LParen => {
                let inner = self.expr(0)?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name) => self.identifier(name, offset),
            other => {
                self.pos -= usize::from(other != Token::End);
                Err(Error::Syntax {
                    offset,
                    message: format!("expected expression, found {}", other.describe()),
                })
            }
        }
    }

    fn identifier(&mut self, name: String, offset: usize) -> Result<Expr> {
        if let Some(c) = Constant::lookup(&name) {
            return Ok(Expr::Constant(c));
        }
        if *self.peek() == Token::LParen {
            let Some(func) = Function::lookup(&name) else {
                return Err(Error::UnknownFunction { name, offset });
            };
            self.advance();
            let mut args = vec![self.expr(0)?];
            while *self.peek() == Token::Comma {
                self.advance();
                args.push(self.expr(0)?);
            }
            self.expect(Token::RParen)?;
            if args.len() != func.arity() {
                return Err(Error::Syntax {
                    offset,
                    message: format!("{} takes {} argument, got {}", func.name(), func.arity(), args.len()),
                });
            }
            return Ok(Expr::Call { func, args });
        }
        if Function::lookup(&name).is_some() {
            return Err(Error::Syntax {
                offset,
                message: format!("function `{name}` must be called, expected `(`"),
            });
        }
        Ok(Expr::Variable(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(x: f64) -> Box<Expr> {
        Box::new(Expr::Number(x))
    }

    fn var(s: &str) -> Box<Expr> {
        Box::new(Expr::Variable(s.into()))
    }

    fn bin(op: BinaryOp, l: Box<Expr>, r: Box<Expr>) -> Box<Expr> {
        Box::new(Expr::Binary { op, left: l, right: r })
    }

    fn syntax_offset(src: &str) -> usize {
        match parse(src) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{src}: {other:?}"),
        }
    }

    #[test]
    fn rational_transform() {
        let want = bin(BinaryOp::Div, num(1.0), bin(BinaryOp::Add, var("k"), num(2.0)));
        assert_eq!(parse("1/(k+2)").unwrap(), *want);
    }

    #[test]
    fn power_binds_tighter_than_division() {
        let e = parse("gamma(4*a*k/pi^2+b)").unwrap();
        let Expr::Call {
            func: Function::Gamma,
            args,
        } = e
        else {
            panic!()
        };
        let Expr::Binary {
            op: BinaryOp::Add,
            left,
            ..
        } = &args[0]
        else {
            panic!()
        };
        let Expr::Binary {
            op: BinaryOp::Div,
            right,
            ..
        } = left.as_ref()
        else {
            panic!()
        };
        assert!(matches!(right.as_ref(), Expr::Binary { op: BinaryOp::Pow, .. }));
    }

    #[test]
    fn associativity() {
        assert_eq!(parse("2^3^2").unwrap().to_string(), "(2.0 ^ (3.0 ^ 2.0))");
        assert_eq!(parse("8-3-1").unwrap().to_string(), "((8.0 - 3.0) - 1.0)");
        assert_eq!(parse("8/4/2").unwrap().to_string(), "((8.0 / 4.0) / 2.0)");
        assert_eq!(parse("-2^2").unwrap().to_string(), "(-(2.0 ^ 2.0))");
        assert_eq!(parse("2^-1*3").unwrap().to_string(), "((2.0 ^ (-1.0)) * 3.0)");
        assert_eq!(parse("-a*b").unwrap().to_string(), "((-a) * b)");
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(syntax_offset("2*"), 2);
        assert_eq!(syntax_offset("2k"), 1);
        assert_eq!(syntax_offset("(1+2"), 4);
        assert_eq!(syntax_offset(")"), 0);
        assert_eq!(syntax_offset(""), 0);
        assert_eq!(syntax_offset("exp(1, 2)"), 0);
        assert_eq!(syntax_offset("exp + 1"), 0);
        assert_eq!(syntax_offset("pi(2)"), 2);
        match parse("2*") {
            Err(Error::Syntax { message, .. }) => assert!(message.contains("expected expression")),
            _ => unreachable!(),
        }
    }

    #[test]
    fn unknown_function() {
        assert_eq!(
            parse("1 + foo(k)"),
            Err(Error::UnknownFunction {
                name: "foo".into(),
                offset: 4
            })
        );
    }

    #[test]
    fn constants_and_variables() {
        assert_eq!(parse("pi").unwrap(), Expr::Constant(Constant::Pi));
        assert_eq!(parse("i").unwrap(), Expr::Constant(Constant::I));
        assert_eq!(parse("alpha_2").unwrap(), Expr::Variable("alpha_2".into()));
        let vars = parse("a*k + exp(b) - pi").unwrap().variables();
        assert_eq!(vars.into_iter().collect::<Vec<_>>(), vec!["a", "b", "k"]);
    }
}
