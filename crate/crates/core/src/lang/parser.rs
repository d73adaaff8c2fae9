use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::ast::{Affine, Expr};
use super::error::LangError;
use super::lexer::{tokenize, Token, TokenKind};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

pub fn parse(src: &str) -> Result<Expr, LangError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Recursive-descent parser over a token stream. It can also be used to
/// parse an expression prefix and hand the remaining tokens back to a caller.
pub struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Result<Self, LangError> {
        Ok(Parser { src, tokens: tokenize(src)?, pos: 0 })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn at_end(&self) -> bool {
        self.peek().kind == TokenKind::Eof
    }

    /// Byte offset of the next token.
    pub fn offset(&self) -> usize {
        self.peek().start
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> LangError {
        let t = self.peek();
        LangError::Parse { line: t.line, col: t.col, expected: expected.to_string(), found: t.kind.describe() }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if &self.peek().kind == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), LangError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error(&kind.describe()))
        }
    }

    pub fn expect_end(&self) -> Result<(), LangError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("`+`, `-`, `*`, `^` or end of input"))
        }
    }

    pub fn expr(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&TokenKind::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.power()?;
        while self.eat(&TokenKind::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, LangError> {
        let mut base = self.unary()?;
        while self.eat(&TokenKind::Caret) {
            let e = self.small_int("non-negative integer exponent")?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent below 2^32"))?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Expr, LangError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn small_int(&mut self, what: &str) -> Result<usize, LangError> {
        match &self.peek().kind {
            TokenKind::Int(n) => {
                let v = n.to_usize().ok_or_else(|| self.error(what))?;
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(what)),
        }
    }

    /// `INT [ "/" INT ]`, the leading integer already consumed.
    fn rational_tail(&mut self, num: Rational) -> Result<Rational, LangError> {
        if !self.eat(&TokenKind::Slash) {
            return Ok(num);
        }
        match self.bump().kind {
            TokenKind::Int(d) if !d.is_zero() => Ok(num / Rational::from_integer(d)),
            TokenKind::Int(_) => Err(LangError::Algebra(crate::Error::DivisionByZero)),
            _ => {
                self.pos -= 1;
                Err(self.error("integer denominator"))
            }
        }
    }

    pub fn signed_rational(&mut self) -> Result<Rational, LangError> {
        let neg = self.eat(&TokenKind::Minus);
        let r = match self.peek().kind.clone() {
            TokenKind::Int(n) => {
                self.bump();
                self.rational_tail(Rational::from_integer(n))?
            }
            _ => return Err(self.error("rational number")),
        };
        Ok(if neg { -r } else { r })
    }

    fn primary(&mut self) -> Result<Expr, LangError> {
        let tok = self.peek().clone();
        match tok.kind {
            TokenKind::Int(n) => {
                self.bump();
                Ok(Expr::Rational(self.rational_tail(Rational::from_integer(n))?))
            }
            TokenKind::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(e)
            }
            TokenKind::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "sqrt2" => Ok(Expr::SqrtTwo),
                    "H" => Ok(Expr::Heaviside(self.affine_call("H")?)),
                    "abs" => Ok(Expr::Abs(self.affine_call("abs")?)),
                    "delta" => {
                        self.expect(TokenKind::LParen)?;
                        let point = self.signed_rational()?;
                        let order = if self.eat(&TokenKind::Comma) { self.small_int("derivative order")? } else { 0 };
                        self.expect(TokenKind::RParen)?;
                        Ok(Expr::Delta { point, order })
                    }
                    "D" => {
                        self.expect(TokenKind::LParen)?;
                        let e = self.expr()?;
                        let n = if self.eat(&TokenKind::Comma) { self.small_int("derivative order")? } else { 1 };
                        self.expect(TokenKind::RParen)?;
                        Ok(Expr::D(Box::new(e), n))
                    }
                    "AD" => {
                        self.expect(TokenKind::LParen)?;
                        let e = self.expr()?;
                        self.expect(TokenKind::RParen)?;
                        Ok(Expr::AD(Box::new(e)))
                    }
                    _ => Ok(Expr::Var(name)),
                }
            }
            _ => Err(self.error("expression")),
        }
    }

    fn affine_call(&mut self, func: &'static str) -> Result<Affine, LangError> {
        self.expect(TokenKind::LParen)?;
        let at = self.peek().clone();
        let arg = self.expr()?;
        let text: String = self.src[at.start..self.tokens[self.pos - 1].end].trim().to_string();
        self.expect(TokenKind::RParen)?;
        as_affine(&arg).ok_or(LangError::UnsupportedArgument { line: at.line, col: at.col, func, arg: text })
    }
}

/// Constant-folds a purely polynomial expression.
fn as_poly(e: &Expr) -> Option<Poly> {
    Some(match e {
        Expr::Rational(r) => Poly::constant(r.clone().into()),
        Expr::SqrtTwo => Poly::constant(Scalar::sqrt2()),
        Expr::X => Poly::x(),
        Expr::Add(a, b) => &as_poly(a)? + &as_poly(b)?,
        Expr::Sub(a, b) => &as_poly(a)? - &as_poly(b)?,
        Expr::Neg(a) => -&as_poly(a)?,
        Expr::Mul(a, b) => &as_poly(a)? * &as_poly(b)?,
        Expr::Pow(a, n) => as_poly(a)?.pow(*n),
        _ => return None,
    })
}

fn as_affine(e: &Expr) -> Option<Affine> {
    let p = as_poly(e)?;
    if p.degree() != Some(1) {
        return None;
    }
    Some(Affine { slope: p.coeff(1).as_rational()?.clone(), offset: p.coeff(0).as_rational()?.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn heaviside_literal() {
        assert_eq!(parse("H(x-1/2)").unwrap(), Expr::Heaviside(Affine { slope: int(1), offset: rat(-1, 2) }));
    }

    #[test]
    fn product_of_delta_and_h() {
        assert_eq!(
            parse("delta(0,2) * H(x)").unwrap(),
            Expr::Mul(
                Box::new(Expr::Delta { point: int(0), order: 2 }),
                Box::new(Expr::Heaviside(Affine { slope: int(1), offset: int(0) }))
            )
        );
    }

    #[test]
    fn non_affine_argument() {
        let err = parse("H(x^2)").unwrap_err();
        assert_eq!(err, LangError::UnsupportedArgument { line: 1, col: 3, func: "H", arg: "x^2".into() });
        assert!(matches!(parse("abs(3)"), Err(LangError::UnsupportedArgument { .. })));
        assert!(matches!(parse("H(sqrt2*x)"), Err(LangError::UnsupportedArgument { .. })));
    }

    #[test]
    fn precedence() {
        // unary minus binds tighter than ^
        assert_eq!(parse("-x^2").unwrap(), Expr::Pow(Box::new(Expr::Neg(Box::new(Expr::X))), 2));
        let e = parse("1 + 2*x^3 - x").unwrap();
        let expected = Expr::Sub(
            Box::new(Expr::Add(
                Box::new(Expr::Rational(int(1))),
                Box::new(Expr::Mul(Box::new(Expr::Rational(int(2))), Box::new(Expr::Pow(Box::new(Expr::X), 3)))),
            )),
            Box::new(Expr::X),
        );
        assert_eq!(e, expected);
        // left-associative products
        assert!(matches!(parse("a*b*c").unwrap(), Expr::Mul(l, _) if matches!(*l, Expr::Mul(..))));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse("D( abs( x ) , 2 )").unwrap(), parse("D(abs(x),2)").unwrap());
        assert_eq!(parse("delta(-1/3,1)").unwrap(), Expr::Delta { point: rat(-1, 3), order: 1 });
    }

    #[test]
    fn parse_errors_report_position() {
        match parse("x +\n  * 2").unwrap_err() {
            LangError::Parse { line, col, .. } => assert_eq!((line, col), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("x/2"), Err(LangError::Parse { .. })));
        assert!(matches!(parse("(x"), Err(LangError::Parse { .. })));
        assert!(matches!(parse("1/0"), Err(LangError::Algebra(_))));
    }
}
