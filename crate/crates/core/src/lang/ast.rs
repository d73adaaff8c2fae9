use alloc::boxed::Box;
use alloc::string::String;

use crate::scalar::Rational;

/// `slope·x + offset` with nonzero rational slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub slope: Rational,
    pub offset: Rational,
}

impl Affine {
    /// The zero of the affine form.
    pub fn root(&self) -> Rational {
        -&self.offset / &self.slope
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    SqrtTwo,
    X,
    Heaviside(Affine),
    Abs(Affine),
    Delta { point: Rational, order: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    D(Box<Expr>, usize),
    AD(Box<Expr>),
    Var(String),
}
