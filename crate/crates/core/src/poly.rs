//! Polynomials in `x` over ℚ(√2): the smooth pieces of every distribution.

use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{int, Rational, Scalar};

/// Dense coefficients, lowest degree first, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// The identity `x`.
    pub fn x() -> Self {
        Poly::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c·x^n`.
    pub fn monomial(c: Scalar, n: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); n];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `c·x + d` with rational coefficients.
    pub fn affine(c: Rational, d: Rational) -> Self {
        Poly::new(vec![d.into(), c.into()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        (self.coeffs.len() <= 1).then(|| self.coeff(0))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x0: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x0) + c)
    }

    pub fn eval_rational(&self, x0: &Rational) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &acc.scale(x0) + c)
    }

    pub fn eval_f64(&self, x0: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x0 + c.to_f64())
    }

    pub fn diff(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale(&int(k as i64))).collect())
    }

    pub fn diff_n(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.diff())
    }

    /// Primitive with zero constant term.
    pub fn antidiff(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1.into(), (k as i64 + 1).into())));
        }
        Poly::new(coeffs)
    }

    /// `p(x + shift)`, by Horner evaluation at the affine polynomial.
    pub fn compose_shift(&self, shift: &Rational) -> Poly {
        let lin = Poly::affine(int(1), shift.clone());
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * &lin) + &Poly::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Taylor coefficients `p^(k)(a)` for `k = 0..=n`.
    pub fn derivatives_at(&self, a: &Rational, n: usize) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(n + 1);
        let mut p = self.clone();
        for _ in 0..=n {
            out.push(p.eval_rational(a));
            p = p.diff();
        }
        out
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Self {
        Poly::constant(c)
    }
}

/// Binomial coefficient as a rational.
pub(crate) fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn diff_examples() {
        assert_eq!(Poly::from_ints(&[0, 0, 1]).diff(), Poly::from_ints(&[0, 2]));
        assert_eq!(Poly::from_ints(&[5]).diff(), Poly::zero());
        // (x - s)^2 with s = 2/3
        let s = rat(2, 3);
        let p = Poly::affine(int(1), -s.clone()).pow(2);
        let expected = Poly::affine(int(2), -(int(2) * &s));
        assert_eq!(p.diff(), expected);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::from_ints(&[0, 0, 1]).eval(&Scalar::from_int(3)), Scalar::from_int(9));
        assert_eq!(Poly::zero().eval(&Scalar::from_int(7)), Scalar::zero());
        let s = rat(2, 3);
        let p = Poly::affine(int(2), -(int(2) * &s));
        assert_eq!(p.eval_rational(&s), Scalar::zero());
    }

    #[test]
    fn antidiff_examples() {
        assert_eq!(Poly::from_ints(&[0, 2]).antidiff(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(Poly::zero().antidiff(), Poly::zero());
        assert_eq!(Poly::one().antidiff(), Poly::x());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::new(alloc::vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::new(alloc::vec![Scalar::zero()]), Poly::zero());
        let q = Poly::x();
        assert_eq!(&q - &q, Poly::zero());
    }

    #[test]
    fn shift_squares() {
        let e = rat(1, 4);
        let shifted = Poly::from_ints(&[0, 0, 1]).compose_shift(&e);
        let expected =
            Poly::new(alloc::vec![Scalar::from_rational(&e * &e), Scalar::from_rational(int(2) * &e), Scalar::one()]);
        assert_eq!(shifted, expected);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 0), int(1));
    }
}
