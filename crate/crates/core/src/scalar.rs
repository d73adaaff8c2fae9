//! The coefficient field ℚ(√2).

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use alloc::string::ToString;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number. Breakpoints and delta locations are rationals.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, `p/q` (and surrounding whitespace).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::ScalarSyntax(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_rational(a: Rational) -> Self {
        Scalar { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(int(n))
    }

    pub fn sqrt2() -> Self {
        Scalar { a: Rational::zero(), b: Rational::one() }
    }

    /// √2/2, the function-part weight of the `F_M` transform.
    pub fn half_sqrt2() -> Self {
        Scalar { a: Rational::zero(), b: rat(1, 2) }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// `Some(a)` when the √2 component vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar { a: &self.a * r, b: &self.b * r }
    }

    /// Conjugate `a − b·√2`.
    pub fn conj(&self) -> Scalar {
        Scalar { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² − 2b²`; nonzero for every nonzero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inv()?)
    }

    /// Sign of the real number `a + b√2`, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with 2b²
        let a2 = &self.a * &self.a;
        let b2 = int(2) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * core::f64::consts::SQRT_2
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl From<Rational> for Scalar {
    fn from(a: Rational) -> Self {
        Scalar::from_rational(a)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    /// `p/q`, `r/s*sqrt2`, `p/q+r/s*sqrt2` or `p/q-r/s*sqrt2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt2", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt2", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let Some(stem) = t.strip_suffix("sqrt2") else {
            return Ok(Scalar::from_rational(parse_rational(t)?));
        };
        let stem = stem.trim_end();
        let stem = stem.strip_suffix('*').unwrap_or(stem).trim_end();
        // split rational part from the sqrt2 coefficient at the last sign
        // that is not the leading one
        let split = stem.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (a, b) = match split {
            Some(i) => (parse_rational(&stem[..i])?, coeff(&stem[i..])?),
            None => (Rational::zero(), coeff(stem)?),
        };
        Ok(Scalar { a, b })
    }
}

fn coeff(s: &str) -> Result<Rational, Error> {
    match s.trim() {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other)),
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let two = int(2);
        Scalar { a: &self.a * &rhs.a + two * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn sqrt2_squares_to_two() {
        let r2 = Scalar::sqrt2();
        assert_eq!(&Scalar::one() * &r2, r2);
        assert_eq!(&r2 * &r2, Scalar::from_int(2));
    }

    #[test]
    fn half_sqrt2_recombines() {
        let h = Scalar::half_sqrt2();
        assert_eq!(&(&h * &h) * &Scalar::from_int(2), Scalar::one());
        assert_eq!(&h * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
        let x = Scalar::new(rat(3, 2), rat(-1, 5));
        assert_eq!(&x.checked_div(&x).unwrap(), &Scalar::one());
    }

    #[test]
    fn signum_is_exact() {
        // 7 - 5√2 ≈ -0.07
        assert_eq!(Scalar::new(int(7), int(-5)).signum(), -1);
        // 3 - 2√2 ≈ 0.17
        assert_eq!(Scalar::new(int(3), int(-2)).signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
    }

    #[test]
    fn display_and_parse() {
        for (s, v) in [
            ("3", Scalar::from_int(3)),
            ("-1/2", Scalar::from_rational(rat(-1, 2))),
            ("1/2*sqrt2", Scalar::new(int(0), rat(1, 2))),
            ("-1/3+2*sqrt2", Scalar::new(rat(-1, 3), int(2))),
            ("5-3/4*sqrt2", Scalar::new(int(5), rat(-3, 4))),
        ] {
            assert_eq!(format!("{v}"), s);
            assert_eq!(s.parse::<Scalar>().unwrap(), v);
        }
        assert_eq!("sqrt2".parse::<Scalar>().unwrap(), Scalar::sqrt2());
        assert_eq!("2 - sqrt2".parse::<Scalar>().unwrap(), Scalar::new(int(2), int(-1)));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }
}
