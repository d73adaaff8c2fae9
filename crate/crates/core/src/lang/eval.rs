use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use num_traits::Signed;

use super::ast::Expr;
use super::error::LangError;
use crate::calculus::{antiderivative, derivative_n};
use crate::dist::Dist;
use crate::mset::MSet;
use crate::poly::Poly;
use crate::product::star_m;
use crate::scalar::Scalar;

/// Names that cannot be bound.
pub const RESERVED: &[&str] = &["x", "H", "abs", "delta", "D", "AD", "sqrt2"];

/// Session bindings and the product parameter `M` (default ℝ).
#[derive(Clone, Debug)]
pub struct Env {
    bindings: BTreeMap<String, Dist>,
    m: MSet,
}

impl Default for Env {
    fn default() -> Self {
        Env { bindings: BTreeMap::new(), m: MSet::real_line() }
    }
}

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn m(&self) -> &MSet {
        &self.m
    }

    pub fn set_m(&mut self, m: MSet) {
        self.m = m;
    }

    pub fn get(&self, name: &str) -> Option<&Dist> {
        self.bindings.get(name)
    }

    pub fn bind(&mut self, name: &str, value: Dist) -> Result<(), LangError> {
        if !valid_name(name) || RESERVED.contains(&name) {
            return Err(LangError::InvalidName(name.to_string()));
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn eval(e: &Expr, env: &Env) -> Result<Dist, LangError> {
    Ok(match e {
        Expr::Rational(r) => Dist::constant(r.clone().into()),
        Expr::SqrtTwo => Dist::constant(Scalar::sqrt2()),
        Expr::X => Dist::from_smooth(Poly::x()),
        Expr::Heaviside(a) => {
            if a.slope.is_positive() {
                Dist::heaviside(a.root())
            } else {
                Dist::mirrored_heaviside(a.root())
            }
        }
        // |c x + d| = |c|·|x − root|
        Expr::Abs(a) => Dist::abs_shift(a.root()).scale(&a.slope.abs().into()),
        Expr::Delta { point, order } => Dist::delta(point.clone(), *order),
        Expr::Add(a, b) => &eval(a, env)? + &eval(b, env)?,
        Expr::Sub(a, b) => &eval(a, env)? - &eval(b, env)?,
        Expr::Neg(a) => -&eval(a, env)?,
        Expr::Mul(a, b) => star_m(&eval(a, env)?, &eval(b, env)?, &env.m),
        Expr::Pow(a, n) => {
            let base = eval(a, env)?;
            let p = base.as_smooth().ok_or(LangError::PowerOfDistribution)?;
            Dist::from_smooth(p.pow(*n))
        }
        Expr::D(a, n) => derivative_n(&eval(a, env)?, *n),
        Expr::AD(a) => antiderivative(&eval(a, env)?),
        Expr::Var(name) => env.get(name).cloned().ok_or_else(|| LangError::Unbound(name.clone()))?,
    })
}
