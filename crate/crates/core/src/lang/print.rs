//! Canonical rendering. The function part is written as
//! `p_0 + Σ (p_i − p_{i−1})·H(x − x_i)`, preceded by the delta terms in
//! order of point and derivative order. Plain output parses back to an
//! equal distribution.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::dist::Dist;
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

enum Unit<'a> {
    One,
    Monomial(usize),
    Heaviside(&'a Rational),
    Delta(&'a Rational, usize),
    /// Non-constant polynomial times `H(x − a)`.
    Windowed(Poly, &'a Rational),
}

fn rational(r: &Rational, style: Style) -> String {
    match style {
        Style::Plain => format!("{r}"),
        Style::Latex if r.is_integer() => format!("{r}"),
        Style::Latex => {
            let sign = if r.is_negative() { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
        }
    }
}

fn heaviside(a: &Rational, style: Style) -> String {
    let arg = if a.is_zero() {
        String::from("x")
    } else if a.is_negative() {
        format!("x+{}", rational(&-a, style))
    } else {
        format!("x-{}", rational(a, style))
    };
    format!("H({arg})")
}

fn unit(u: &Unit<'_>, style: Style) -> String {
    match (u, style) {
        (Unit::One, _) => String::new(),
        (Unit::Monomial(1), _) => String::from("x"),
        (Unit::Monomial(k), Style::Plain) => format!("x^{k}"),
        (Unit::Monomial(k), Style::Latex) => format!("x^{{{k}}}"),
        (Unit::Heaviside(a), _) => heaviside(a, style),
        (Unit::Delta(a, 0), Style::Plain) => format!("delta({a})"),
        (Unit::Delta(a, j), Style::Plain) => format!("delta({a},{j})"),
        (Unit::Delta(a, 0), Style::Latex) => format!("\\delta_{{{}}}", rational(a, style)),
        (Unit::Delta(a, j), Style::Latex) => format!("\\delta_{{{}}}^{{({j})}}", rational(a, style)),
        (Unit::Windowed(p, a), Style::Plain) => format!("({})*{}", poly(p, style), heaviside(a, style)),
        (Unit::Windowed(p, a), Style::Latex) => {
            format!("\\left({}\\right) {}", poly(p, style), heaviside(a, style))
        }
    }
}

/// Magnitude text and sign of a coefficient.
fn coeff_parts(c: &Scalar, style: Style) -> (bool, Option<String>) {
    let sqrt2 = match style {
        Style::Plain => "sqrt2",
        Style::Latex => "\\sqrt{2}",
    };
    let mul = match style {
        Style::Plain => "*",
        Style::Latex => "",
    };
    let a = c.rational_part();
    let b = c.sqrt2_part();
    if b.is_zero() {
        let neg = a.is_negative();
        let mag = a.abs();
        return (neg, (!mag.is_one()).then(|| rational(&mag, style)));
    }
    if a.is_zero() {
        let neg = b.is_negative();
        let mag = b.abs();
        let text = if mag.is_one() { String::from(sqrt2) } else { format!("{}{mul}{sqrt2}", rational(&mag, style)) };
        return (neg, Some(text));
    }
    let (op, bm) = if b.is_negative() { ("-", b.abs()) } else { ("+", b.clone()) };
    let bt = if bm.is_one() { String::from(sqrt2) } else { format!("{}{mul}{sqrt2}", rational(&bm, style)) };
    (false, Some(format!("({} {op} {bt})", rational(a, style))))
}

fn render(terms: &[(Scalar, Unit<'_>)], style: Style) -> String {
    let mul = match style {
        Style::Plain => "*",
        Style::Latex => " ",
    };
    let mut out = String::new();
    for (k, (c, u)) in terms.iter().enumerate() {
        let (neg, mag) = coeff_parts(c, style);
        let ut = unit(u, style);
        let body = match (mag, ut.is_empty()) {
            (Some(m), true) => m,
            (None, true) => String::from("1"),
            (Some(m), false) => format!("{m}{mul}{ut}"),
            // a leading "-x^k" would read as (-x)^k
            (None, false) if k == 0 && neg && style == Style::Plain && ut.starts_with("x^") => {
                format!("1*{ut}")
            }
            (None, false) => ut,
        };
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_terms(p: &Poly) -> Vec<(Scalar, Unit<'static>)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c.clone(), if k == 0 { Unit::One } else { Unit::Monomial(k) }))
        .collect()
}

fn poly(p: &Poly, style: Style) -> String {
    render(&poly_terms(p), style)
}

fn dist_terms(f: &Dist) -> Vec<(Scalar, Unit<'_>)> {
    let mut terms = Vec::new();
    for (x, comb) in f.delta_terms() {
        for (j, c) in comb.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push((c.clone(), Unit::Delta(x, j)));
            }
        }
    }
    terms.extend(poly_terms(&f.pieces()[0]));
    for (i, x) in f.breakpoints().iter().enumerate() {
        let jump = &f.pieces()[i + 1] - &f.pieces()[i];
        match jump.as_constant() {
            Some(c) if c.is_zero() => {}
            Some(c) => terms.push((c, Unit::Heaviside(x))),
            None => terms.push((Scalar::one(), Unit::Windowed(jump, x))),
        }
    }
    terms
}

/// Re-parseable canonical text, e.g. `2*delta(1/2,1) + (x^2)*H(x)`.
pub fn print_plain(f: &Dist) -> String {
    render(&dist_terms(f), Style::Plain)
}

pub fn print_latex(f: &Dist) -> String {
    render(&dist_terms(f), Style::Latex)
}
