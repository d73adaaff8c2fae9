//! Expression language for distributions.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = power { "*" power } ;
//! power   = unary { "^" INT } ;
//! unary   = "-" unary | primary ;
//! primary = INT [ "/" INT ] | "sqrt2" | "x" | NAME
//!         | "(" expr ")"
//!         | "H" "(" affine ")" | "abs" "(" affine ")"
//!         | "delta" "(" rational [ "," INT ] ")"
//!         | "D" "(" expr [ "," INT ] ")" | "AD" "(" expr ")" ;
//! ```
//!
//! Unary minus binds tighter than `^`, so `-x^2` is `(-x)^2`. Every `*` is
//! the session product `*_M`.

mod ast;
mod error;
mod eval;
mod lexer;
mod parser;
mod print;

pub use ast::{Affine, Expr};
pub use error::LangError;
pub use eval::{eval, Env, RESERVED};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, Parser};
pub use print::{print_latex, print_plain};
