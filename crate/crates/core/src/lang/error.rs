use alloc::string::String;

use crate::error::Error;

/// Errors from lexing, parsing and evaluating expressions. Positions are
/// 1-based `line:column`.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LangError {
    #[error("{line}:{col}: unexpected character `{found}`")]
    Lex { line: usize, col: usize, found: char },

    #[error("{line}:{col}: expected {expected}, found {found}")]
    Parse { line: usize, col: usize, expected: String, found: String },

    #[error("{line}:{col}: unsupported argument `{arg}` to {func}: only affine arguments c*x+d with rational c != 0 are allowed")]
    UnsupportedArgument { line: usize, col: usize, func: &'static str, arg: String },

    #[error("unbound name `{0}`")]
    Unbound(String),

    #[error("invalid binding name `{0}`")]
    InvalidName(String),

    #[error("powers of distributions are undefined; `^` needs a smooth base")]
    PowerOfDistribution,

    #[error(transparent)]
    Algebra(#[from] Error),
}
