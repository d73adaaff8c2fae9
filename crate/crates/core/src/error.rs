use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::Rational;

/// Errors raised by the algebra and the oracle.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conflicting pieces given for breakpoint {0}")]
    ConflictingPieces(Rational),

    #[error("malformed representation: {0}")]
    Representation(String),

    #[error("singular supports intersect at {}", fmt_points(.0))]
    SingularSupportOverlap(Vec<Rational>),

    #[error("invalid scalar literal `{0}`")]
    ScalarSyntax(String),

    #[error("epsilon limit did not converge: tail estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    OracleDivergence { estimate: f64, tolerance: f64 },

    #[error("invalid test function: {0}")]
    TestFunction(String),
}

fn fmt_points(points: &[Rational]) -> String {
    use core::fmt::Write;
    let mut out = String::from("{");
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{p}");
    }
    out.push('}');
    out
}
