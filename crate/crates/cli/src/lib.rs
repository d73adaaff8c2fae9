//! Front end for `distalg`: JSON formats, the `setM` set syntax, and the
//! command session behind both the REPL and batch mode.

pub mod json;
pub mod mset_expr;
pub mod session;

pub use json::{dist_from_json, dist_to_json, mset_from_json, mset_to_json};
pub use mset_expr::parse_mset;
pub use session::{Format, Output, Session};
