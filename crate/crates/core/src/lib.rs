//! Exact symbolic algebra for distributions built from piecewise polynomials
//! and derivatives of Dirac deltas.
//!
//! Every value is a [`Dist`]: finitely many rational breakpoints, one
//! polynomial piece per open interval between them, and a finite delta
//! combination at each breakpoint. Coefficients live in the field
//! ℚ(√2) ([`Scalar`]). The crate provides
//!
//! * the vector-space and differential structure ([`calculus`]),
//! * the Hörmander product, the one-sided product `*` and the family `*_M`
//!   parameterised by a set of reals [`MSet`] ([`product`]),
//! * an independent floating-point weak-pairing oracle ([`oracle`]),
//! * a small expression language with a canonical printer ([`lang`]).
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;

pub mod calculus;
pub mod dist;
mod error;
pub mod lang;
pub mod mset;
pub mod oracle;
pub mod poly;
pub mod product;
pub mod scalar;
pub mod support;

pub use crate::dist::{DeltaComb, Dist, RawDist};
pub use crate::error::Error;
pub use crate::mset::{Bound, Interval, MSet};
pub use crate::poly::Poly;
pub use crate::scalar::{Rational, Scalar};
pub use crate::support::ClosedSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;
