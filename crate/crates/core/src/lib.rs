//! Exact arithmetic for principal codes built from skew polynomials over finite
//! commutative rings.
//!
//! The crate is `no_std` and needs only `alloc`. Rings are small and fully enumerable,
//! so every construction can be checked against brute force (see [`oracle`]).
//!
//! Vector components are indexed from 0.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod codes;
pub mod error;
pub mod finring;
pub mod matrices;
pub mod oracle;
pub mod plt;
pub mod skewpoly;

pub use error::{Error, ErrorClass, Result};
pub use finring::{Derivation, DerivationKind, Elem, Endomorphism, Ring, RingSpec};
pub use skewpoly::{SkewContext, SkewPoly};
