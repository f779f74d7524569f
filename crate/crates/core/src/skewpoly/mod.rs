//! The skew-polynomial ring `A[X; σ, δ]` with `X a = σ(a) X + δ(a)`.

mod context;
mod laurent;
mod poly;
mod transfer;

pub use context::SkewContext;
pub use laurent::LaurentSkewPoly;
pub use poly::SkewPoly;
pub use transfer::{divisor_transfer, hstar_targets, TransferDirection};
