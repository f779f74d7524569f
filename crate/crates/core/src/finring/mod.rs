//! Finite commutative rings, their endomorphisms and twisted derivations.

mod maps;
mod ring;
mod text;

pub use maps::{
    endo_inverse, verify_derivation, verify_endomorphism, Derivation, DerivationKind,
    Endomorphism, Verification, VerifyPolicy,
};
pub use ring::{ArithOp, Elem, Ring, RingSpec, MAX_RING_SIZE};
