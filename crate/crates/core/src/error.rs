use alloc::string::String;
use core::fmt;

/// Coarse classification of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input: bad parameters, shapes, or text.
    Validation,
    /// The input is well formed but a theorem hypothesis does not hold.
    Precondition,
    /// An exhaustive enumeration would exceed its configured bound.
    Bound,
    /// A construction failed its own verification.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidModulus(u64),
    ReducibleModulus,
    UnsupportedKind(String),
    RingTooLarge { size: u128, max: u64 },
    NotInRing { index: u32, size: u32 },
    RingMismatch,
    ContextMismatch,
    LengthMismatch { expected: usize, found: usize },
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    Parse(String),

    InvalidEndomorphism,
    InvalidDerivation,
    SamplingNotAllowed { pairs: u128, bound: u64 },
    NotInjective,

    LeadingCoefficientNotUnit,
    SigmaNotInvertible,
    NegativePowerWithoutAutomorphism,
    NonzeroDerivation,
    DivisibilityFails,
    NonUnitInput,
    ConstantTermNotUnit,
    NotMonic,
    ZeroDegree,
    NotARightDivisor,
    CofactorMissing,
    NotConstacyclic,
    OddLength,
    NotHalfRank { degree: usize, length: usize },
    NotASubmodule,
    NoMatrixAvailable,

    BoundExceeded { needed: u128, bound: u64 },

    InternalInconsistency(&'static str),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            InvalidModulus(_) | ReducibleModulus | UnsupportedKind(_) | NotInRing { .. }
            | RingMismatch | ContextMismatch | LengthMismatch { .. } | ShapeMismatch { .. }
            | Parse(_) | InvalidEndomorphism | InvalidDerivation | NotMonic | ZeroDegree
            | NotASubmodule => ErrorClass::Validation,
            NotInjective | LeadingCoefficientNotUnit | SigmaNotInvertible
            | NegativePowerWithoutAutomorphism | NonzeroDerivation | DivisibilityFails
            | NonUnitInput | ConstantTermNotUnit | NotARightDivisor | CofactorMissing
            | NotConstacyclic | OddLength | NotHalfRank { .. } | NoMatrixAvailable => {
                ErrorClass::Precondition
            }
            RingTooLarge { .. } | SamplingNotAllowed { .. } | BoundExceeded { .. } => {
                ErrorClass::Bound
            }
            InternalInconsistency(_) => ErrorClass::Internal,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            InvalidModulus(m) => write!(f, "invalid modulus {m}"),
            ReducibleModulus => f.write_str("defining polynomial is not monic irreducible"),
            UnsupportedKind(what) => write!(f, "unsupported kind: {what}"),
            RingTooLarge { size, max } => write!(f, "ring of size {size} exceeds the limit {max}"),
            NotInRing { index, size } => {
                write!(f, "element index {index} does not belong to a ring of size {size}")
            }
            RingMismatch => f.write_str("operands belong to different rings"),
            ContextMismatch => f.write_str("operands belong to different skew-polynomial rings"),
            LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            ShapeMismatch { left, right } => write!(
                f,
                "shape mismatch: {}x{} against {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Parse(msg) => write!(f, "parse error: {msg}"),
            InvalidEndomorphism => f.write_str("map is not a unital ring endomorphism"),
            InvalidDerivation => f.write_str("map is not a sigma-derivation"),
            SamplingNotAllowed { pairs, bound } => write!(
                f,
                "{pairs} element pairs exceed the exhaustive bound {bound} and sampling is disabled"
            ),
            NotInjective => f.write_str("endomorphism is not injective, so it has no inverse"),
            LeadingCoefficientNotUnit => f.write_str("leading coefficient is not a unit"),
            SigmaNotInvertible => f.write_str("sigma is not an automorphism"),
            NegativePowerWithoutAutomorphism => {
                f.write_str("negative power of sigma requested but sigma is not an automorphism")
            }
            NonzeroDerivation => f.write_str("operation requires the zero derivation"),
            DivisibilityFails => f.write_str("required divisibility does not hold"),
            NonUnitInput => f.write_str("input constant is not a unit"),
            ConstantTermNotUnit => f.write_str("constant term is not a unit"),
            NotMonic => f.write_str("polynomial is not monic"),
            ZeroDegree => f.write_str("polynomial must have degree at least 1"),
            NotARightDivisor => f.write_str("generator is not a right divisor of f"),
            CofactorMissing => f.write_str("generator is not known to be a left divisor of f"),
            NotConstacyclic => f.write_str("f is not of the form X^n - a with a a unit"),
            OddLength => f.write_str("code length is odd"),
            NotHalfRank { degree, length } => write!(
                f,
                "generator degree {degree} is not half of the code length {length}"
            ),
            NotASubmodule => f.write_str("word set is not closed under addition and scaling"),
            NoMatrixAvailable => f.write_str("no control or parity-check matrix is available"),
            BoundExceeded { needed, bound } => {
                write!(f, "enumeration of {needed} vectors exceeds the bound {bound}")
            }
            InternalInconsistency(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
