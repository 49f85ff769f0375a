use thiserror::Error;

/// Errors produced by the ring algebra, the schemes and the file codecs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("extension degree m = {0} is not supported (only m = 1)")]
    UnsupportedDegree(u32),
    #[error("{lambda} is not a quadratic non-residue mod {p}")]
    NotNonResidue { p: u32, lambda: u32 },
    #[error("dihedral half-order must be at least 1")]
    ZeroOrder,
    #[error("group index {index} out of range for D_{}", 2 * .n)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("division by zero in F_q^2")]
    DivisionByZero,
    #[error("ring element has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("element is not supported on the expected subspace")]
    Domain(&'static str),
    #[error("element is not in the reversible subspace")]
    NotReversible,
    #[error("secret component is zero")]
    ZeroSecret,
    #[error("invalid key length {0} (expected 128, 192 or 256)")]
    InvalidKeyBits(u32),
    #[error("encoding has length {got}, expected {expected}")]
    EncodingLength { expected: usize, got: usize },
    #[error("encoding is not canonical")]
    NonCanonical,
    #[error("search space of {} candidates exceeds the desk-scale guard", space_size(*.0))]
    SearchSpaceTooLarge(u128),
    #[error("malformed file: {0}")]
    MalformedFile(&'static str),
    #[error("checksum mismatch")]
    Checksum,
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("unknown parameter set {0:?}")]
    UnknownParamSet(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn space_size(n: u128) -> String {
    if n == u128::MAX {
        "more than 2^127".to_string()
    } else {
        n.to_string()
    }
}
