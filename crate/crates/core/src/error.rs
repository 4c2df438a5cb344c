//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: Z_{0} vs Z_{1}")]
    ModulusMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("the zero element generates no minimal nonzero ideal")]
    ZeroElement,
    #[error("element does not lie in the ideal")]
    NotInIdeal,
    #[error("not a bounded lattice: {0}")]
    NotALattice(String),
    #[error("not a commutative ordered monoid with unit top: {0}")]
    NotAMonoid(String),
    #[error("residuation fails at (x={x}, y={y}, z={z})")]
    ResiduationFails { x: usize, y: usize, z: usize },
    #[error("operation requires a BL-algebra")]
    NotBl,
    #[error("D(L) has no greatest element")]
    NoGreatestElement,
    #[error("algebra size {n} exceeds the isomorphism-search cap {cap}")]
    SizeTooLarge { n: usize, cap: usize },
    #[error("ideal count {count} exceeds the cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("size {0} is outside the supported range {1}..={2}")]
    SizeOutOfRange(usize, usize, usize),
    #[error("scan violation for {ring}: {check}")]
    ScanViolation { ring: String, check: String },
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("value has {needed} digits but the message length is {len}")]
    LengthOverflow { needed: usize, len: usize },
    #[error("message needs {digits} base-{p} digits, the ring carries at most {max}")]
    MessageTooLong { digits: usize, p: u64, max: usize },
    #[error("x^(beta+1)-x is not squarefree over Z_{p}: {p} divides beta={beta}")]
    SquarefreeViolation { p: u64, beta: u32 },
    #[error("candidate enumeration exceeds the cap of {base}^{exp} combinations")]
    CandidateExplosion { base: u64, exp: u32 },
    #[error("no decryption candidates (malformed ciphertext or key)")]
    NoCandidates,
    #[error("parse error: {0}")]
    Parse(String),
}
