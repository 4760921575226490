use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A group closure grew past the configured size guard.
    #[error("group closure exceeds the size guard of {limit} elements")]
    GroupTooLarge { limit: u64 },

    /// Operands belong to different groups, or a subgroup relation does not hold.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// No element of the dual group realizes the requested character.
    /// Impossible for a nondegenerate pairing; signals corrupted input.
    #[error("no dual element realizes the character under the pairing")]
    PairingInconsistent,

    /// An enhanced set violates one of its structural invariants.
    #[error("malformed enhanced set: {0}")]
    MalformedEnhancedSet(String),

    /// Saito duality is only defined on elements whose generators all have k = 1.
    #[error("element is not in B1: generator with k = {0} present")]
    NotInB1(u64),

    /// A product of cyclotomic factors has no expression with integer exponents.
    #[error("product of cyclotomic factors is not integral")]
    NotIntegral,

    /// Input text could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An invertible polynomial must have as many monomials as variables.
    #[error("polynomial has {monomials} monomials but {vars} variables")]
    NotSquare { monomials: usize, vars: usize },

    /// The exponent matrix is singular.
    #[error("exponent matrix is degenerate (det = 0)")]
    Degenerate,

    /// An internal assertion failed; this is a bug, never valid-input behaviour.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
