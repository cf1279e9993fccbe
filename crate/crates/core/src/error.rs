use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidCartanType(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("Weyl group has more than {0} elements; enumeration refused")]
    GroupTooLarge(usize),

    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("node {0} is not minuscule")]
    NotMinuscule(usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coweight {0} is not in the coroot lattice")]
    NotInCorootLattice(String),

    #[error("affine root {0} is imaginary")]
    ImaginaryRoot(String),

    #[error("{0} is not a minimal length coset representative")]
    NotGrassmannian(String),

    #[error("coweight {0} is not antidominant")]
    NotAntidominant(String),

    #[error("{0} is not a length zero element")]
    NotLengthZero(String),

    #[error("polynomial `{0}` is not homogeneous linear")]
    NotLinear(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division")]
    InexactDivision,

    #[error("element is not in the nil-Hecke ring: {0}")]
    NotInNilHecke(String),

    #[error("length {len} exceeds the configured bound {max}")]
    BoundExceeded { len: usize, max: usize },

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("underdetermined linear system: {0} free unknowns")]
    Underdetermined(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
