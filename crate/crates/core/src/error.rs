use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("C{0} has no exact generator in Q(√2,√3,√5); use the numeric cyclic group instead")]
    UnsupportedExact(u32),
    #[error("invalid subgroup label `{0}`")]
    InvalidLabel(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("rotation does not normalize the subgroup")]
    NotInNormalizer,
    #[error("vector is not in the lattice")]
    NotALatticeVector,
    #[error("degenerate lattice: vectors are linearly dependent")]
    DegenerateLattice,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("wrong parameter kind: {0}")]
    WrongKind(String),
    #[error("row {row} is inconsistent with {detail}")]
    InconsistentRow { row: u8, detail: String },
    #[error("point coincides with a monopole")]
    SingularPoint,
    #[error("point lies on a Dirac string; move the gauge axis")]
    GaugeSingular,
    #[error("segment passes through an interior monopole")]
    InvalidSegment,
    #[error("malformed sphere descriptor: {0}")]
    MalformedSphere(String),
    #[error("parameter is not admissible")]
    Inadmissible,
    #[error("root spheres need an externally supplied area")]
    RequiresExternalArea,
    #[error("no certificate: beta = {beta} does not exceed 2 gamma = {two_gamma}")]
    NoCertificate { beta: f64, two_gamma: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown example id `{0}`")]
    UnknownExample(String),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
