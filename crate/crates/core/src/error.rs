use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty facet in input")]
    EmptyFacet,
    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),
    #[error("too many vertices: {0} (at most 64 supported)")]
    TooManyVertices(usize),
    #[error("complex is not pure")]
    NotPure,
    #[error("set is not a face of the complex")]
    NotAFace,
    #[error("set is not a subfacet of the complex")]
    NotASubfacet,
    #[error("vertex sets overlap")]
    OverlappingVertices,
    #[error("{0}")]
    OutOfRange(String),
    #[error("ideal has a generator of degree at most one")]
    LinearGenerator,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("matrix dimension {0} exceeds the determinant cap of 12")]
    MatrixTooLarge(usize),
    #[error("{h}-th roots of unity are not available in {field}")]
    RootsUnavailable { h: usize, field: String },
    #[error("vertex count {0} exceeds the enumeration cap of 16")]
    EnumerationCap(usize),
    #[error("complex is a simplex: {0}")]
    Simplex(&'static str),
    #[error("face equals the whole vertex set")]
    FaceIsWholeSet,
    #[error("term `{0}` is not divisible by any of the frame variables")]
    NotInFramePrime(String),
    #[error("case guard violated: {0}")]
    CaseGuard(String),
    #[error("witness does not generate the ideal up to radical: {0}")]
    WitnessRejected(String),
    #[error("constructed presentation failed verification: {0}")]
    VerificationFailed(String),
    #[error("verification inconclusive: gave up after {0} S-pairs")]
    Inconclusive(usize),
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error("shape not recognized: {0}")]
    ShapeNotRecognized(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
