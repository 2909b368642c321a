use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("objects belong to different variable contexts")]
    ContextMismatch,
    #[error("variable context holds {0} variables, at most 64 are supported")]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed monomial `{text}` at column {column}: {reason}")]
    MonomialSyntax {
        text: String,
        column: usize,
        reason: String,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("the monomial 1 generates the unit ideal")]
    ImproperIdeal,
    #[error("the void complex has the unit ideal as Stanley-Reisner ideal")]
    UnitIdealOfVoid,
    #[error("the void complex has no minimal nonfaces")]
    VoidComplex,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("expected a squarefree monomial ideal")]
    NotSquarefree,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("the face must be nonempty")]
    EmptyFace,
    #[error("vertex set {0} is not contained in the ground set")]
    OutsideGround(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge {0} has fewer than two vertices")]
    EdgeTooSmall(String),
    #[error("edges {0} and {1} are comparable, not a clutter")]
    ComparableEdges(String, String),
    #[error("{0} is not an edge of the clutter")]
    NotAnEdge(String),
    #[error("contraction produces the empty edge")]
    ImproperContraction,
    #[error("the monomial 1 has empty support")]
    EmptySupport,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("Betti table does not come from a minimal resolution")]
    NonMinimalTable,
    #[error("empty Betti table")]
    EmptyTable,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("property violated: {0}")]
    Violation(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
