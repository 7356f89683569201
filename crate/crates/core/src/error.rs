use thiserror::Error;

use crate::signs::Tope;

/// Whether two proportional columns or normals point the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alignment {
    Parallel,
    Antiparallel,
}

impl std::fmt::Display for Alignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Alignment::Parallel => f.write_str("parallel"),
            Alignment::Antiparallel => f.write_str("antiparallel"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size must be at least 2, got {0}")]
    InvalidGroundSize(usize),
    #[error("element {element} is outside 1..={t}")]
    ElementOutOfRange { element: usize, t: usize },
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid sign entry {0}, expected -1 or 1")]
    InvalidSign(i64),
    #[error("cannot parse tope {0:?}: only '+' and '-' are allowed")]
    ParseTope(String),

    #[error("tope set needs at least 4 topes, got {0}")]
    TooSmall(usize),
    #[error("tope {0} is present but its negation is not")]
    SymmetryViolation(Tope),
    #[error("elements {0} and {1} are parallel")]
    ParallelElements(usize, usize),
    #[error("elements {0} and {1} are antiparallel")]
    AntiparallelElements(usize, usize),
    #[error("tope graph is disconnected")]
    Disconnected,
    #[error("tope graph is not a partial cube: graph distance {graph} between {a} and {b}, Hamming distance {hamming}")]
    NotPartialCube {
        a: Tope,
        b: Tope,
        graph: usize,
        hamming: usize,
    },
    #[error("tope {0} is not in the tope set")]
    NotInTopeSet(Tope),

    #[error("cycle must have {expected} vertices, got {found}")]
    CycleLength { expected: usize, found: usize },
    #[error("cycle vertex {0} is not in the tope set")]
    CycleVertexNotInTopeSet(usize),
    #[error("cycle step from vertex {0} is not an edge of the tope graph")]
    NonAdjacentStep(usize),
    #[error("cycle vertex {0} is not the negation of the vertex t steps earlier")]
    NotAntipodal(usize),
    #[error("cycle vertex {0} repeats an earlier vertex")]
    Duplicate(usize),
    #[error("no symmetric cycle found through {0}")]
    NoCycleFound(Tope),

    #[error("sign matrix determinant {found} does not have absolute value {expected}")]
    DeterminantMismatch { found: i128, expected: i128 },
    #[error("closed-form inverse failed verification against the sign matrix")]
    VerificationFailed,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("coordinates of {0} leave {{-1,0,1}}: not a tope of this oriented matroid")]
    NonTopeInput(Tope),
    #[error("brute-force search found incomparable minimal subsets for {0}")]
    OracleAmbiguous(Tope),
    #[error("brute-force search found no subset summing to {0}")]
    OracleNotFound(Tope),
    #[error("ground set size {t} exceeds the bound {bound}")]
    BoundExceeded { t: usize, bound: usize },

    #[error("committee candidate must be nonempty")]
    EmptyCommittee,
    #[error("committee has {size} members, minimality bound is {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("tope set is not acyclic: the positive tope is missing")]
    NotAcyclic,
    #[error("tope {0} is not a vertex of the cycle")]
    NotOnCycle(Tope),
    #[error("max+ set of the cycle sums to {0:?}, not the positive tope")]
    CommitteeSumMismatch(Vec<i64>),

    #[error("dimension must be at least 2 and match every normal: {0}")]
    BadDimension(String),
    #[error("normal {0} is zero")]
    ZeroNormal(usize),
    #[error("normals {e} and {f} are {alignment}")]
    ScalarMultiple {
        e: usize,
        f: usize,
        alignment: Alignment,
    },

    #[error("fixture reconstruction failed: {0} is not a chamber")]
    ReconstructionFailed(Tope),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
