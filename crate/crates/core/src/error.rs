use thiserror::Error;

/// Everything that can go wrong between parsing a presentation and
/// producing a report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("{which} is not a permutation of 0..{n}")]
    NotAPermutation { which: &'static str, n: usize },
    #[error("O and X share the cell in column {column}")]
    SharedCell { column: usize },
    #[error("edge {edge} occurs {count} times, expected 2")]
    EdgeMultiplicity { edge: usize, count: usize },
    #[error("edge trace visits {visited} of {total} edges")]
    DisconnectedTrace { visited: usize, total: usize },
    #[error("inconsistent orientation at crossing {crossing}")]
    Orientation { crossing: usize },
    #[error("crossing {crossing}: declared sign {declared} but orientation gives {computed}")]
    SignMismatch {
        crossing: usize,
        declared: i8,
        computed: i8,
    },
    #[error("diagram has {faces} regions, a planar diagram with {crossings} crossings has {}", crossings + 2)]
    NonPlanar { faces: usize, crossings: usize },
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("states belong to different diagrams")]
    DiagramMismatch,
    #[error("grading inconsistency: {0}")]
    Inconsistent(String),
    #[error("cannot normalize polynomial: {0}")]
    Normalization(String),
    #[error("boundary does not square to zero at generator {generator}")]
    BoundarySquare { generator: u64 },
    #[error("arrow {from} -> {to} does not have bidegree (-1, 0)")]
    ArrowGrading { from: u64, to: u64 },
    #[error("tilde ranks are not divisible by the two-dimensional factor: {0}")]
    InexactDivision(String),
    #[error("malformed hat ranks: {0}")]
    MalformedRanks(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Resource,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Syntax(_)
            | LetterOutOfRange { .. }
            | NotAKnot { .. }
            | NotAPermutation { .. }
            | SharedCell { .. }
            | EdgeMultiplicity { .. }
            | DisconnectedTrace { .. }
            | Orientation { .. }
            | SignMismatch { .. }
            | NonPlanar { .. }
            | DiagramMismatch
            | MalformedRanks(_) => ErrorClass::Input,
            Resource(_) => ErrorClass::Resource,
            Inconsistent(_)
            | Normalization(_)
            | BoundarySquare { .. }
            | ArrowGrading { .. }
            | InexactDivision(_) => ErrorClass::Internal,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.class() {
            ErrorClass::Input => 1,
            ErrorClass::Resource => 2,
            ErrorClass::Internal => 3,
        }
    }

    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        use Error::*;
        match self {
            Syntax(_) => "syntax",
            LetterOutOfRange { .. } => "domain",
            NotAKnot { .. } => "topology",
            NotAPermutation { .. } => "permutation",
            SharedCell { .. } => "shared-cell",
            EdgeMultiplicity { .. } => "edge-multiplicity",
            DisconnectedTrace { .. } => "disconnected-trace",
            Orientation { .. } => "orientation",
            SignMismatch { .. } => "sign-mismatch",
            NonPlanar { .. } => "non-planar",
            Resource(_) => "resource",
            DiagramMismatch => "diagram-mismatch",
            Inconsistent(_) => "inconsistent-grading",
            Normalization(_) => "normalization",
            BoundarySquare { .. } => "boundary-square",
            ArrowGrading { .. } => "arrow-grading",
            InexactDivision(_) => "inexact-division",
            MalformedRanks(_) => "malformed-ranks",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
