use std::fmt;

/// Errors raised while constructing measures, bases, and expansions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col}): {upper} vs {lower}")]
    Asymmetric {
        row: usize,
        col: usize,
        upper: f64,
        lower: f64,
    },

    #[error("matrix is not positive definite: pivot {pivot} is {value:e}")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("matrix is ill-conditioned: condition estimate {estimate:.3e} exceeds {limit:.1e}")]
    IllConditioned { estimate: f64, limit: f64 },

    #[error("requested {requested} Sobol dimensions, table supports {supported}")]
    Capacity { requested: usize, supported: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("output function returned {value} at sample {index}")]
    Evaluation { index: usize, value: f64 },

    #[error("degree {degree} solve residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Residual {
        degree: u32,
        residual: f64,
        tolerance: f64,
    },

    #[error("{stage} failed at degree {degree}: {source}")]
    AtDegree {
        stage: Stage,
        degree: u32,
        #[source]
        source: Box<Error>,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error at row {row}, column {col}: {message}")]
    Parse {
        row: usize,
        col: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Build stage reported alongside a degree when an expansion build fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Basis,
    Gram,
    RightHandSide,
    Solve,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Basis => "basis construction",
            Stage::Gram => "Gram assembly",
            Stage::RightHandSide => "right-hand side",
            Stage::Solve => "coefficient solve",
        })
    }
}

impl Error {
    /// Attaches build context; an error that already carries one keeps it.
    pub(crate) fn at(self, stage: Stage, degree: u32) -> Self {
        if matches!(self, Error::AtDegree { .. }) {
            return self;
        }
        Error::AtDegree {
            stage,
            degree,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
