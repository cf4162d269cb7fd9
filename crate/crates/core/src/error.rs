use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed angle sequence: {0}")]
    MalformedSequence(String),

    #[error("vertices are not in convex position (reflex or interior vertex {vertex})")]
    NotConvexPosition { vertex: usize },

    #[error("polygon is not small: diameter {diameter} exceeds 1 + {tol:e}")]
    NotSmall { diameter: f64, tol: f64 },

    #[error("no gamma closes the polygon at alpha = {alpha} (arcsin argument {arg})")]
    InfeasibleAlpha { alpha: f64, arg: f64 },

    #[error("infeasible thin-model parameters: {0}")]
    InvalidParams(String),

    #[error("invalid vertex count {n}: {reason}")]
    InvalidVertexCount { n: usize, reason: &'static str },

    #[error("maximum sits at the bracket endpoint x = {x}")]
    NoInteriorMax { x: f64 },

    #[error("scalar maximization failed: {0}")]
    MaximizerFailed(String),

    #[error("Newton solve failed after {iterations} iterations (residual {residual:e}): {reason}")]
    NewtonFailed {
        iterations: usize,
        residual: f64,
        reason: &'static str,
    },

    /// Wraps a solver error with the construction stage that raised it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
