use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Negative mathematical answers (an axiom fails, a structure is not a
/// betweenness relation) are verdicts, not errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for universe of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("pairs force {vertex} < {vertex}: the generating relation has a cycle")]
    CycleDetected { vertex: usize },

    #[error("vertex {vertex} is isolated; a cut needs a poset without isolated elements")]
    HasIsolatedElement { vertex: usize },

    #[error("the empty poset has no cut")]
    EmptyUniverse,

    #[error("structure is not the betweenness of any partial order")]
    NotRecognized,

    #[error("component of {size} vertices exceeds the subset-search bound {bound}")]
    ComponentTooLarge { size: usize, bound: usize },

    #[error("universe of size {n} exceeds the exhaustive bound {max}")]
    UniverseTooLarge { n: usize, max: usize },

    #[error("parameter {value} is below the minimum {min}")]
    ParameterTooSmall { value: usize, min: usize },

    #[error("parameter {value} must be even")]
    OddParameter { value: usize },

    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
