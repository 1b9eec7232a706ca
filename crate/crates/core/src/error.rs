use thiserror::Error;

/// Errors raised by graph construction, instance validation and the solvers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("color {color} out of range for pattern on {k} colors")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("pattern graph has loops; only the oracles accept reflexive patterns")]
    ReflexivePattern,

    #[error("host graph is not connected")]
    Disconnected,

    #[error("host graph has an edge ({0}, {1})")]
    HostHasEdge(usize, usize),

    #[error("revenue function has no positive value")]
    NoPositiveRevenue,

    #[error("no monitor base found{}", anchor.map(|a| format!(" anchored at {a}")).unwrap_or_default())]
    NoMonitorBase { anchor: Option<usize> },

    #[error("host graph is not a cograph (induced P4 on {0:?})")]
    NotCograph(Vec<usize>),

    #[error("host graph violates the class promise: {0}")]
    ClassViolation(String),

    #[error("structure violation: {what} (witness {witness:?})")]
    StructureViolation { what: String, witness: Vec<usize> },

    #[error("size cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("sampling budget of {0} attempts exhausted")]
    SamplingBudget(usize),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Errors meaning the input was outside the class the algorithm was promised.
    pub fn is_class_violation(&self) -> bool {
        matches!(
            self,
            Error::NoMonitorBase { .. }
                | Error::NotCograph(_)
                | Error::ClassViolation(_)
                | Error::StructureViolation { .. }
                | Error::Disconnected
                | Error::HostHasEdge(..)
                | Error::ReflexivePattern
        )
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
