use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("layer size k{index} is not an integer")]
    NonIntegralLayer { index: usize },

    #[error("infeasible potential at index {index}: {reason}")]
    InfeasiblePotential { index: usize, reason: String },

    #[error("index {index} out of range (diameter {diameter})")]
    IndexOutOfRange { index: usize, diameter: usize },

    #[error("inconsistent strongly regular parameters: {0}")]
    InconsistentParameters(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown graph family: {0}")]
    UnknownFamily(String),

    #[error("graph has {n} vertices, above the cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("graph {name} is not distance-regular with the claimed array: {detail}")]
    NotDistanceRegular { name: String, detail: String },

    #[error("singular linear system (graph disconnected?)")]
    SingularSystem,

    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },

    #[error("potential is not harmonic at vertex {vertex}: net flow {residual}")]
    HarmonicityViolation { vertex: usize, residual: String },

    #[error("resistance mismatch between {u} and {v}: expected {expected}, found {found}")]
    ResistanceMismatch {
        u: usize,
        v: usize,
        expected: String,
        found: String,
    },
}
