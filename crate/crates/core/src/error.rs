use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The search visited more nodes than the configured budget allows.
    /// The instance is too large; nothing is known about the answer.
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("no value found up to the search ceiling {ceiling}")]
    CeilingExceeded { ceiling: u64 },

    #[error("residue class {residue} has {have} interpolation points, need {need}")]
    InsufficientPoints { residue: u64, have: usize, need: usize },

    #[error(
        "value at t = {t} (residue class {residue}) is off the degree-{degree} polynomial through the other points"
    )]
    Inconsistent { residue: u64, t: i64, degree: usize },

    #[error("constituent {residue} has leading coefficient {found}, expected {expected}")]
    LeadingCoefficient { residue: u64, found: String, expected: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid mixed graph: {0}")]
    InvalidGraph(String),

    #[error("orientation is not realized by any point of the open simplex")]
    Unrealizable,
}
