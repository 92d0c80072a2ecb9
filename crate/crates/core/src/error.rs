use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two ring elements from different presentations were combined.
    PresentationMismatch,
    /// An operation that needs a homogeneous input received a mixed-degree one.
    Inhomogeneous,
    /// A generator has no action table for the requested operation.
    MissingAction { generator: String, operation: String },
    /// Malformed textual input.
    Parse { input: String, position: usize, message: String },
    InvalidPresentation(String),
    /// No U-brane exists on `RP^n ⊂ CP^n` for this `n`.
    BraneInfeasible { n: i64 },
    InvalidFlowCategory(String),
    /// The flow category did not validate; carries the number of violations.
    ValidationFailed(usize),
    /// `Q_i` is not available over the coefficient ring at hand.
    UnavailableOperation { i: u32, n: i64 },
    MissingTwistClass { i: u32 },
    /// A formal bundle does not know its Stiefel-Whitney classes far enough.
    MissingClasses { needed: u32, known: u32 },
    InvalidScenario(String),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PresentationMismatch => write!(f, "ring elements belong to different presentations"),
            Error::Inhomogeneous => write!(f, "element is not homogeneous"),
            Error::MissingAction { generator, operation } => {
                write!(f, "generator `{generator}` has no action table for {operation}")
            }
            Error::Parse { input, position, message } => {
                write!(f, "parse error at {position} in `{input}`: {message}")
            }
            Error::InvalidPresentation(msg) => write!(f, "invalid ring presentation: {msg}"),
            Error::BraneInfeasible { n } => {
                write!(f, "RP^{n} ⊂ CP^{n} carries no U-brane: n must be odd and at least 3")
            }
            Error::InvalidFlowCategory(msg) => write!(f, "invalid flow category: {msg}"),
            Error::ValidationFailed(k) => write!(f, "flow category failed validation with {k} violation(s)"),
            Error::UnavailableOperation { i, n } => {
                write!(f, "Q_{i} is not available for n = {n}")
            }
            Error::MissingTwistClass { i } => write!(f, "twist has no class for Q_{i}"),
            Error::MissingClasses { needed, known } => write!(
                f,
                "Stiefel-Whitney classes needed through degree {needed}, known only through {known}"
            ),
            Error::InvalidScenario(msg) => write!(f, "invalid scenario: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
