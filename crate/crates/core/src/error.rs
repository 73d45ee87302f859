use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter violated an operation's precondition.
    InvalidParameter(String),
    /// The work required exceeds the caller's budget.
    BudgetExceeded { required: u128, limit: u128 },
    /// A y-list holds a colour outside the union of the x-lists.
    NotInUnion { vertex: usize, color: u32 },
    /// No AM-GM bound is available for this `(m, d)` pair.
    UnsupportedCase { m: u32, d: u32 },
    /// A numeric routine did not converge.
    NonConvergence(String),
    /// A computed value failed its own postcondition.
    Postcondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::BudgetExceeded { required, limit } => {
                write!(f, "budget exceeded: {required} states required, limit {limit}")
            }
            Error::NotInUnion { vertex, color } => write!(
                f,
                "y-vertex {vertex} uses colour {color} outside the union of the x-lists"
            ),
            Error::UnsupportedCase { m, d } => {
                write!(f, "no lower bound available for m = {m}, d = {d}")
            }
            Error::NonConvergence(msg) => write!(f, "no convergence: {msg}"),
            Error::Postcondition(msg) => write!(f, "postcondition failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidParameter(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
