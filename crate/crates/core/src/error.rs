use thiserror::Error;

use crate::series::MonthStamp;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input data violates a structural requirement (too short, gaps, empty).
    #[error("data error: {0}")]
    Data(String),

    /// A calendar month inside the covered span has no observations.
    #[error("data error: no records for month {0}")]
    MissingMonth(MonthStamp),

    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{stamp} is outside the series span {start}..{end}")]
    OutOfRange {
        stamp: MonthStamp,
        start: MonthStamp,
        end: MonthStamp,
    },

    /// Caller broke an argument precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A value outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown fixture `{name}` (known fixtures: {known})")]
    UnknownFixture { name: String, known: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
