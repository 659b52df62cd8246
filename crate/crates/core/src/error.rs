use thiserror::Error;

/// Errors raised by the library.
///
/// Words and symbols inside variants are already rendered as text so that an
/// error can outlive the alphabet that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("invalid symbol name `{0}`")]
    InvalidName(String),

    #[error("duplicate symbol name `{0}`")]
    DuplicateName(String),

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("empty word is not allowed here")]
    EmptyWord,

    #[error("position {position} is out of range for a word of length {length}")]
    PositionOutOfRange { position: usize, length: usize },

    #[error("table is not idempotent on the pair ({0})")]
    NotIdempotent(String),

    #[error("no normal word reachable from `{word}` within the search budget")]
    NotNormalising { word: String },

    #[error("`{word}` reaches two distinct normal words `{first}` and `{second}`")]
    NotConfluent {
        word: String,
        first: String,
        second: String,
    },

    #[error("rewriting from `{word}` does not terminate (cycle through `{cycle}`)")]
    NonTerminating { word: String, cycle: String },

    #[error("table has no unit symbol")]
    MissingUnit,

    #[error("table already has unit symbol `{0}`")]
    UnitAlreadyPresent(String),

    #[error("search budget of {budget} nodes exhausted while {context}")]
    BudgetExhausted { budget: usize, context: String },

    #[error("thurston sweeps did not reach a normal word within {0} sweeps")]
    SweepBudgetExhausted(usize),

    #[error("padding length {padding} is shorter than the state word ({length})")]
    PaddingTooShort { padding: usize, length: usize },

    #[error("`{0}` has no factorisation over the family")]
    NoFactorisation(String),

    #[error("no unique greedy factorisation for `{word}`: {detail}")]
    AmbiguousMaximum { word: String, detail: String },

    #[error("unknown gallery entry `{0}`")]
    UnknownName(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn budget(budget: usize, context: impl Into<String>) -> Self {
        Error::BudgetExhausted {
            budget,
            context: context.into(),
        }
    }

    /// True for errors that mean "ran out of search budget" rather than
    /// "the input is wrong".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExhausted { .. }
                | Error::SweepBudgetExhausted(_)
                | Error::NotNormalising { .. }
        )
    }
}
