use thiserror::Error;

use crate::alphabet::BalanceKind;
use crate::codecs::Construction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} is not in the alphabet for q = {q}")]
    SymbolOutOfAlphabet { symbol: i64, q: u32 },

    #[error("no {kind} words of length {n} exist for q = {q}")]
    InfeasibleLength { kind: BalanceKind, n: usize, q: u32 },

    #[error("{construction} construction cannot be used with q = {q}, k = {k}: {reason}")]
    InfeasibleParams {
        construction: Construction,
        q: u32,
        k: usize,
        reason: &'static str,
    },

    #[error("CPB construction needs q >= 4; for q = {q} the PB codec already yields CPB codewords")]
    UsePbCodec { q: u32 },

    #[error("bivariate approximation is degenerate for q = {0} (correlation is 1)")]
    DegenerateCorrelation(u32),

    #[error("joint census for n = {n}, q = {q} exceeds the supported size (n <= {max_n})")]
    CapacityExceeded { n: usize, q: u32, max_n: usize },

    #[error("enumerating {q}^{n} words exceeds the brute-force budget of {budget}")]
    BudgetExceeded { n: usize, q: u32, budget: u64 },

    #[error("word is not {kind}")]
    NotBalanced { kind: BalanceKind },

    #[error("{what} {value} is out of range (must be below {bound})")]
    OutOfRange {
        what: &'static str,
        value: String,
        bound: String,
    },

    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("injected {what} does not balance the word")]
    InvalidInjection { what: &'static str },

    #[error("no balancing index found ({0}); this contradicts the construction's existence proof")]
    BalancingIndexMissing(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl ToString,
        bound: impl ToString,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
            bound: bound.to_string(),
        }
    }
}
