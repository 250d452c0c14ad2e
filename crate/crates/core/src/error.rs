use crate::engine::Checkpoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("generator matrix is rank deficient: rank {rank} < k = {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("invalid dimensions: k = {k}, n = {n} (need 0 < k <= n)")]
    InvalidDimensions { k: usize, n: usize },

    #[error("invalid arity: {what} (g = {g}, k = {k})")]
    InvalidArity {
        g: usize,
        k: usize,
        what: &'static str,
    },

    #[error("binomial coefficient C({p}, {q}) does not fit in 128 bits")]
    Overflow { p: u64, q: u64 },

    #[error("rank {rank} out of range for C({k}, {g}) combinations")]
    OutOfRange { k: usize, g: usize, rank: u128 },

    #[error("invalid combination {indices:?} over universe {universe}")]
    InvalidCombination {
        indices: Vec<usize>,
        universe: usize,
    },

    #[error("column {column} out of range for length {n}")]
    InvalidColumn { column: usize, n: usize },

    #[error("saved-additions store needs {required} bytes, budget is {budget} bytes")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("brute force over 2^{k} messages exceeds the limit k <= {max_k}")]
    TooLarge { k: usize, max_k: usize },

    #[error("polynomial does not divide x^{m} - 1")]
    NotADivisor { m: usize },

    #[error("polynomial is not a unit in F2[x]/(x^{m} - 1)")]
    NotAUnit { m: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Script {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("interrupted before g = {}", .0.next_g)]
    Interrupted(Box<Checkpoint>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
