use thiserror::Error;

/// Errors surfaced by the library. Identity check failures are *not* errors;
/// they are reported as data in [`crate::catalog::CheckOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A seed pair `(0, 0)` does not define a sequence.
    #[error("invalid seed: (0, 0) does not define a sequence")]
    InvalidSeed,

    /// Binomial coefficient arguments outside `0 <= j <= k`.
    #[error("binomial C({k}, {j}) out of range: require 0 <= j <= k")]
    OutOfRange { k: i64, j: i64 },

    /// A recurrence frame entry (`h`, `f1`, or `f2`) is zero where the
    /// transform lemmas require it nonzero.
    #[error("recurrence frame entry `{entry}` is zero")]
    ZeroFrameEntry { entry: &'static str },

    /// A reciprocal-sum term has a zero denominator factor. Carries the first
    /// offending summation index `j` and the sequence index whose value is zero.
    #[error("singular summand at j = {j}: sequence value at index {index} is zero")]
    SingularSummand { j: u32, index: i64 },

    /// The requested index lies outside the oracle's configured window.
    #[error("index {n} exceeds the oracle window of {window}")]
    WindowExceeded { n: i64, window: u64 },

    /// No identity with the given key is registered.
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    /// A grid specification failed validation.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
