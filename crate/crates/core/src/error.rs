use alloc::string::String;

/// Errors raised by the lattice, enumeration and interpolation routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A class does not live on the surface it was paired on.
    #[error("structural mismatch: {0}")]
    Structure(String),
    /// Checked lattice arithmetic left the `i64` range.
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    /// An internal identity failed; signals a malformed lattice or a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The inputs fall outside the range where the requested method applies.
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),
    /// Enumeration bounds are missing, too small or could not be derived.
    #[error("incomplete enumeration bounds: {0}")]
    Bounds(String),
    /// Random point sampling kept producing coincident points or fibers.
    #[error("degenerate point sample after {0} attempts")]
    DegenerateSample(u32),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
