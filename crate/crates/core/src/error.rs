use thiserror::Error;

/// Errors produced by quandle construction, representation checks, and the
/// decomposition pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input violated a contract it was required to satisfy (for example a
    /// non-Hermitian matrix passed to the Hermitian eigensolver).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Matrix dimensions do not match the operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A quandle axiom failed on the given table.
    #[error("quandle axiom failure: {0}")]
    Axiom(String),

    /// Generator images do not define a group representation.
    #[error("relation violation: {0}")]
    Relation(String),

    /// The random-commutant splitter kept drawing degenerate elements.
    #[error("decomposition failed: {0}")]
    Decomposition(String),

    /// A component could not be matched to a catalog label.
    #[error("labeling failure: {0}")]
    Labeling(String),

    /// Report (de)serialization failed.
    #[error("report error: {0}")]
    Report(String),
}
