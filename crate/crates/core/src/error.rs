use thiserror::Error;

/// Errors shared across the library.
///
/// Functions state their preconditions; violating one yields a specific
/// variant rather than a panic so that callers (CLI, bindings) can map
/// failures to exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index out of range: {0}")]
    VertexOutOfRange(String),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entry {0} not allowed here")]
    BadEntry(i64),
    #[error("graph sides are unbalanced: |A| = {0}, |B| = {1}")]
    UnbalancedSides(usize, usize),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a matching: vertex reused by ({0}, {1})")]
    NotAMatching(usize, usize),
    #[error("matching is not perfect")]
    MatchingNotPerfect,
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("orientation domain does not match the edge set")]
    OrientationDomainMismatch,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not the Heawood graph")]
    NotHeawood,
    #[error("graph is not a brace")]
    NotABrace,
    #[error("graph is not 1-extendable")]
    NotOneExtendable,
    #[error("not a trisector of this graph")]
    NotATrisector,
    #[error("no vertex flip aligns the orientations on the shared circuit")]
    NoAligningFlip,
    #[error("spliced orientation failed the perfect-matching sign self-check")]
    SpliceSelfCheck,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
