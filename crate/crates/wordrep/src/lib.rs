//! Finite binary languages interpreted as graph classes.
//!
//! A 0-1-symmetric finite language `L` over `{0,1}` represents a graph on the
//! alphabet of a word `w`: two letters `u`, `v` are adjacent iff the
//! projection of `w` onto `{u,v}` (with `u` read as `0` and `v` as `1`) is a
//! member of `L`.  This crate materializes the language families that arise
//! from classical geometric intersection models (multi-interval, track, box,
//! trapezoid, point-interval triangle, circular-arc, circle-gon, poset
//! order), decodes words into labeled graphs, round-trips geometric models
//! through words, and measures the speed (labeled-graph count per vertex
//! count) of each class exhaustively at small `n`.

pub mod census;
pub mod geometry;
pub mod graphs;
pub mod languages;
pub mod letters;
pub mod verify;
pub mod words;

pub use graphs::LabeledGraph;
pub use languages::FiniteLanguage;
pub use words::{BinaryWord, Letter, VertexWord};

/// Errors shared across the crate.
///
/// The CLI maps these onto exit codes: invalid arguments / parse failures
/// are usage errors (2), capacity and budget overruns are capacity errors (3).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("degenerate model: {0}")]
    DegenerateModel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
