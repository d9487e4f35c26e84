//! Premaniplexes, voltage operators, and the product `X ⋊ Y`.
//!
//! A premaniplex is a properly n-edge-colored n-valent dart graph in which
//! every two-color alternating 4-path with non-consecutive colors closes.
//! Flag graphs of polytopes and symmetry type graphs are the motivating
//! instances.  A voltage operator is a premaniplex whose darts carry words of
//! the rank-n universal string Coxeter group; applying it to an n-premaniplex
//! yields the derived product, which subsumes the classical medial,
//! truncation, pyramid, prism, snub and related operations.
//!
//! The crate exposes:
//! - [`words`]: canonical word arithmetic in the universal string Coxeter
//!   group (equivalently the monodromy group of the universal maniplex),
//! - [`premaniplex`]: the dart-graph type, validation, sections, components
//!   and isomorphism search,
//! - [`mapspec`]: rank-3 combinatorial maps used to build flag graphs,
//! - [`symmetry`]: automorphism groups, quotients and symmetry type graphs,
//! - [`voltage`]: voltage operators, products, composition, derived graphs,
//! - [`catalog`]: builders for the classical operators and sample maniplexes,
//! - [`pmxfile`] and [`dot`]: the PMX file format and DOT export.

pub mod catalog;
pub mod dot;
pub mod mapspec;
pub mod perm;
pub mod pmxfile;
pub mod premaniplex;
pub mod symmetry;
pub mod voltage;
pub mod words;

pub use premaniplex::{Premaniplex, RootedPremaniplex, Violation};
pub use voltage::{FinVoltagePremaniplex, VoltageOperator};
pub use words::GroupWord;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("generator {letter} out of range for rank {rank}")]
    InvalidGenerator { letter: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("vertex {vertex} out of range ({count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("adjacency shape is inconsistent: {0}")]
    BadShape(String),
    #[error("invalid premaniplex: {0}")]
    InvalidPremaniplex(Violation),
    #[error("invalid voltage assignment: {0}")]
    InvalidVoltages(voltage::VoltageViolation),
    #[error("premaniplex is not connected")]
    Disconnected,
    #[error("section bounds k={k}, l={l} invalid for rank {rank}")]
    BadSection { k: isize, l: isize, rank: usize },
    #[error("generator {index} is not an automorphism")]
    NotAutomorphism { index: usize },
    #[error("premaniplex is not regular: no automorphism moves the base along color {color}")]
    NotRegular { color: usize },
    #[error("inconsistent map data: {0}")]
    BadMap(String),
    #[error("voltage group closure exceeded the bound of {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("operators have mismatched underlying graphs")]
    MismatchedOperators,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
