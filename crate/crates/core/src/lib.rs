//! Error-correcting codes built from k-resolving sets of graphs.
//!
//! A k-resolving set of a connected graph is an ordered vertex set such that
//! the distance vectors of any two distinct vertices differ in at least k
//! coordinates. Reading those distance vectors off as codewords yields a code
//! of minimum Hamming distance at least k, which can be decoded by scanning
//! the blocks of an uncovering (the complement view of a covering design)
//! until one avoids every error position.
//!
//! The crate is organised around that pipeline:
//!
//! - [`graphs`]: graph families (paths, cycles, grids, arbitrary connected
//!   graphs) and all-pairs shortest-path distances.
//! - [`resolving`]: verification of k-resolving sets, k-metric dimension
//!   (exact brute force at small scale plus closed-form constructions for the
//!   supported families).
//! - [`designs`]: covering designs and uncoverings — the Schönheim bound, a
//!   constant-size partition construction, exhaustive minimal coverings at
//!   tiny scale, and a greedy fallback.
//! - [`codec`]: code construction, encoding, uncovering-driven decoding, a
//!   nearest-neighbour reference decoder, and a seeded noisy channel.

pub mod codec;
pub mod designs;
pub mod graphs;
pub mod resolving;

pub use codec::{DecodeOutcome, DecodeResult, GraphCode, ReceivedWord};
pub use designs::{CoveringDesign, Uncovering};
pub use graphs::{DistanceMatrix, Family, Graph};
pub use resolving::{DimensionReport, ResolvingSet};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A parameter fell outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An edge list describes a graph that is not connected.
    #[error("graph is not connected")]
    DisconnectedGraph,

    /// The graph admits no k-resolving set for the requested k.
    #[error("no {k}-resolving set exists: {reason}")]
    NoKResolvingSet { k: usize, reason: String },

    /// The operation rejects this k even though a set might exist (paths
    /// with k < 3 give codes that cannot correct any error).
    #[error("unsupported k = {k}: {reason}")]
    UnsupportedK { k: usize, reason: String },

    /// A claimed resolving set failed verification; `(x, y)` is a vertex
    /// pair whose distance vectors differ in fewer than k positions.
    #[error("set is not {k}-resolving: vertices {x} and {y} differ in only {differing} positions")]
    NotKResolving {
        k: usize,
        x: usize,
        y: usize,
        differing: usize,
    },

    /// The partition construction needs a larger block size for these
    /// parameters.
    #[error("covering construction parameters below threshold: {0}")]
    ParametersBelowThreshold(String),

    /// Exhaustive search was asked to run beyond its configured cap.
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    /// No applicable construction produced a design for the parameters.
    #[error("no construction available: {0}")]
    ConstructionUnavailable(String),
}
