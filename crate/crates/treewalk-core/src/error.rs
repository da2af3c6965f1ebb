//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Anything that can go wrong while building trees or evaluating walk
/// statistics. Every variant names the offending input so callers can
/// surface a precise diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A tree on `n` vertices needs exactly `n - 1` edges.
    EdgeCount { expected: usize, actual: usize },
    /// Vertex label outside `0..n`.
    LabelOutOfRange { label: usize, n: usize },
    /// An edge `(v, v)`.
    SelfLoop { v: usize },
    /// The same edge listed twice (in either orientation).
    DuplicateEdge { u: usize, v: usize },
    /// Right edge count but the graph has a cycle / is disconnected.
    NotConnected,
    /// A Prüfer sequence for `n` vertices must have length `n - 2`.
    PrueferLength { expected: usize, actual: usize },
    /// The diameter of a single vertex is undefined here.
    SingleVertex,
    /// The two endpoints are not an edge of the tree.
    NotAnEdge { u: usize, v: usize },
    /// Operation requires at least `min` vertices.
    OrderTooSmall { min: usize, actual: usize },
    /// Monte Carlo estimation with zero walks.
    ZeroWalks,
    /// The tree is not a caterpillar.
    NotACaterpillar,
    /// A family parameter constraint was violated; the message names it.
    Family(String),
    /// `v` is not a leaf.
    NotALeaf { v: usize },
    /// The vertex sequence is not a path of the tree.
    NotAPath,
    /// The path can be extended at an endpoint, so it is not maximal.
    PathNotMaximal,
    /// The leaf to move lies on the path.
    LeafOnPath { v: usize },
    /// The leaf to move is already attached to the path.
    LeafAdjacentToPath { v: usize },
    /// No movable leaf hangs at spine position `i`.
    NoLeafAt { i: usize },
    /// Spine index outside the interior `1..d` (re-attaching at an endpoint
    /// would change the diameter).
    OffInterior { i: usize },
    /// The supplied spine decomposition does not belong to this tree.
    SpineMismatch,
    /// Source and destination of a leaf move coincide.
    SameVertex { v: usize },
    /// The leaf already sits at the requested attachment point.
    AlreadyAdjacent { leaf: usize, to: usize },
    /// Enumeration request above the configured cap.
    OverCap { n: usize, cap: usize },
    /// Requested diameter is impossible for the order.
    DiameterOutOfRange { d: usize, n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EdgeCount { expected, actual } => {
                write!(f, "expected {expected} edges, got {actual}")
            }
            Error::LabelOutOfRange { label, n } => {
                write!(f, "vertex label {label} out of range for order {n}")
            }
            Error::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::NotConnected => write!(f, "not a tree: cycle or disconnection"),
            Error::PrueferLength { expected, actual } => {
                write!(f, "Prüfer sequence must have length {expected}, got {actual}")
            }
            Error::SingleVertex => write!(f, "operation undefined on a single vertex"),
            Error::NotAnEdge { u, v } => write!(f, "({u}, {v}) is not an edge"),
            Error::OrderTooSmall { min, actual } => {
                write!(f, "need at least {min} vertices, got {actual}")
            }
            Error::ZeroWalks => write!(f, "cannot estimate from zero walks"),
            Error::NotACaterpillar => write!(f, "not a caterpillar"),
            Error::Family(msg) => write!(f, "family constraint violated: {msg}"),
            Error::NotALeaf { v } => write!(f, "vertex {v} is not a leaf"),
            Error::NotAPath => write!(f, "vertex sequence is not a path"),
            Error::PathNotMaximal => write!(f, "path is not maximal"),
            Error::LeafOnPath { v } => write!(f, "leaf {v} lies on the path"),
            Error::LeafAdjacentToPath { v } => {
                write!(f, "leaf {v} is already attached to the path")
            }
            Error::NoLeafAt { i } => write!(f, "no movable leaf at spine position {i}"),
            Error::OffInterior { i } => {
                write!(f, "spine index {i} is not in the interior of the spine")
            }
            Error::SpineMismatch => write!(f, "spine decomposition does not match the tree"),
            Error::SameVertex { v } => write!(f, "vertex {v} used as both source and target"),
            Error::AlreadyAdjacent { leaf, to } => {
                write!(f, "leaf {leaf} is already adjacent to {to}")
            }
            Error::OverCap { n, cap } => {
                write!(f, "order {n} exceeds the enumeration cap {cap}")
            }
            Error::DiameterOutOfRange { d, n } => {
                write!(f, "diameter {d} impossible for order {n}")
            }
        }
    }
}

impl core::error::Error for Error {}
