//! Graphs, graphical building sets, and the restriction / removal /
//! component operations used by the facet recursion.
//!
//! Ground elements are 0-based throughout the library; serialization
//! reports 1-based labels.

mod bits;
mod building_set;
mod classes;
mod graph;
mod key;
mod perm;

use thiserror::Error;

pub use building_set::{BuildingSet, MAX_GRAPHICAL_NODES};
pub use classes::{connected_graph_classes, graph_classes, labelled_graphs, MAX_CLASS_NODES};
pub use graph::{Graph, MAX_GRAPH_NODES};
pub use key::{CanonicalKey, KeyMode, MAX_ISO_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {u}-{v} out of range for {n} nodes")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("graph with {0} nodes exceeds the supported size")]
    TooManyNodes(usize),
    #[error("cannot parse graph spec {0:?}")]
    Parse(String),
}

/// First failure found when checking the building-set axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty member")]
    EmptyMember,
    #[error("member {0:?} leaves the ground set")]
    OutsideGround(Vec<usize>),
    #[error("singleton {{{0}}} missing")]
    MissingSingleton(usize),
    #[error("{first:?} and {second:?} intersect but their union is missing")]
    MissingUnion { first: Vec<usize>, second: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildingSetError {
    #[error("invalid building set: {0}")]
    Invalid(Violation),
    #[error("label {0} is not in the ground set")]
    UnknownLabel(usize),
    #[error("ground of {0} elements exceeds the enumeration bound")]
    GroundTooLarge(usize),
    #[error("{0:?} is not a member of the building set")]
    NotAMember(Vec<usize>),
    #[error("cannot remove the whole ground set")]
    RemovesEverything,
    #[error("building set is not connected")]
    Disconnected,
}
