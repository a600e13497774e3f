use thiserror::Error;

use crate::node::{NodeId, NodeKind};

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("node {0} does not exist")]
    UnknownNode(NodeId),
    #[error("node {id} is a {found}, expected {expected}")]
    WrongKind {
        id: NodeId,
        expected: &'static str,
        found: NodeKind,
    },
    #[error("node {0} is invalid in the current configuration")]
    InvalidParent(NodeId),
    #[error("cannot build {kind} from nodes {parents:?}: {reason}")]
    Construction {
        kind: NodeKind,
        parents: Vec<NodeId>,
        reason: String,
    },
    #[error("node {0} is not a free point; derived points follow their parents")]
    NotFreePoint(NodeId),
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("scene document: {0}")]
    Document(String),
    #[error("scene document, node {id}: {reason}")]
    DocumentNode { id: NodeId, reason: String },
    #[error("line {line}: {reason}")]
    Script { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = SceneError> = std::result::Result<T, E>;
