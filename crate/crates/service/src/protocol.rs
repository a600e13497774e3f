//! Message types of the newline-delimited JSON protocol.

use conform_scene::{Color, Node, NodeId, NodeKind, Panel, PanelProjection, PickTarget, Scene};
use serde::{Deserialize, Serialize};

pub const PROTOCOL_NAME: &str = "conform-sketch";
pub const PROTOCOL_VERSION: u32 = 1;

/// First line the server sends on every connection.
#[derive(Clone, Debug, Serialize)]
pub struct Hello {
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub protocol: &'static str,
    pub version: u32,
    pub panels: Vec<PanelProjection>,
}

impl Hello {
    pub fn for_scene(scene: &Scene) -> Self {
        Self {
            kind: "hello",
            protocol: PROTOCOL_NAME,
            version: PROTOCOL_VERSION,
            panels: vec![scene.config.view.front, scene.config.view.side],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub seq: u64,
    #[serde(flatten)]
    pub command: Command,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Command {
    CreatePoint {
        coords: [f64; 3],
    },
    CreateLine {
        points: [NodeId; 2],
    },
    CreateCircle {
        points: [NodeId; 3],
    },
    CreateSphere4 {
        points: [NodeId; 4],
    },
    CreateSphereCr {
        center: NodeId,
        radius: f64,
    },
    MovePoint {
        id: NodeId,
        coords: [f64; 3],
    },
    Pick {
        target: PickTarget,
        panel: Panel,
        pixel: [f64; 2],
        /// 1-based position of a picked point in the client's selection.
        #[serde(default)]
        ordinal: Option<usize>,
    },
    Intersect {
        sphere: NodeId,
        line: NodeId,
    },
    Snapshot,
    Save {
        #[serde(default)]
        path: Option<String>,
    },
    Load {
        #[serde(default)]
        document: Option<serde_json::Value>,
        #[serde(default)]
        path: Option<String>,
    },
}

/// Everything a client needs to redraw one node, in world coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeRender {
    pub id: NodeId,
    pub kind: NodeKind,
    pub parents: Vec<NodeId>,
    pub valid: bool,
    pub color: Color,
    pub front_color: Color,
    pub side_color: Color,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub polylines: Vec<Vec<[f64; 3]>>,
    pub poles: Vec<[f64; 3]>,
}

impl NodeRender {
    pub fn of(scene: &Scene, node: &Node) -> Self {
        let shape = scene.shape(node.id);
        let color = node.display_color();
        let radius = match node.construction {
            conform_scene::Construction::SphereCenterRadius(r) => Some(r),
            _ => None,
        };
        Self {
            id: node.id,
            kind: node.kind,
            parents: node.parents.clone(),
            valid: node.valid,
            color: node.color,
            front_color: color,
            side_color: color.in_side_panel(),
            coords: shape.point.map(|p| p.to_array()),
            radius,
            polylines: shape
                .polylines
                .iter()
                .map(|l| l.iter().map(|p| p.to_array()).collect())
                .collect(),
            poles: shape.poles.iter().map(|p| p.to_array()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Response,
    Error,
}

/// Reply to one request.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Event {
    #[serde(rename = "type")]
    pub kind: EventKind,
    pub in_reply_to: Option<u64>,
    pub ok: bool,
    /// All status lines joined by newlines.
    pub status: String,
    pub messages: Vec<String>,
    pub changed_nodes: Vec<NodeRender>,
    /// True when `changed_nodes` holds the whole scene.
    #[serde(default)]
    pub full: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub created: Vec<NodeId>,
    /// Pick result: node id or -1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selected: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub document: Option<serde_json::Value>,
}

impl Event {
    pub fn response(seq: u64, messages: Vec<String>, changed_nodes: Vec<NodeRender>) -> Self {
        Self {
            kind: EventKind::Response,
            in_reply_to: Some(seq),
            ok: true,
            status: messages.join("\n"),
            messages,
            changed_nodes,
            full: false,
            created: Vec::new(),
            selected: None,
            document: None,
        }
    }

    pub fn error(seq: Option<u64>, reason: String) -> Self {
        Self {
            kind: EventKind::Error,
            in_reply_to: seq,
            ok: false,
            status: reason.clone(),
            messages: vec![reason],
            changed_nodes: Vec::new(),
            full: false,
            created: Vec::new(),
            selected: None,
            document: None,
        }
    }
}
