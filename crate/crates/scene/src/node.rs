use std::fmt;

use conform_core::entities::{CircleOrLine, CircleParams, LineParams, SphereOrPlane, SphereParams};
use serde::{Deserialize, Serialize};

pub type NodeId = usize;
pub type Vec3 = conform_core::Vector64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    FreePoint,
    DerivedPoint,
    Line,
    Circle,
    Sphere,
}

impl NodeKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::FreePoint => "free_point",
            Self::DerivedPoint => "derived_point",
            Self::Line => "line",
            Self::Circle => "circle",
            Self::Sphere => "sphere",
        }
    }

    pub fn is_point(self) -> bool {
        matches!(self, Self::FreePoint | Self::DerivedPoint)
    }

    pub fn default_color(self) -> Color {
        match self {
            Self::FreePoint => Color::Blue,
            Self::DerivedPoint => Color::DarkBlue,
            Self::Line => Color::SkyBlue,
            Self::Circle => Color::Red,
            Self::Sphere => Color::Yellow,
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Green,
    DarkBlue,
    DarkGreen,
    SkyBlue,
    Red,
    Yellow,
    Gray,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Self::Blue => "blue",
            Self::Green => "green",
            Self::DarkBlue => "darkblue",
            Self::DarkGreen => "darkgreen",
            Self::SkyBlue => "skyblue",
            Self::Red => "red",
            Self::Yellow => "yellow",
            Self::Gray => "gray",
        }
    }

    /// Points use a second color in the side panel.
    pub fn in_side_panel(self) -> Self {
        match self {
            Self::Blue => Self::Green,
            Self::DarkBlue => Self::DarkGreen,
            c => c,
        }
    }
}

/// Computed geometry of a node; `None` while the node is invalid.
#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Point(Vec3),
    Line { blade: CircleOrLine<f64>, params: LineParams<f64> },
    Circle { blade: CircleOrLine<f64>, params: CircleParams<f64> },
    Sphere { blade: SphereOrPlane<f64>, params: SphereParams<f64> },
    None,
}

impl Geometry {
    pub fn point(&self) -> Option<Vec3> {
        match self {
            Self::Point(p) => Some(*p),
            _ => None,
        }
    }
}

/// How a node is built from its parents. Free points carry their own
/// coordinates; everything else is recomputed from `parents`.
#[derive(Clone, Debug, PartialEq)]
pub enum Construction {
    Free(Vec3),
    Line,
    Circle,
    SphereFourPoints,
    SphereCenterRadius(f64),
    Intersection { branch: u8 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub parents: Vec<NodeId>,
    pub construction: Construction,
    pub color: Color,
    pub valid: bool,
    pub geometry: Geometry,
}

impl Node {
    /// Parents that are nodes; a derived point's branch index is excluded.
    pub fn parent_nodes(&self) -> &[NodeId] {
        match self.construction {
            Construction::Intersection { .. } => &self.parents[..2],
            _ => &self.parents,
        }
    }

    pub fn display_color(&self) -> Color {
        if self.valid {
            self.color
        } else {
            Color::Gray
        }
    }
}
