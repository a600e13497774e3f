//! Sketch scene: free points, the lines, circles and spheres built on them,
//! and sphere–line intersection points, kept consistent as points move.
//!
//! Also provides display tessellation, panel picking, JSON persistence, a
//! small script language and SVG export.

pub mod error;
pub mod messages;
pub mod node;
pub mod persist;
pub mod pick;
pub mod scene;
pub mod script;
pub mod svg;
pub mod tessellate;
pub mod view;

pub use error::{Result, SceneError};
pub use node::{Color, Construction, Geometry, Node, NodeId, NodeKind, Vec3};
pub use persist::{Document, NodeRecord, DOCUMENT_VERSION};
pub use pick::PickTarget;
pub use scene::{IntersectOutcome, Scene, SceneConfig};
pub use script::Interpreter;
pub use view::{Panel, PanelProjection, View};
