//! Scene documents: `{"version":1,"nodes":[...]}`.
//!
//! Only free-point coordinates and sphere radii are inputs; every other
//! node is rebuilt from its parents on load. Floats are written with the
//! shortest representation that reads back to the same bits.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SceneError};
use crate::node::{Color, Construction, NodeId, NodeKind, Vec3};
use crate::scene::{Scene, SceneConfig};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub version: u32,
    pub nodes: Vec<NodeRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeRecord {
    pub id: NodeId,
    pub kind: NodeKind,
    pub parents: Vec<NodeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub color: Color,
    pub valid: bool,
}

impl Scene {
    pub fn to_document(&self) -> Document {
        let nodes = self
            .nodes()
            .iter()
            .map(|n| NodeRecord {
                id: n.id,
                kind: n.kind,
                parents: n.parents.clone(),
                coords: n.geometry.point().map(Vec3::to_array),
                radius: match n.construction {
                    Construction::SphereCenterRadius(r) => Some(r),
                    _ => None,
                },
                color: n.color,
                valid: n.valid,
            })
            .collect();
        Document { version: DOCUMENT_VERSION, nodes }
    }

    /// Compact JSON text of the scene document.
    pub fn save_string(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("scene document serializes")
    }

    pub fn from_document(doc: &Document, config: SceneConfig) -> Result<Self> {
        if doc.version != DOCUMENT_VERSION {
            return Err(SceneError::Document(format!("unsupported version {}", doc.version)));
        }
        let mut scene = Scene::new(config);
        for rec in &doc.nodes {
            let bad = |reason: &str| SceneError::DocumentNode { id: rec.id, reason: reason.to_string() };
            if rec.id != scene.next_id() {
                return Err(bad("ids must be consecutive from 0"));
            }
            let construction = construction_of(rec).map_err(|r| bad(&r))?;
            let node_parents = match construction {
                Construction::Intersection { .. } => &rec.parents[..2],
                _ => &rec.parents[..],
            };
            for (k, &p) in node_parents.iter().enumerate() {
                if p >= rec.id {
                    return Err(bad("parents must precede the node"));
                }
                let kind = scene.node(p)?.kind;
                let ok = match (rec.kind, k) {
                    (NodeKind::DerivedPoint, 0) => kind == NodeKind::Sphere,
                    (NodeKind::DerivedPoint, _) => kind == NodeKind::Line,
                    _ => kind.is_point(),
                };
                if !ok {
                    return Err(bad(&format!("parent {p} has the wrong kind ({kind})")));
                }
            }
            scene.push_loaded(rec.kind, rec.parents.clone(), construction, rec.color);
        }
        Ok(scene)
    }

    pub fn load_str(text: &str, config: SceneConfig) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| SceneError::Document(e.to_string()))?;
        Self::from_document(&doc, config)
    }
}

fn construction_of(rec: &NodeRecord) -> std::result::Result<Construction, String> {
    let want = |n: usize| {
        if rec.parents.len() == n {
            Ok(())
        } else {
            Err(format!("{} needs {n} parents, found {}", rec.kind, rec.parents.len()))
        }
    };
    match rec.kind {
        NodeKind::FreePoint => {
            want(0)?;
            let c = rec.coords.ok_or("free point without coords")?;
            let x = Vec3::from_array(c);
            if !x.is_finite() {
                return Err("non-finite coords".into());
            }
            Ok(Construction::Free(x))
        }
        NodeKind::DerivedPoint => {
            want(3)?;
            match rec.parents[2] {
                b @ (0 | 1) => Ok(Construction::Intersection { branch: b as u8 }),
                b => Err(format!("branch must be 0 or 1, found {b}")),
            }
        }
        NodeKind::Line => want(2).map(|_| Construction::Line),
        NodeKind::Circle => want(3).map(|_| Construction::Circle),
        NodeKind::Sphere => match (rec.parents.len(), rec.radius) {
            (4, None) => Ok(Construction::SphereFourPoints),
            (1, Some(r)) if r > 0.0 && r.is_finite() => Ok(Construction::SphereCenterRadius(r)),
            (1, Some(_)) => Err("radius must be positive".into()),
            _ => Err("sphere needs 4 parents, or 1 parent and a radius".into()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scene() {
        assert_eq!(Scene::default().save_string(), r#"{"version":1,"nodes":[]}"#);
    }

    #[test]
    fn round_trip() {
        let mut s = Scene::default();
        let c = s.create_point(Vec3::new(0.1, 0.2, 0.30000000000000004)).unwrap();
        let sp = s.create_sphere_center_radius(c, 1.0 / 3.0).unwrap();
        let a = s.create_point(Vec3::new(-2.0, 0.2, 0.3)).unwrap();
        let b = s.create_point(Vec3::new(2.0, 0.2, 0.3)).unwrap();
        let l = s.create_line(a, b).unwrap();
        s.intersect(sp, l).unwrap();
        let text = s.save_string();
        let back = Scene::load_str(&text, SceneConfig::default()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.save_string(), text);
    }

    #[test]
    fn rejects_bad_documents() {
        let cfg = SceneConfig::default;
        assert!(Scene::load_str(r#"{"version":2,"nodes":[]}"#, cfg()).is_err());
        let e = Scene::load_str(
            r#"{"version":1,"nodes":[{"id":0,"kind":"line","parents":[],"color":"skyblue","valid":true}]}"#,
            cfg(),
        )
        .unwrap_err();
        assert!(e.to_string().contains("node 0"), "{e}");
        assert!(Scene::load_str(r#"{"version":1}"#, cfg()).is_err());
    }
}
