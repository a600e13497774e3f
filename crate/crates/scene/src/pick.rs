//! 2D picking in panel pixel coordinates.

use serde::{Deserialize, Serialize};

use crate::messages;
use crate::node::{NodeId, NodeKind};
use crate::scene::Scene;
use crate::view::Panel;

/// A click within this many pixels of a displayed line selects it.
pub const LINE_PICK_PIXELS: f64 = 3.0;
/// A click within this many pixels of a sphere pole selects the sphere.
pub const POLE_PICK_PIXELS: f64 = 5.0;
/// A click within this many pixels of a point disk selects the point.
pub const POINT_PICK_PIXELS: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PickTarget {
    Line,
    Sphere,
    Point,
}

fn distance_to_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (qx, qy) = (a[0] + t * dx - p[0], a[1] + t * dy - p[1]);
    (qx * qx + qy * qy).sqrt()
}

fn distance(p: [f64; 2], q: [f64; 2]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

/// Nearest candidate within `limit` pixels; ties go to the lower id.
fn nearest(candidates: impl Iterator<Item = (NodeId, f64)>, limit: f64) -> Option<NodeId> {
    let mut best: Option<(NodeId, f64)> = None;
    for (id, d) in candidates {
        if d <= limit && best.is_none_or(|(_, bd)| d < bd) {
            best = Some((id, d));
        }
    }
    best.map(|(id, _)| id)
}

impl Scene {
    fn valid_of_kind(&self, kind: NodeKind) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().iter().filter(move |n| n.valid && n.kind == kind).map(|n| n.id)
    }

    pub fn pick_line(&self, panel: Panel, pixel: [f64; 2]) -> Option<NodeId> {
        let proj = *self.config.view.panel(panel);
        let candidates = self.valid_of_kind(NodeKind::Line).filter_map(|id| {
            let shape = self.shape(id);
            let seg = shape.polylines.first()?;
            Some((id, distance_to_segment(pixel, proj.to_pixel(seg[0]), proj.to_pixel(seg[1]))))
        });
        nearest(candidates, LINE_PICK_PIXELS)
    }

    pub fn pick_sphere(&self, panel: Panel, pixel: [f64; 2]) -> Option<NodeId> {
        let proj = *self.config.view.panel(panel);
        let candidates = self.valid_of_kind(NodeKind::Sphere).flat_map(|id| {
            self.shape(id).poles.into_iter().map(move |p| (id, distance(pixel, proj.to_pixel(p))))
        });
        nearest(candidates, POLE_PICK_PIXELS)
    }

    pub fn pick_point(&self, panel: Panel, pixel: [f64; 2]) -> Option<NodeId> {
        let proj = *self.config.view.panel(panel);
        let candidates = self
            .nodes()
            .iter()
            .filter(|n| n.valid && n.kind.is_point())
            .filter_map(|n| Some((n.id, distance(pixel, proj.to_pixel(n.geometry.point()?)))));
        nearest(candidates, POINT_PICK_PIXELS)
    }

    /// Picks and returns the status lines for the selection. `ordinal` is
    /// the 1-based position of a point in the client's current selection.
    pub fn pick(&self, target: PickTarget, panel: Panel, pixel: [f64; 2], ordinal: Option<usize>) -> (Option<NodeId>, Vec<String>) {
        match target {
            PickTarget::Line => {
                let id = self.pick_line(panel, pixel);
                let mut msgs = vec![messages::line_selected(id)];
                if id.is_some() {
                    msgs.push(messages::SELECT_SPHERE.to_string());
                }
                (id, msgs)
            }
            PickTarget::Sphere => {
                let id = self.pick_sphere(panel, pixel);
                (id, vec![messages::sphere_selected(id)])
            }
            PickTarget::Point => {
                let id = self.pick_point(panel, pixel);
                let msgs = match (id, ordinal) {
                    (Some(_), Some(k)) => vec![messages::point_chosen(k)],
                    _ => Vec::new(),
                };
                (id, msgs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::node::Vec3;

    fn scene_with_line() -> Scene {
        let mut s = Scene::default();
        let a = s.create_point(Vec3::new(-1.0, 0.0, 0.0)).unwrap();
        let b = s.create_point(Vec3::new(1.0, 0.0, 0.0)).unwrap();
        s.create_line(a, b).unwrap();
        s
    }

    #[test]
    fn line_threshold_boundary() {
        let s = scene_with_line();
        // The line y = 0 sits on pixel row 200.
        assert_eq!(s.pick_line(Panel::Front, [250.0, 203.0]), Some(2));
        assert_eq!(s.pick_line(Panel::Front, [250.0, 203.5]), None);
        let (id, msgs) = s.pick(PickTarget::Line, Panel::Front, [250.0, 210.0], None);
        assert_eq!(id, None);
        assert_eq!(msgs, vec!["Line No. -1 selected."]);
    }

    #[test]
    fn pole_threshold_boundary() {
        let mut s = Scene::default();
        let c = s.create_point(Vec3::new(0.0, 0.0, 0.0)).unwrap();
        let sp = s.create_sphere_center_radius(c, 1.0).unwrap();
        // North pole at (200, 160) in the front panel.
        assert_eq!(s.pick_sphere(Panel::Front, [200.0, 155.0]), Some(sp));
        assert_eq!(s.pick_sphere(Panel::Front, [203.0, 164.0]), Some(sp));
        assert_eq!(s.pick_sphere(Panel::Front, [200.0, 154.9]), None);
        assert_eq!(s.pick_sphere(Panel::Front, [240.0, 200.0]), None);
    }
}
