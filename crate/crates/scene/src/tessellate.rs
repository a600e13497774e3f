//! Display geometry: polylines for lines, circles and sphere nets, plus the
//! sphere poles used as pick handles.

use std::f64::consts::PI;

use conform_core::entities::{CircleParams, LineParams, SphereParams};
use conform_core::transforms::make_rotor_about;
use conform_core::{Result, Vector64};

use crate::node::{Geometry, Node, Vec3};
use crate::scene::SceneConfig;

/// Unit vector in the plane with normal `normal`, built from the coordinate
/// axis least aligned with it.
fn in_plane_direction(normal: Vec3) -> Vec3 {
    let a = normal.to_array().map(f64::abs);
    let k = (0..3).fold(0, |k, j| if a[j] < a[k] { j } else { k });
    let mut axis = [0.0; 3];
    axis[k] = 1.0;
    let axis = Vector64::from_array(axis);
    (axis - normal.scale(axis.dot(normal))).normalized().unwrap_or(axis)
}

/// `segments` points on the circle, obtained by rotating a seed point about
/// the circle's axis in equal angular steps.
pub fn tessellate_circle(c: &CircleParams<f64>, segments: usize) -> Result<Vec<Vec3>> {
    let seed = c.center + in_plane_direction(c.normal()).scale(c.radius);
    let step = 2.0 * PI / segments.max(1) as f64;
    (0..segments.max(1))
        .map(|k| make_rotor_about(c.plane, step * k as f64, c.center)?.apply_point(seed))
        .collect()
}

/// Poles at `center ± r e2`: north first.
pub fn sphere_poles(s: &SphereParams<f64>) -> [Vec3; 2] {
    let up = Vec3::new(0.0, s.radius, 0.0);
    [s.center + up, s.center - up]
}

/// Meridians from pole to pole and latitude rings around the vertical axis.
pub fn tessellate_sphere(s: &SphereParams<f64>, meridians: usize, latitudes: usize) -> Vec<Vec<Vec3>> {
    const ARC_STEPS: usize = 24;
    let ring_steps = 48;
    let at = |polar: f64, azimuth: f64| {
        let (sp, cp) = polar.sin_cos();
        let (sa, ca) = azimuth.sin_cos();
        s.center + Vec3::new(sp * ca, cp, sp * sa).scale(s.radius)
    };
    let mut lines = Vec::with_capacity(meridians + latitudes);
    for j in 0..meridians {
        let az = 2.0 * PI * j as f64 / meridians as f64;
        lines.push((0..=ARC_STEPS).map(|i| at(PI * i as f64 / ARC_STEPS as f64, az)).collect());
    }
    for i in 1..=latitudes {
        let polar = PI * i as f64 / (latitudes + 1) as f64;
        let mut ring: Vec<Vec3> = (0..ring_steps).map(|k| at(polar, 2.0 * PI * k as f64 / ring_steps as f64)).collect();
        ring.push(ring[0]);
        lines.push(ring);
    }
    lines
}

/// Displayed segment of a line: its defining points extended by `extension`
/// on each side.
pub fn line_segment(params: &LineParams<f64>, a: Vec3, b: Vec3, extension: f64) -> [Vec3; 2] {
    let (ta, tb) = (params.parameter_of(a), params.parameter_of(b));
    let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
    [params.point_at(lo - extension), params.point_at(hi + extension)]
}

/// World-space display geometry of one node.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Shape {
    pub point: Option<Vec3>,
    pub polylines: Vec<Vec<Vec3>>,
    pub poles: Vec<Vec3>,
}

pub fn shape_of(node: &Node, parents: &[Option<Vec3>], config: &SceneConfig) -> Shape {
    match &node.geometry {
        Geometry::Point(p) => Shape { point: Some(*p), ..Shape::default() },
        Geometry::Line { params, .. } => {
            let (Some(a), Some(b)) = (parents[0], parents[1]) else {
                return Shape::default();
            };
            Shape { polylines: vec![line_segment(params, a, b, config.line_extension).to_vec()], ..Shape::default() }
        }
        Geometry::Circle { params, .. } => {
            let mut ring = tessellate_circle(params, config.circle_segments).unwrap_or_default();
            if let Some(first) = ring.first().copied() {
                ring.push(first);
            }
            Shape { polylines: vec![ring], ..Shape::default() }
        }
        Geometry::Sphere { params, .. } => Shape {
            polylines: tessellate_sphere(params, config.sphere_meridians, config.sphere_latitudes),
            poles: sphere_poles(params).to_vec(),
            point: None,
        },
        Geometry::None => Shape::default(),
    }
}

impl crate::scene::Scene {
    /// Display geometry of node `id` (empty for unknown or invalid nodes).
    pub fn shape(&self, id: crate::node::NodeId) -> Shape {
        let Ok(node) = self.node(id) else {
            return Shape::default();
        };
        let parents: Vec<Option<Vec3>> = node
            .parent_nodes()
            .iter()
            .map(|&p| self.node(p).ok().and_then(|n| n.geometry.point()))
            .collect();
        shape_of(node, &parents, &self.config)
    }
}
