//! Construction state and its dependency-driven reconstruction.

use conform_core::entities::{
    circle_params, circle_through, is_collinear, line_params, line_through, sphere_from_center_radius,
    sphere_params, sphere_through, PairDecomposition,
};
use conform_core::incidence::sphere_line_intersect;
use conform_core::Tolerance64;

use crate::error::{Result, SceneError};
use crate::messages;
use crate::node::{Construction, Geometry, Node, NodeId, NodeKind, Vec3};
use crate::view::View;

pub const DEFAULT_CIRCLE_SEGMENTS: usize = 64;
pub const DEFAULT_SPHERE_MERIDIANS: usize = 12;
pub const DEFAULT_SPHERE_LATITUDES: usize = 8;
/// World units a displayed line extends beyond each defining point.
pub const DEFAULT_LINE_EXTENSION: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SceneConfig {
    pub tolerance: Tolerance64,
    pub circle_segments: usize,
    pub sphere_meridians: usize,
    pub sphere_latitudes: usize,
    pub line_extension: f64,
    pub view: View,
}

impl Default for SceneConfig {
    fn default() -> Self {
        Self {
            tolerance: Tolerance64::default(),
            circle_segments: DEFAULT_CIRCLE_SEGMENTS,
            sphere_meridians: DEFAULT_SPHERE_MERIDIANS,
            sphere_latitudes: DEFAULT_SPHERE_LATITUDES,
            line_extension: DEFAULT_LINE_EXTENSION,
            view: View::default(),
        }
    }
}

/// Outcome of a sphere–line intersection command.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectOutcome {
    pub created: Vec<NodeId>,
    pub messages: Vec<String>,
}

/// Nodes in id order. Parents always have smaller ids than their children,
/// so id order is a topological order of the dependency graph.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Scene {
    nodes: Vec<Node>,
    pub config: SceneConfig,
}

impl Scene {
    pub fn new(config: SceneConfig) -> Self {
        Self { nodes: Vec::new(), config }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Result<&Node> {
        self.nodes.get(id).ok_or(SceneError::UnknownNode(id))
    }

    pub fn next_id(&self) -> NodeId {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn create_point(&mut self, x: Vec3) -> Result<NodeId> {
        if !x.is_finite() {
            return Err(SceneError::NonFinite);
        }
        Ok(self.push(NodeKind::FreePoint, Vec::new(), Construction::Free(x)))
    }

    pub fn create_line(&mut self, p1: NodeId, p2: NodeId) -> Result<NodeId> {
        self.create(NodeKind::Line, vec![p1, p2], Construction::Line)
    }

    pub fn create_circle(&mut self, p1: NodeId, p2: NodeId, p3: NodeId) -> Result<NodeId> {
        self.create(NodeKind::Circle, vec![p1, p2, p3], Construction::Circle)
    }

    pub fn create_sphere(&mut self, points: [NodeId; 4]) -> Result<NodeId> {
        self.create(NodeKind::Sphere, points.to_vec(), Construction::SphereFourPoints)
    }

    pub fn create_sphere_center_radius(&mut self, center: NodeId, radius: f64) -> Result<NodeId> {
        if radius <= 0.0 || !radius.is_finite() {
            return Err(SceneError::BadRadius(radius));
        }
        self.create(NodeKind::Sphere, vec![center], Construction::SphereCenterRadius(radius))
    }

    /// Intersects a sphere with a line, adding one derived point per real
    /// intersection (ordered along the line).
    pub fn intersect(&mut self, sphere: NodeId, line: NodeId) -> Result<IntersectOutcome> {
        self.expect_kind(sphere, NodeKind::Sphere, "sphere")?;
        self.expect_kind(line, NodeKind::Line, "line")?;
        let count = self.intersection_points(sphere, line)?.count();
        let mut created = Vec::new();
        for branch in 0..count.min(2) as u8 {
            let id = self.push(
                NodeKind::DerivedPoint,
                vec![sphere, line, branch as NodeId],
                Construction::Intersection { branch },
            );
            created.push(id);
        }
        let status = match count {
            2 => messages::TWO_POINTS,
            1 => messages::ONE_POINT,
            _ => messages::NO_INTERSECTION,
        };
        Ok(IntersectOutcome {
            created,
            messages: vec![status.to_string(), messages::SELECT_NEW_LINE.to_string()],
        })
    }

    /// Moves a free point and recomputes every node that depends on it.
    /// Returns the ids of all recomputed nodes, the moved point first.
    pub fn move_point(&mut self, id: NodeId, x: Vec3) -> Result<Vec<NodeId>> {
        let node = self.node(id)?;
        if node.kind != NodeKind::FreePoint {
            return Err(SceneError::NotFreePoint(id));
        }
        if !x.is_finite() {
            return Err(SceneError::NonFinite);
        }
        self.nodes[id].construction = Construction::Free(x);
        self.nodes[id].geometry = Geometry::Point(x);
        let mut dirty = vec![false; self.nodes.len()];
        dirty[id] = true;
        let mut changed = vec![id];
        for k in id + 1..self.nodes.len() {
            if self.nodes[k].parent_nodes().iter().any(|&p| dirty[p]) {
                dirty[k] = true;
                self.refresh(k);
                changed.push(k);
            }
        }
        Ok(changed)
    }

    /// Recomputes every node in the given order, which must be a
    /// topological order of the dependency graph.
    pub fn recompute_in_order(&mut self, order: &[NodeId]) {
        for &k in order {
            self.refresh(k);
        }
    }

    pub fn recompute_all(&mut self) {
        for k in 0..self.nodes.len() {
            self.refresh(k);
        }
    }

    fn refresh(&mut self, k: NodeId) {
        let node = &self.nodes[k];
        match self.evaluate(node.kind, &node.parents, &node.construction) {
            Ok(g) => {
                self.nodes[k].geometry = g;
                self.nodes[k].valid = true;
            }
            Err(_) => {
                self.nodes[k].geometry = Geometry::None;
                self.nodes[k].valid = false;
            }
        }
    }

    fn push(&mut self, kind: NodeKind, parents: Vec<NodeId>, construction: Construction) -> NodeId {
        let id = self.nodes.len();
        let geometry = match &construction {
            Construction::Free(x) => Geometry::Point(*x),
            _ => Geometry::None,
        };
        self.nodes.push(Node {
            id,
            kind,
            parents,
            construction,
            color: kind.default_color(),
            valid: true,
            geometry,
        });
        self.refresh(id);
        id
    }

    fn create(&mut self, kind: NodeKind, parents: Vec<NodeId>, construction: Construction) -> Result<NodeId> {
        for &p in &parents {
            let node = self.node(p)?;
            if !node.kind.is_point() {
                return Err(SceneError::WrongKind { id: p, expected: "point", found: node.kind });
            }
        }
        self.evaluate(kind, &parents, &construction)?;
        Ok(self.push(kind, parents, construction))
    }

    fn expect_kind(&self, id: NodeId, kind: NodeKind, name: &'static str) -> Result<&Node> {
        let node = self.node(id)?;
        if node.kind != kind {
            return Err(SceneError::WrongKind { id, expected: name, found: node.kind });
        }
        Ok(node)
    }

    fn point_of(&self, id: NodeId) -> Result<Vec3> {
        let node = self.node(id)?;
        if !node.kind.is_point() {
            return Err(SceneError::WrongKind { id, expected: "point", found: node.kind });
        }
        node.geometry.point().ok_or(SceneError::InvalidParent(id))
    }

    fn intersection_points(&self, sphere: NodeId, line: NodeId) -> Result<PairDecomposition<f64>> {
        let tol = self.config.tolerance;
        let (Geometry::Sphere { blade: s, .. }, Geometry::Line { blade: l, .. }) =
            (&self.node(sphere)?.geometry, &self.node(line)?.geometry)
        else {
            let bad = if self.node(sphere)?.valid { line } else { sphere };
            return Err(SceneError::InvalidParent(bad));
        };
        let r = sphere_line_intersect(s, l, tol).map_err(|e| self.construction_error(NodeKind::DerivedPoint, &[sphere, line], e))?;
        Ok(r.points)
    }

    fn construction_error(&self, kind: NodeKind, parents: &[NodeId], e: impl ToString) -> SceneError {
        SceneError::Construction { kind, parents: parents.to_vec(), reason: e.to_string() }
    }

    /// Builds a node's geometry from its parents' current geometry.
    fn evaluate(&self, kind: NodeKind, parents: &[NodeId], construction: &Construction) -> Result<Geometry> {
        let tol = self.config.tolerance;
        let fail = |e: conform_core::Error| self.construction_error(kind, parents, e);
        let points = |ids: &[NodeId]| ids.iter().map(|&p| self.point_of(p)).collect::<Result<Vec<_>>>();
        match construction {
            Construction::Free(x) => Ok(Geometry::Point(*x)),
            Construction::Line => {
                let p = points(parents)?;
                let blade = line_through(p[0], p[1], tol).map_err(fail)?;
                let params = line_params(&blade, tol).map_err(fail)?;
                Ok(Geometry::Line { blade, params })
            }
            Construction::Circle => {
                let p = points(parents)?;
                if is_collinear(p[0], p[1], p[2], tol) {
                    return Err(self.construction_error(kind, parents, "points are collinear"));
                }
                let blade = circle_through(p[0], p[1], p[2], tol).map_err(fail)?;
                let params = circle_params(&blade, tol).map_err(fail)?;
                Ok(Geometry::Circle { blade, params })
            }
            Construction::SphereFourPoints => {
                let p = points(parents)?;
                let blade = sphere_through([p[0], p[1], p[2], p[3]], tol).map_err(fail)?;
                let params = sphere_params(&blade, tol).map_err(fail)?;
                Ok(Geometry::Sphere { blade, params })
            }
            Construction::SphereCenterRadius(r) => {
                let c = self.point_of(parents[0])?;
                let blade = sphere_from_center_radius(c, *r).map_err(fail)?;
                let params = sphere_params(&blade, tol).map_err(fail)?;
                Ok(Geometry::Sphere { blade, params })
            }
            Construction::Intersection { branch } => {
                let pts = self.intersection_points(parents[0], parents[1])?;
                let p = match (pts, branch) {
                    (PairDecomposition::Two(p), b) => p[*b as usize],
                    (PairDecomposition::Tangent(p), 0) => p,
                    _ => return Err(self.construction_error(kind, parents, "intersection point does not exist")),
                };
                Ok(Geometry::Point(p))
            }
        }
    }

    /// Re-adds a node read from a document, checking it against the graph.
    pub(crate) fn push_loaded(
        &mut self,
        kind: NodeKind,
        parents: Vec<NodeId>,
        construction: Construction,
        color: crate::node::Color,
    ) -> NodeId {
        let id = self.push(kind, parents, construction);
        self.nodes[id].color = color;
        id
    }
}
