//! World-to-pixel maps for the front and side panels.
//!
//! Both panels share the vertical axis (world y), so a point appears at the
//! same height in each.

use serde::{Deserialize, Serialize};

use crate::node::Vec3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Panel {
    /// Horizontal axis is world x.
    Front,
    /// Horizontal axis is world z.
    Side,
}

impl Panel {
    pub const ALL: [Panel; 2] = [Panel::Front, Panel::Side];

    pub fn name(self) -> &'static str {
        match self {
            Self::Front => "front",
            Self::Side => "side",
        }
    }

    pub fn horizontal_axis(self) -> &'static str {
        match self {
            Self::Front => "x",
            Self::Side => "z",
        }
    }
}

/// Uniform scale plus offset: `px = origin.0 + scale * h`, `py = origin.1 - scale * y`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PanelProjection {
    pub panel: Panel,
    pub width: f64,
    pub height: f64,
    pub scale: f64,
    pub origin: [f64; 2],
    pub horizontal: &'static str,
    pub vertical: &'static str,
}

pub const DEFAULT_PANEL_SIZE: f64 = 400.0;
pub const DEFAULT_PIXELS_PER_UNIT: f64 = 40.0;

impl PanelProjection {
    pub fn new(panel: Panel, size: f64, scale: f64) -> Self {
        Self {
            panel,
            width: size,
            height: size,
            scale,
            origin: [size / 2.0, size / 2.0],
            horizontal: panel.horizontal_axis(),
            vertical: "y",
        }
    }

    fn horizontal_of(&self, p: Vec3) -> f64 {
        match self.panel {
            Panel::Front => p.x,
            Panel::Side => p.z,
        }
    }

    pub fn to_pixel(&self, p: Vec3) -> [f64; 2] {
        [self.origin[0] + self.scale * self.horizontal_of(p), self.origin[1] - self.scale * p.y]
    }

    /// World `(horizontal, vertical)` coordinates under a pixel.
    pub fn from_pixel(&self, px: [f64; 2]) -> [f64; 2] {
        [(px[0] - self.origin[0]) / self.scale, (self.origin[1] - px[1]) / self.scale]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct View {
    pub front: PanelProjection,
    pub side: PanelProjection,
}

impl Default for View {
    fn default() -> Self {
        Self {
            front: PanelProjection::new(Panel::Front, DEFAULT_PANEL_SIZE, DEFAULT_PIXELS_PER_UNIT),
            side: PanelProjection::new(Panel::Side, DEFAULT_PANEL_SIZE, DEFAULT_PIXELS_PER_UNIT),
        }
    }
}

impl View {
    pub fn panel(&self, panel: Panel) -> &PanelProjection {
        match panel {
            Panel::Front => &self.front,
            Panel::Side => &self.side,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_vertical() {
        let v = View::default();
        let p = Vec3::new(1.0, 2.0, -3.0);
        assert_eq!(v.front.to_pixel(p), [240.0, 120.0]);
        assert_eq!(v.side.to_pixel(p), [80.0, 120.0]);
        assert_eq!(v.front.from_pixel([240.0, 120.0]), [1.0, 2.0]);
    }
}
