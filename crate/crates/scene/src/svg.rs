//! Two-panel SVG export: front view on the left, side view on the right.

use std::fmt::Write;

use crate::node::{Color, NodeKind};
use crate::scene::Scene;
use crate::view::{Panel, PanelProjection};

const POINT_RADIUS: f64 = 4.0;
const POLE_RADIUS: f64 = 2.5;

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn polyline(out: &mut String, pts: &[[f64; 2]], color: Color) {
    let coords: Vec<String> = pts.iter().map(|p| format!("{},{}", num(p[0]), num(p[1]))).collect();
    let _ = writeln!(
        out,
        r#"    <polyline points="{}" fill="none" stroke="{}" stroke-width="1"/>"#,
        coords.join(" "),
        color.name()
    );
}

fn disk(out: &mut String, p: [f64; 2], r: f64, color: Color) {
    let _ = writeln!(
        out,
        r#"    <circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
        num(p[0]),
        num(p[1]),
        num(r),
        color.name()
    );
}

fn panel(out: &mut String, scene: &Scene, proj: &PanelProjection, x_offset: f64) {
    let _ = writeln!(
        out,
        r#"  <g id="{}" transform="translate({},0)">"#,
        proj.panel.name(),
        num(x_offset)
    );
    let _ = writeln!(
        out,
        r#"    <rect x="0" y="0" width="{}" height="{}" fill="white" stroke="black"/>"#,
        num(proj.width),
        num(proj.height)
    );
    // Entities first so point disks stay on top.
    for pass_points in [false, true] {
        for node in scene.nodes() {
            if node.kind.is_point() != pass_points {
                continue;
            }
            let shape = scene.shape(node.id);
            let mut color = node.display_color();
            if proj.panel == Panel::Side {
                color = color.in_side_panel();
            }
            for line in &shape.polylines {
                let px: Vec<[f64; 2]> = line.iter().map(|p| proj.to_pixel(*p)).collect();
                polyline(out, &px, color);
            }
            for pole in &shape.poles {
                disk(out, proj.to_pixel(*pole), POLE_RADIUS, color);
            }
            if let Some(p) = shape.point {
                debug_assert!(matches!(node.kind, NodeKind::FreePoint | NodeKind::DerivedPoint));
                disk(out, proj.to_pixel(p), POINT_RADIUS, color);
            }
        }
    }
    out.push_str("  </g>\n");
}

impl Scene {
    /// SVG document of both panels; identical scenes give identical bytes.
    pub fn export_svg(&self) -> String {
        let (front, side) = (&self.config.view.front, &self.config.view.side);
        let width = front.width + side.width;
        let height = front.height.max(side.height);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            num(width),
            num(height),
            num(width),
            num(height)
        );
        panel(&mut out, self, front, 0.0);
        panel(&mut out, self, side, front.width);
        out.push_str("</svg>\n");
        out
    }
}
