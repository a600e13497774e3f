#![allow(dead_code)]

use conform_core::entities::point_line_distance;
use conform_scene::{Construction, Geometry, Interpreter, NodeKind, Scene, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coord(rng: &mut ChaCha8Rng, r: f64) -> f64 {
    // Three decimals keep scripts short and readable.
    (rng.gen_range(-r..r) * 1000.0).round() / 1000.0
}

/// Generates `n` script commands by driving a live interpreter, so that
/// every id a command refers to exists with the right kind. Returns the
/// script text (only the commands that succeeded).
pub fn random_script(seed: u64, n: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut it = Interpreter::new(Scene::default(), ".");
    let mut lines = Vec::new();
    let mut attempts = 0;
    while lines.len() < n && attempts < 20 * n {
        attempts += 1;
        let ids_of = |s: &Scene, f: &dyn Fn(NodeKind) -> bool| -> Vec<usize> {
            s.nodes().iter().filter(|x| f(x.kind)).map(|x| x.id).collect()
        };
        let points = ids_of(&it.scene, &|k| k.is_point());
        let free = ids_of(&it.scene, &|k| k == NodeKind::FreePoint);
        let lines_ = ids_of(&it.scene, &|k| k == NodeKind::Line);
        let spheres = ids_of(&it.scene, &|k| k == NodeKind::Sphere);
        let pick = |rng: &mut ChaCha8Rng, v: &[usize]| v[rng.gen_range(0..v.len())];
        let roll = rng.gen_range(0..100);
        let cmd = if points.len() < 4 || roll < 25 {
            format!("point {} {} {}", coord(&mut rng, 3.0), coord(&mut rng, 3.0), coord(&mut rng, 3.0))
        } else if roll < 38 {
            format!("line {} {}", pick(&mut rng, &points), pick(&mut rng, &points))
        } else if roll < 46 {
            format!("circle {} {} {}", pick(&mut rng, &points), pick(&mut rng, &points), pick(&mut rng, &points))
        } else if roll < 52 {
            let p: Vec<String> = (0..4).map(|_| pick(&mut rng, &points).to_string()).collect();
            format!("sphere {}", p.join(" "))
        } else if roll < 60 {
            format!("sphere_cr {} {}", pick(&mut rng, &points), (rng.gen_range(0.5..3.0f64) * 100.0).round() / 100.0)
        } else if roll < 72 && !spheres.is_empty() && !lines_.is_empty() {
            format!("intersect {} {}", pick(&mut rng, &spheres), pick(&mut rng, &lines_))
        } else {
            format!(
                "move {} {} {} {}",
                pick(&mut rng, &free),
                coord(&mut rng, 3.0),
                coord(&mut rng, 3.0),
                coord(&mut rng, 3.0)
            )
        };
        if it.execute_line(lines.len() + 1, &cmd).is_ok() {
            lines.push(cmd);
        }
    }
    lines.join("\n") + "\n"
}

/// Largest incidence residual over all valid nodes: how far each node's
/// parents (or, for derived points, the point itself) are from the entity.
pub fn max_residual(scene: &Scene) -> f64 {
    let tol = scene.config.tolerance;
    let point = |id: usize| scene.node(id).unwrap().geometry.point().unwrap();
    let mut worst = 0.0f64;
    for node in scene.nodes().iter().filter(|n| n.valid) {
        let r = match &node.geometry {
            Geometry::Line { blade, .. } => node
                .parents
                .iter()
                .map(|&p| point_line_distance(point(p), blade, tol).unwrap().1)
                .fold(0.0, f64::max),
            Geometry::Circle { params, .. } => node
                .parents
                .iter()
                .map(|&p| {
                    let x = point(p);
                    let radial = (x.distance(params.center) - params.radius).abs();
                    radial.max((x - params.center).dot(params.normal()).abs())
                })
                .fold(0.0, f64::max),
            Geometry::Sphere { params, .. } => match node.construction {
                Construction::SphereCenterRadius(r) => {
                    point(node.parents[0]).distance(params.center).max((params.radius - r).abs())
                }
                _ => node
                    .parents
                    .iter()
                    .map(|&p| (point(p).distance(params.center) - params.radius).abs())
                    .fold(0.0, f64::max),
            },
            Geometry::Point(p) if node.kind == NodeKind::DerivedPoint => {
                let s = scene.node(node.parents[0]).unwrap();
                let l = scene.node(node.parents[1]).unwrap();
                let (Geometry::Sphere { params, .. }, Geometry::Line { blade, .. }) = (&s.geometry, &l.geometry) else {
                    panic!("valid derived point {} with invalid parents", node.id);
                };
                let on_sphere = (p.distance(params.center) - params.radius).abs();
                on_sphere.max(point_line_distance(*p, blade, tol).unwrap().1)
            }
            _ => 0.0,
        };
        worst = worst.max(r);
    }
    worst
}

pub fn v(x: f64, y: f64, z: f64) -> Vec3 {
    Vec3::new(x, y, z)
}
