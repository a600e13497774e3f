//! Line-oriented command language for building scenes.
//!
//! ```text
//! point X Y Z          line P1 P2          circle P1 P2 P3
//! sphere P1 P2 P3 P4   sphere_cr PC R      move P X Y Z
//! intersect S L        save FILE           load FILE
//! export FILE.svg      params ID
//! ```
//! `#` starts a comment.

use std::path::{Path, PathBuf};

use crate::error::{Result, SceneError};
use crate::node::{Geometry, NodeId, Vec3};
use crate::scene::Scene;

fn fmt_vec(v: Vec3) -> String {
    // Adding zero turns -0 into 0.
    format!("({}, {}, {})", v.x + 0.0, v.y + 0.0, v.z + 0.0)
}

/// Parsed script command.
#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Point(Vec3),
    Line(NodeId, NodeId),
    Circle(NodeId, NodeId, NodeId),
    Sphere([NodeId; 4]),
    SphereCenterRadius(NodeId, f64),
    Move(NodeId, Vec3),
    Intersect(NodeId, NodeId),
    Save(String),
    Load(String),
    Export(String),
    Params(NodeId),
}

/// Parses one line; `Ok(None)` for blank or comment-only lines.
pub fn parse_line(text: &str) -> std::result::Result<Option<Command>, String> {
    let text = text.split('#').next().unwrap_or("");
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((&op, args)) = words.split_first() else {
        return Ok(None);
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(format!("`{op}` takes {n} argument(s), got {}", args.len()))
        }
    };
    let id = |s: &str| s.parse::<NodeId>().map_err(|_| format!("`{s}` is not a node id"));
    let real = |s: &str| s.parse::<f64>().map_err(|_| format!("`{s}` is not a number"));
    let vec3 = |a: &[&str]| Ok::<_, String>(Vec3::new(real(a[0])?, real(a[1])?, real(a[2])?));
    let cmd = match op {
        "point" => {
            arity(3)?;
            Command::Point(vec3(args)?)
        }
        "line" => {
            arity(2)?;
            Command::Line(id(args[0])?, id(args[1])?)
        }
        "circle" => {
            arity(3)?;
            Command::Circle(id(args[0])?, id(args[1])?, id(args[2])?)
        }
        "sphere" => {
            arity(4)?;
            Command::Sphere([id(args[0])?, id(args[1])?, id(args[2])?, id(args[3])?])
        }
        "sphere_cr" => {
            arity(2)?;
            Command::SphereCenterRadius(id(args[0])?, real(args[1])?)
        }
        "move" => {
            arity(4)?;
            Command::Move(id(args[0])?, vec3(&args[1..])?)
        }
        "intersect" => {
            arity(2)?;
            Command::Intersect(id(args[0])?, id(args[1])?)
        }
        "save" | "load" | "export" => {
            arity(1)?;
            let f = args[0].to_string();
            match op {
                "save" => Command::Save(f),
                "load" => Command::Load(f),
                _ => Command::Export(f),
            }
        }
        "params" => {
            arity(1)?;
            Command::Params(id(args[0])?)
        }
        other => return Err(format!("unknown command `{other}`")),
    };
    Ok(Some(cmd))
}

/// Runs commands against a scene, resolving file names against `base`.
#[derive(Clone, Debug)]
pub struct Interpreter {
    pub scene: Scene,
    base: PathBuf,
}

impl Interpreter {
    pub fn new(scene: Scene, base: impl Into<PathBuf>) -> Self {
        Self { scene, base: base.into() }
    }


    /// Executes one command, returning the lines it prints.
    pub fn execute(&mut self, cmd: &Command) -> Result<Vec<String>> {
        let base = &self.base;
        let path = |f: &str| resolve(base, f);
        let s = &mut self.scene;
        let out = match cmd {
            Command::Point(x) => {
                let id = s.create_point(*x)?;
                vec![format!("point {id} = {}", fmt_vec(*x))]
            }
            Command::Line(a, b) => vec![format!("line {}", s.create_line(*a, *b)?)],
            Command::Circle(a, b, c) => vec![format!("circle {}", s.create_circle(*a, *b, *c)?)],
            Command::Sphere(p) => vec![format!("sphere {}", s.create_sphere(*p)?)],
            Command::SphereCenterRadius(c, r) => vec![format!("sphere {}", s.create_sphere_center_radius(*c, *r)?)],
            Command::Move(id, x) => {
                let changed = s.move_point(*id, *x)?;
                vec![format!("moved {id}; recomputed {changed:?}")]
            }
            Command::Intersect(sp, l) => {
                let outcome = s.intersect(*sp, *l)?;
                let mut lines = Vec::new();
                for id in &outcome.created {
                    let p = s.node(*id)?.geometry.point().unwrap_or_default();
                    lines.push(format!("derived {id} = {}", fmt_vec(p)));
                }
                let mut msgs = outcome.messages;
                msgs.splice(1..1, lines);
                msgs
            }
            Command::Save(f) => {
                std::fs::write(path(f), s.save_string())?;
                vec![format!("saved {f}")]
            }
            Command::Load(f) => {
                let text = std::fs::read_to_string(path(f))?;
                *s = Scene::load_str(&text, s.config)?;
                vec![format!("loaded {f} ({} nodes)", s.len())]
            }
            Command::Export(f) => {
                std::fs::write(path(f), s.export_svg())?;
                vec![format!("exported {f}")]
            }
            Command::Params(id) => vec![describe(s, *id)?],
        };
        Ok(out)
    }

    /// Parses and executes one line of script text.
    pub fn execute_line(&mut self, line_no: usize, text: &str) -> Result<Vec<String>> {
        let err = |reason: String| SceneError::Script { line: line_no, reason };
        match parse_line(text).map_err(err)? {
            None => Ok(Vec::new()),
            Some(cmd) => self.execute(&cmd).map_err(|e| err(e.to_string())),
        }
    }

    /// Runs a whole script, stopping at the first failing line.
    pub fn run(&mut self, script: &str) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (k, line) in script.lines().enumerate() {
            out.extend(self.execute_line(k + 1, line)?);
        }
        Ok(out)
    }
}

fn resolve(base: &Path, f: &str) -> PathBuf {
    let p = Path::new(f);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// One-line parameter summary of a node.
pub fn describe(scene: &Scene, id: NodeId) -> Result<String> {
    let node = scene.node(id)?;
    let text = match &node.geometry {
        Geometry::Point(p) => format!("{} {id}: coords {}", node.kind, fmt_vec(*p)),
        Geometry::Line { params, .. } => {
            let m = params.moment;
            format!(
                "line {id}: direction {} moment ({}, {}, {}) base {}",
                fmt_vec(params.unit_direction()),
                m.b1,
                m.b2,
                m.b3,
                fmt_vec(params.base)
            )
        }
        Geometry::Circle { params, .. } => format!(
            "circle {id}: center {} radius {} normal {}",
            fmt_vec(params.center),
            params.radius,
            fmt_vec(params.normal())
        ),
        Geometry::Sphere { params, .. } => {
            format!("sphere {id}: center {} radius {}", fmt_vec(params.center), params.radius)
        }
        Geometry::None => format!("{} {id}: invalid", node.kind),
    };
    Ok(text)
}
