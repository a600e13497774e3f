//! One client's scene and its serialized command stream.

use conform_scene::{Scene, SceneError, Vec3};
use thiserror::Error;

use crate::protocol::{Command, Event, NodeRender, Request};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("malformed request: {0}")]
    Malformed(String),
    #[error("sequence number {got} is not greater than {last}")]
    OutOfOrder { got: u64, last: u64 },
    #[error("load needs exactly one of `document` or `path`")]
    LoadSource,
    #[error(transparent)]
    Scene(#[from] SceneError),
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    scene: Scene,
    last_seq: Option<u64>,
}

impl Session {
    pub fn new(scene: Scene) -> Self {
        Self { scene, last_seq: None }
    }

    pub fn scene(&self) -> &Scene {
        &self.scene
    }

    /// Parses one request line and returns the reply event.
    pub fn handle_line(&mut self, line: &str) -> Event {
        match serde_json::from_str::<Request>(line) {
            Ok(req) => self.handle(req),
            Err(e) => {
                let seq = serde_json::from_str::<serde_json::Value>(line)
                    .ok()
                    .and_then(|v| v.get("seq").and_then(|s| s.as_u64()));
                Event::error(seq, SessionError::Malformed(e.to_string()).to_string())
            }
        }
    }

    /// Applies one request. On error the scene is left exactly as it was.
    pub fn handle(&mut self, req: Request) -> Event {
        if let Some(last) = self.last_seq {
            if req.seq <= last {
                return Event::error(Some(req.seq), SessionError::OutOfOrder { got: req.seq, last }.to_string());
            }
        }
        self.last_seq = Some(req.seq);
        let backup = self.scene.clone();
        match self.apply(req.seq, &req.command) {
            Ok(event) => event,
            Err(e) => {
                self.scene = backup;
                Event::error(Some(req.seq), e.to_string())
            }
        }
    }

    /// Render of every node, as sent for `snapshot`.
    pub fn snapshot(&self, seq: u64) -> Event {
        let mut ev = Event::response(seq, Vec::new(), self.renders(0..self.scene.len()));
        ev.full = true;
        ev
    }

    fn renders(&self, ids: impl IntoIterator<Item = usize>) -> Vec<NodeRender> {
        ids.into_iter()
            .filter_map(|id| self.scene.node(id).ok())
            .map(|n| NodeRender::of(&self.scene, n))
            .collect()
    }

    fn created(&self, seq: u64, id: usize, messages: Vec<String>) -> Event {
        let mut ev = Event::response(seq, messages, self.renders([id]));
        ev.created = vec![id];
        ev
    }

    fn apply(&mut self, seq: u64, cmd: &Command) -> Result<Event, SessionError> {
        let s = &mut self.scene;
        let ev = match cmd {
            Command::CreatePoint { coords } => {
                let id = s.create_point(Vec3::from_array(*coords))?;
                self.created(seq, id, Vec::new())
            }
            Command::CreateLine { points } => {
                let id = s.create_line(points[0], points[1])?;
                self.created(seq, id, Vec::new())
            }
            Command::CreateCircle { points } => {
                let id = s.create_circle(points[0], points[1], points[2])?;
                self.created(seq, id, Vec::new())
            }
            Command::CreateSphere4 { points } => {
                let id = s.create_sphere(*points)?;
                self.created(seq, id, Vec::new())
            }
            Command::CreateSphereCr { center, radius } => {
                let id = s.create_sphere_center_radius(*center, *radius)?;
                self.created(seq, id, Vec::new())
            }
            Command::MovePoint { id, coords } => {
                let changed = s.move_point(*id, Vec3::from_array(*coords))?;
                Event::response(seq, Vec::new(), self.renders(changed))
            }
            Command::Pick { target, panel, pixel, ordinal } => {
                let (id, messages) = s.pick(*target, *panel, *pixel, *ordinal);
                let mut ev = Event::response(seq, messages, Vec::new());
                ev.selected = Some(id.map_or(-1, |i| i as i64));
                ev
            }
            Command::Intersect { sphere, line } => {
                let out = s.intersect(*sphere, *line)?;
                let mut ev = Event::response(seq, out.messages, self.renders(out.created.iter().copied()));
                ev.created = out.created;
                ev
            }
            Command::Snapshot => self.snapshot(seq),
            Command::Save { path } => {
                let text = s.save_string();
                if let Some(p) = path {
                    std::fs::write(p, &text).map_err(SceneError::from)?;
                }
                let mut ev = Event::response(seq, Vec::new(), Vec::new());
                ev.document = Some(serde_json::from_str(&text).map_err(|e| SessionError::Malformed(e.to_string()))?);
                ev
            }
            Command::Load { document, path } => {
                let text = match (document, path) {
                    (Some(doc), None) => doc.to_string(),
                    (None, Some(p)) => std::fs::read_to_string(p).map_err(SceneError::from)?,
                    _ => return Err(SessionError::LoadSource),
                };
                *s = Scene::load_str(&text, s.config)?;
                let mut ev = self.snapshot(seq);
                ev.messages = vec![format!("loaded {} nodes", self.scene.len())];
                ev.status = ev.messages.join("\n");
                ev
            }
        };
        Ok(ev)
    }
}
