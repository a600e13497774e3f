//! Session service for interactive clients: JSON requests in, scene deltas
//! with display geometry out. See `PROTOCOL.md` for the message schemas.

pub mod protocol;
pub mod server;
pub mod session;

pub use protocol::{Command, Event, EventKind, Hello, NodeRender, Request, PROTOCOL_VERSION};
pub use server::{serve, serve_connection};
pub use session::{Session, SessionError};
