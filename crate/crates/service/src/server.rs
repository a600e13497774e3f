//! TCP transport: one thread and one independent scene per connection.

use std::io::{self, BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream};
use std::thread;

use conform_scene::Scene;

use crate::protocol::Hello;
use crate::session::Session;

/// Runs a session over one connection until the client closes it.
pub fn serve_connection(stream: TcpStream, scene: Scene) -> io::Result<()> {
    let mut writer = stream.try_clone()?;
    let mut session = Session::new(scene);
    write_json(&mut writer, &Hello::for_scene(session.scene()))?;
    for line in BufReader::new(stream).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let event = session.handle_line(&line);
        write_json(&mut writer, &event)?;
    }
    Ok(())
}

fn write_json(w: &mut impl Write, value: &impl serde::Serialize) -> io::Result<()> {
    let mut text = serde_json::to_string(value).map_err(io::Error::other)?;
    text.push('\n');
    w.write_all(text.as_bytes())?;
    w.flush()
}

/// Accepts connections forever; each starts from a copy of `template`.
pub fn serve(listener: TcpListener, template: Scene) -> io::Result<()> {
    for stream in listener.incoming() {
        let stream = stream?;
        let scene = template.clone();
        thread::spawn(move || {
            let _ = serve_connection(stream, scene);
        });
    }
    Ok(())
}
