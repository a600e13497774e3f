use std::io::{self, BufRead, Write};
use std::net::TcpListener;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use conform_core::Tolerance64;
use conform_scene::{Interpreter, Scene, SceneConfig};

#[derive(Parser)]
#[command(name = "conform", version, about = "Conformal geometric algebra 3D sketcher")]
struct Cli {
    /// Base tolerance for zero tests (scaled by the scene's extent).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Segments used to draw circles.
    #[arg(long, global = true, default_value_t = conform_scene::scene::DEFAULT_CIRCLE_SEGMENTS)]
    segments: usize,
    #[command(subcommand)]
    command: Mode,
}

#[derive(Subcommand)]
enum Mode {
    /// Run a script file and print the results.
    Run { script: PathBuf },
    /// Read commands interactively from standard input.
    Repl,
    /// Serve the JSON line protocol on a local TCP port.
    Serve {
        #[arg(long)]
        port: u16,
        /// Scene document every new session starts from.
        #[arg(long)]
        scene: Option<PathBuf>,
    },
}

fn config(cli: &Cli) -> Result<SceneConfig, String> {
    if cli.tolerance <= 0.0 || !cli.tolerance.is_finite() {
        return Err("--tolerance must be positive".into());
    }
    if cli.segments < 3 {
        return Err("--segments must be at least 3".into());
    }
    Ok(SceneConfig {
        tolerance: Tolerance64::new(cli.tolerance),
        circle_segments: cli.segments,
        ..SceneConfig::default()
    })
}

fn run_script(path: &Path, cfg: SceneConfig) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let mut it = Interpreter::new(Scene::new(cfg), base);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (k, line) in text.lines().enumerate() {
        let lines = it.execute_line(k + 1, line).map_err(|e| e.to_string())?;
        for l in lines {
            let _ = writeln!(out, "{l}");
        }
    }
    Ok(())
}

fn repl(cfg: SceneConfig) -> Result<(), String> {
    let mut it = Interpreter::new(Scene::new(cfg), ".");
    let stdin = io::stdin();
    let mut k = 0;
    print!("> ");
    let _ = io::stdout().flush();
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| e.to_string())?;
        k += 1;
        match line.trim() {
            "quit" | "exit" => break,
            _ => match it.execute_line(k, &line) {
                Ok(lines) => lines.iter().for_each(|l| println!("{l}")),
                Err(e) => eprintln!("error: {e}"),
            },
        }
        print!("> ");
        let _ = io::stdout().flush();
    }
    Ok(())
}

fn serve(port: u16, scene_file: Option<&Path>, cfg: SceneConfig) -> Result<(), String> {
    let scene = match scene_file {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Scene::load_str(&text, cfg).map_err(|e| e.to_string())?
        }
        None => Scene::new(cfg),
    };
    let listener = TcpListener::bind(("127.0.0.1", port)).map_err(|e| e.to_string())?;
    let addr = listener.local_addr().map_err(|e| e.to_string())?;
    eprintln!("listening on {addr}");
    conform_service::serve(listener, scene).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(&cli).and_then(|cfg| match &cli.command {
        Mode::Run { script } => run_script(script, cfg),
        Mode::Repl => repl(cfg),
        Mode::Serve { port, scene } => serve(*port, scene.as_deref(), cfg),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
