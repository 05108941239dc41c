pub mod compare;
pub mod frenet;
pub mod sample;
pub mod verify;

use std::io::Write;
use std::path::Path;

/// Writes to the given path, or to stdout when no path was given.
pub fn write_out(out: Option<&Path>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

/// 12 significant digits, the precision contract of every CSV column.
pub fn fmt(x: f64) -> String {
    format!("{x:.11e}")
}
