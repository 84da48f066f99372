//! Output plumbing: format selection and file-or-stdout writing.

use clap::ValueEnum;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Jsonl,
    Csv,
    Table,
}

pub fn write_out(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())
        }
    }
}
