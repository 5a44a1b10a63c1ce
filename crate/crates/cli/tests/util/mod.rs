//! Helpers for driving the compiled binary against the fixture corpus.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

/// Captured outcome of one binary invocation.
pub struct CliResult {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Directory holding the committed JSON fixtures.
pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

/// Runs the binary with the corpus as working directory, an optional stdin
/// payload, and an optional sampling-seed environment value.
pub fn run_cli(args: &[&str], stdin: Option<&str>, seed: Option<&str>) -> CliResult {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lexcredal"));
    cmd.args(args)
        .current_dir(corpus_dir())
        .env_remove("LEXCREDAL_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some(s) = seed {
        cmd.env("LEXCREDAL_SEED", s);
    }
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(stdin.unwrap_or_default().as_bytes())
        .expect("stdin accepts the payload");
    let output = child.wait_with_output().expect("binary exits");
    CliResult {
        status: output.status.code().expect("binary exits with a code"),
        stdout: String::from_utf8(output.stdout).expect("stdout is utf8"),
        stderr: String::from_utf8(output.stderr).expect("stderr is utf8"),
    }
}
