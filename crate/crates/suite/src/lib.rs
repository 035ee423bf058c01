//! Helpers for the acceptance run, which sits in its own package so that it is the last
//! test target `cargo test --workspace` executes.

use std::env;
use std::path::PathBuf;

/// Path of the `berge` binary in the target directory of the running test executable.
///
/// `cargo test --workspace` builds it for the CLI integration tests; when running this
/// package alone, build it first with `cargo build -p berge-cli`.
pub fn berge_binary() -> PathBuf {
    let exe = env::current_exe().expect("test executable path");
    let mut dir = exe.parent().expect("deps directory").to_path_buf();
    if dir.ends_with("deps") {
        dir.pop();
    }
    let bin = dir.join(format!("berge{}", env::consts::EXE_SUFFIX));
    assert!(
        bin.exists(),
        "no berge binary at {}; run `cargo build -p berge-cli` first",
        bin.display()
    );
    bin
}
