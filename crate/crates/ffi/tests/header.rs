//! The generated header must exist, declare the full surface, and compile as
//! plain C.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

fn header_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/culminating.h")
}

#[test]
fn header_declares_the_surface() {
    let text = std::fs::read_to_string(header_path()).expect("header generated at build time");
    for symbol in [
        "typedef struct CulmSystem CulmSystem;",
        "culm_system_new",
        "culm_system_free",
        "culm_count_culminating",
        "culm_count_positive",
        "culm_count_culminating_height",
        "culm_phi",
        "culm_is_culminating",
        "culm_is_positive",
        "culm_sample_json",
        "culm_string_free",
        "culm_status_message",
        "CULM_STATUS_EMPTY_CLASS",
    ] {
        assert!(text.contains(symbol), "header misses {symbol}");
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = ["cc", "gcc", "clang"]
        .iter()
        .find(|cc| Command::new(cc).arg("--version").output().is_ok());
    let Some(cc) = cc else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("culm_header_check_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("check.c");
    let mut f = std::fs::File::create(&src).unwrap();
    writeln!(f, "#include \"culminating.h\"").unwrap();
    writeln!(f, "int main(void) {{ return (int)CULM_STATUS_OK; }}").unwrap();
    drop(f);
    let status = Command::new(cc)
        .arg("-fsyntax-only")
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&src)
        .status()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert!(status.success(), "{cc} rejected the generated header");
}
