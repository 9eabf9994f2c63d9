use std::io::Write;
use std::process::{Command, Output};

fn ffdesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffdesign"))
        .args(args)
        .output()
        .expect("run binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_fixture_3_4_2() {
    let out = ffdesign(&["analyze", "--fixture", "3-4-2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("runs: 9"));
    assert!(text.contains("b0: 9/81"));
    assert!(text.contains("strength: 2"));
    assert!(text.contains("self-conjugate: yes"));
    assert!(text.contains("regular: yes"));
    assert!(text.contains("l: 9"));
}

#[test]
fn analyze_fixture_6_cube() {
    let out = ffdesign(&["analyze", "--fixture", "6-cube"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("strength: 2"));
    assert!(text.contains("self-conjugate: no"));
    assert!(text.contains("regular: yes"));
    assert!(text.contains("333 e=3"));
    assert!(text.contains("442 e=2"));
}

#[test]
fn analyze_fixture_l18() {
    let out = ffdesign(&["analyze", "--fixture", "l18"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("points: 4374"));
    assert!(text.contains("runs: 18"));
    assert!(text.contains("strength: 2"));
    assert!(text.contains("regular: no"));
    assert!(text.contains("spectrum: 0:1 3:100 4:230 5:270 6:286 7:148 8:36"));
}

#[test]
fn analyze_structured_is_exact_json() {
    let out = ffdesign(&["analyze", "--fixture", "3-4-2", "--format", "structured"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["runs"], 9);
    assert_eq!(doc["denominator"], 81);
    assert_eq!(doc["b0"][0], "9");
    assert_eq!(doc["regularity"]["regular"], true);
    assert_eq!(doc["regularity"]["l"], 9);
}

#[test]
fn generate_3_4_2_words() {
    let out = ffdesign(&["generate", "--levels", "3,3,3,3", "1120=0, 1201=0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# l = 9"));
    assert!(text.contains("# runs = 9"));
    assert_eq!(text.lines().filter(|l| !l.starts_with(['#', 'l'])).count(), 9);
}

#[test]
fn generate_6_cube_words() {
    let out = ffdesign(&["generate", "--levels", "6,6,6", "333=3, 442=2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# runs = 36"));
}

#[test]
fn generate_rejects_invalid_word() {
    let out = ffdesign(&["generate", "--levels", "6,6", "33=2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn project_l18_is_factorial_on_first_three_factors() {
    let out = ffdesign(&["project", "--fixture", "l18", "--factors", "1,2,3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# factorial: yes, multiplicity 1"));
}

#[test]
fn project_l18_is_not_factorial_on_four_three_level_factors() {
    let out = ffdesign(&["project", "--fixture", "l18", "--factors", "2,3,4,5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# factorial: no"));
}

#[test]
fn centered_term_report() {
    let out = ffdesign(&["centered", "--fixture", "6-cube", "--term", "333"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("333 s'=2 replicates=[0 36] centered=no"));
}

#[test]
fn complement_of_indicator() {
    let out = ffdesign(&["complement", "--fixture", "3-4-2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# runs = 72"));
}

#[test]
fn design_file_round_trip_through_analyze() {
    let generated = ffdesign(&["generate", "--levels", "3,3,3,3", "1120=0, 1201=0"]);
    assert!(generated.status.success());
    let mut file = tempfile();
    file.write_all(&generated.stdout).unwrap();
    let path = file.path.clone();
    let out = ffdesign(&["analyze", &path]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("regular: yes"));
    assert!(text.contains("l: 9"));
}

#[test]
fn replicate_suffix_and_comments_are_parsed() {
    let mut file = tempfile();
    writeln!(file, "# two-level factor pair").unwrap();
    writeln!(file, "levels: 2 2").unwrap();
    writeln!(file, "0 0 x2").unwrap();
    writeln!(file, "1 1").unwrap();
    let path = file.path.clone();
    let out = ffdesign(&["analyze", &path]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("runs: 3"));
}

#[test]
fn malformed_file_is_a_validation_error() {
    let mut file = tempfile();
    writeln!(file, "levels: 2 2").unwrap();
    writeln!(file, "0 5").unwrap();
    let path = file.path.clone();
    let out = ffdesign(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["analyze", "--fixture", "l18", "--format", "structured"],
        vec!["coeffs", "--fixture", "6-cube"],
    ] {
        let a = ffdesign(&args);
        let b = ffdesign(&args);
        assert_eq!(a.stdout, b.stdout);
    }
}

// minimal scratch file that cleans up after itself
struct TempFile {
    path: String,
    handle: std::fs::File,
}

fn tempfile() -> TempFile {
    let path = std::env::temp_dir().join(format!(
        "ffdesign-test-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    let path = path.to_str().unwrap().to_string();
    let handle = std::fs::File::create(&path).unwrap();
    TempFile { path, handle }
}

impl Write for TempFile {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.handle.write(buf)
    }
    fn flush(&mut self) -> std::io::Result<()> {
        self.handle.flush()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.path);
    }
}
