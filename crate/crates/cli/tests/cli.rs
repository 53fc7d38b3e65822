use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use qra_core::script::OutputRecord;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
}

fn qra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qra"))
        .args(args)
        .output()
        .expect("spawn qra")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn combined_script(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("swap.qra");
    let src = fs::read_to_string(data("listing3_kets.qra")).unwrap()
        + &fs::read_to_string(data("listing5_swap.qra")).unwrap();
    fs::write(&path, src).unwrap();
    path
}

#[test]
fn listing4_is_reproduced_exactly() {
    let script = data("listing3_kets.qra");
    let out = qra(&["run", script.to_str().unwrap(), "--qubits", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let golden = fs::read_to_string(data("listing4_output.txt")).unwrap();
    assert_eq!(stdout(&out), golden);

    let def = data("listing2_two_qubits.csv");
    let out = qra(&[
        "run",
        script.to_str().unwrap(),
        "--def",
        def.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), golden);
}

#[test]
fn listing5_lines_are_present() {
    let dir = tempfile::tempdir().unwrap();
    let script = combined_script(&dir);
    let out = qra(&["run", script.to_str().unwrap(), "--qubits", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let golden4 = fs::read_to_string(data("listing4_output.txt")).unwrap();
    let golden5 = fs::read_to_string(data("listing5_output.txt")).unwrap();
    assert_eq!(golden5.lines().count(), 32);
    assert_eq!(text, golden4 + &golden5);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let script = combined_script(&dir);
    let args = ["run", script.to_str().unwrap(), "--qubits", "2"];
    assert_eq!(qra(&args).stdout, qra(&args).stdout);
}

#[test]
fn json_agrees_with_listing_format() {
    let dir = tempfile::tempdir().unwrap();
    let script = combined_script(&dir);
    let path = script.to_str().unwrap();
    let text = stdout(&qra(&["run", path, "--qubits", "2"]));
    let json = stdout(&qra(&["run", path, "--qubits", "2", "--format", "json"]));
    let records: Vec<OutputRecord> = serde_json::from_str(&json).unwrap();

    let mut rebuilt = String::new();
    for rec in &records {
        for c in &rec.coords {
            rebuilt.push_str(&format!(
                "{}[{}] = {}; // {}\n",
                rec.name,
                c.index,
                qra_core::script::format_value(c.value),
                c.blade
            ));
        }
    }
    assert_eq!(rebuilt, text);
    assert_eq!(
        records.iter().map(|r| r.name.as_str()).collect::<Vec<_>>(),
        ["ket00", "ket01", "ket10", "ket11", "psi", "SwapPsi"]
    );
}

#[test]
fn tolerance_prunes_small_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("tiny.qra");
    fs::write(&script, "?x = 0.000001*e1 + e2;\n").unwrap();
    let path = script.to_str().unwrap();
    let all = stdout(&qra(&["run", path, "--qubits", "1"]));
    assert_eq!(all.lines().count(), 2);
    let pruned = stdout(&qra(&["run", path, "--qubits", "1", "--tol", "0.001"]));
    assert_eq!(pruned, "x[2] = 1.0; // e2\n");
}

#[test]
fn missing_script_names_the_path() {
    let out = qra(&["run", "/nonexistent/prog.qra", "--qubits", "2"]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("/nonexistent/prog.qra"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn syntax_errors_report_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("bad.qra");
    fs::write(&script, "a = e1;\nb = ;\n").unwrap();
    let out = qra(&["run", script.to_str().unwrap(), "--qubits", "1"]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("bad.qra:2:5: syntax error"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn unbound_names_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("unbound.qra");
    fs::write(&script, "?x = e1 * nope;\n").unwrap();
    let out = qra(&["run", script.to_str().unwrap(), "--qubits", "1"]);
    assert!(!out.status.success());
    assert!(
        stderr(&out).contains("`nope` is not defined"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn conflicting_algebra_sources_are_rejected() {
    let script = data("listing3_kets.qra");
    let def = data("listing2_two_qubits.csv");
    let out = qra(&[
        "run",
        script.to_str().unwrap(),
        "--qubits",
        "2",
        "--def",
        def.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    let out = qra(&["run", script.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn bad_definition_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let def = dir.path().join("Definition.csv");
    fs::write(&def, "1,e1,e2\n\n1,e2,e1\ne1=1,e2=1\n\n").unwrap();
    let script = dir.path().join("s.qra");
    fs::write(&script, "?x = e1;\n").unwrap();
    let out = qra(&[
        "run",
        script.to_str().unwrap(),
        "--def",
        def.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn selftest_passes() {
    let out = qra(&["selftest"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("[PASS] n=2 f_2 I = 0"));
    assert!(text.contains("[PASS] n=1 iota^2 = -1"));
    assert!(text.contains("[PASS] n=3 I^2 = I"));
}
