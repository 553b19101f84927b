use std::process::{Command, Output};

fn numplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numplane")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_shows_section_anchors() {
    let o = numplane(&["list"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("pappus-hilbert → §2.6.2"), "{s}");
    assert!(s.contains("eight-square → §2.7.3"), "{s}");
    for sys in ["rational", "quadext", "ratfunc", "laurent", "quaternion", "octonion", "hilbert", "moulton"] {
        assert!(s.contains(sys));
    }
}

#[test]
fn rational_pappus_exits_zero() {
    let o = numplane(&["run", "--suite", "pappus", "--system", "rational", "--n", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("fails=0"));
}

#[test]
fn hilbert_pappus_counterexample_exits_zero() {
    let o = numplane(&["run", "--suite", "counterexample.pappus-hilbert"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified: true"));
}

#[test]
fn octonion_desargues_counterexample_exits_zero() {
    let o = numplane(&["run", "--suite", "counterexample.desargues-octonion", "--system", "octonion"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_pattern_exits_one() {
    // general Pappus is false over the quaternions
    let o = numplane(&["run", "--suite", "pappus", "--system", "quaternion", "--n", "50"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn betweenness_on_octonions_is_a_capability_error() {
    let o = numplane(&["run", "--suite", "between", "--system", "octonion"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["run", "--suite", "no-such-suite"][..],
        &["run", "--suite", "pappus", "--system", "complex"],
        &["run", "--suite", "pappus", "--n", "0"],
        &["run", "--suite", "counterexample.pappus-hilbert", "--system", "rational"],
        &["run", "--suite", "alternative", "--system", "moulton"],
        &["run", "--suite", "pappus", "--svg", "/tmp/never-written.svg"],
    ] {
        assert_eq!(numplane(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_is_deterministic() {
    let args = ["run", "--suite", "d1", "--system", "quaternion", "--n", "40", "--seed", "9", "--json"];
    let a = numplane(&args);
    let b = numplane(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["n"], 40);
    assert_eq!(v["system"], "quaternion");
}

#[test]
fn moulton_svg_is_written() {
    let path = std::env::temp_dir().join(format!("numplane-moulton-{}.svg", std::process::id()));
    let o = numplane(&["run", "--suite", "counterexample.desargues-moulton", "--svg", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    let _ = std::fs::remove_file(path);
}
