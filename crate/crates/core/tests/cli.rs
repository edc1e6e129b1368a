use eigensplit::harness::CSV_HEADER;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigensplit")).args(args).output().expect("run eigensplit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["bogus"][..],
        &["sweep-eps", "--points", "0"],
        &["sweep-eps", "--eps-max", "0.5"],
        &["sweep-z", "--d-max", "0.95"],
        &["sweep-z", "--d-min", "0.5", "--d-max", "0.1"],
        &["asym", "--level", "0"],
        &["asym", "--z", "1,2,3"],
        &["asym", "--z", "0.1,0", "--d", "0.2"],
        &["spectrum", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_csv_schema() {
    let o = run(&["sweep-z", "--eps", "1e-2", "--points", "3", "--no-multipole"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 4);
    let first: Vec<&str> = lines[1].split(',').collect();
    // the centre of the disk is on the nodal set of the first double level
    assert_eq!(first[2], first[4]);
    assert_eq!(first[10], "mp_skipped");
    assert!(first[5..9].iter().all(|c| c.is_empty()));
}

#[test]
fn json_and_out_file() {
    let dir = std::env::temp_dir().join(format!("eigensplit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.json");
    let o = run(&["sweep-eps", "--points", "2", "--no-multipole", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    for h in CSV_HEADER.split(',') {
        assert!(arr[0].get(h).is_some(), "missing {h}");
    }
    assert!(arr[0]["mp_lo"].is_null());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failing_records_exit_2() {
    // eps > d leaves no room for the multipole geometry at every point
    let o = run(&["sweep-z", "--eps", "0.1", "--d-min", "0.0", "--d-max", "0.05", "--points", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.lines().nth(2).unwrap().ends_with("mp_failed"));
}

#[test]
fn spectrum_lists_levels() {
    let o = run(&["spectrum", "--omega-max", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,omega,n,k,multiplicity");
    assert_eq!(lines[2], "1,1.8411837813406593e0,1,1,2");
    assert_eq!(lines.len(), 5);
}

#[test]
fn asym_and_multipole_agree_to_eps_squared() {
    let a = stdout(&run(&["asym", "--d", "0.5", "--eps", "1e-3", "--format", "json"]));
    let m = stdout(&run(&["multipole", "--d", "0.5", "--eps", "1e-3", "--format", "json"]));
    let a: serde_json::Value = serde_json::from_str(&a).unwrap();
    let m: serde_json::Value = serde_json::from_str(&m).unwrap();
    let w = a["omega_theta"].as_f64().unwrap();
    let pred = w + a["shifts"][1].as_f64().unwrap();
    let root = m["roots"][1].as_f64().unwrap();
    assert!((pred - root).abs() < 10.0 * 1e-6, "{pred} vs {root}");
}

#[test]
fn graf_mutation_fails_validation() {
    let o = run(&["validate", "--mutate", "graf-sign"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("graf_direct_evaluation,")).unwrap();
    assert!(line.ends_with(",false"));
    assert!(text.lines().count() > 12);
}
