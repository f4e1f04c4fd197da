use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const ALGOS: [&str; 6] = ["brute", "paths", "feedback-edge", "degree3", "vertex-cover", "cograph"];

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbolicity")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn c4_with_every_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    for algo in ALGOS {
        let o = bin(&["compute", &f, "--algo", algo]);
        assert!(o.status.success(), "{algo}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("delta = 2"), "{algo}: {}", stdout(&o));
    }
}

#[test]
fn tree_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tree.txt", "# star\n0 1\n0 2\n0 3\n3 4\n4 5\n");
    let o = bin(&["compute", &f, "--algo", "paths"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("delta = 0"));
}

#[test]
fn malformed_input_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "0 1\n1 2\n2 two\n");
    let o = bin(&["compute", &f]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn json_report_and_decision() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c8.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n");
    let o = bin(&["compute", &f, "--algo", "degree3", "--json", "--at-most", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algorithm"], "degree3");
    assert_eq!(v["delta"], 4);
    assert_eq!(v["decision"]["holds"], true);
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn generate_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ov.txt");
    let o = bin(&["generate", "--family", "ov", "--n", "3", "--dim", "4", "--seed", "7", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let side: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("ov.txt.json")).unwrap()).unwrap();
    assert_eq!(side["family"], "ov");
    assert_eq!(side["seed"], 7);
    assert!(side["ground_truth"].is_boolean());
    let c = bin(&["compute", out.to_str().unwrap(), "--algo", "vertex-cover"]);
    assert!(c.status.success());

    let again = dir.path().join("ov2.txt");
    bin(&["generate", "--family", "ov", "--n", "3", "--dim", "4", "--seed", "7", "-o", again.to_str().unwrap()]);
    assert_eq!(fs::read(&out).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn reduce_writes_trace() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k26.txt", "0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n");
    let out = dir.path().join("r.txt");
    let trace = dir.path().join("t.json");
    let o = bin(&["reduce", &f, "--rules", "3", "-o", out.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert!(o.status.success());
    let t: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["kept"], serde_json::json!([0, 1, 2, 3, 4, 5]));
    assert_eq!(t["traces"][0]["removed"], serde_json::json!([6, 7]));
    assert!(fs::read_to_string(&out).unwrap().starts_with("p 6 8"));
}

#[test]
fn verify_passes() {
    let o = bin(&["verify", "--trials", "15", "--max-n", "10", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatches: 0"));
}

#[test]
fn bench_prints_csv() {
    let o = bin(&["--threads", "1", "bench", "--family", "cycle", "--sizes", "8,16", "--repeats", "1", "--algos", "brute,paths"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("size,n,m,algorithm,repeat,wall_seconds,delta,parameter"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn unknown_rule_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.txt", "0 1\n");
    let o = bin(&["reduce", &f, "--rules", "7"]);
    assert_eq!(o.status.code(), Some(2));
}
