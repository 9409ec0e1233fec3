use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_judicious"));
    cmd.env_remove("JP_EXACT_CAP").env_remove("JP_RESTARTS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("judicious-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> PathBuf {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_partition_then_verify() {
    let file = scratch("tight15.h3");
    let o = run(&["gen", "tight15", "--out", s(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&file).unwrap().starts_with("p h3 7 5\n"));

    let o = run(&["partition", s(&file), "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["threshold"]["num"], 3);
    assert_eq!(json["threshold"]["den"], 5);
    assert_eq!(json["meets_bound"], true);
    assert_eq!(json["degrees"].as_array().unwrap().len(), 3);

    let part = write("tight15.json", &stdout(&o));
    let v = run(&["verify", s(&file), s(&part)]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn partition_is_deterministic() {
    let file = scratch("random.h3");
    run(&["gen", "random", "30", "90", "5", "--out", s(&file)]);
    let a = run(&["partition", s(&file), "--seed", "11"]);
    let b = run(&["partition", s(&file), "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let bad = write("bad.h3", "p h4 3 1\n1 2 3\n");
    let o = run(&["partition", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let single = write("single.h3", "p h3 3 1\n1 2 3\n");
    let all_a = write("all_a.json", r#"{"parts": [[1,2,3],[],[]]}"#);
    assert_eq!(run(&["verify", s(&single), s(&all_a)]).status.code(), Some(1));
    let overlap = write("overlap.json", r#"{"parts": [[1,2],[2],[3]]}"#);
    assert_eq!(run(&["verify", s(&single), s(&overlap)]).status.code(), Some(2));

    let big = scratch("big.h3");
    run(&["gen", "random", "20", "40", "1", "--out", s(&big)]);
    assert_eq!(run(&["oracle", s(&big), "--mode", "tri"]).status.code(), Some(3));

    assert_eq!(run(&["partition", "/nonexistent/file.h3"]).status.code(), Some(2));
    assert_eq!(run(&["partition", s(&single), "--epsilon", "1/20"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn oracle_modes() {
    let t15 = scratch("oracle_t15.h3");
    run(&["gen", "tight15", "--out", s(&t15)]);
    let o = run(&["oracle", s(&t15), "--mode", "tri"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["objective"], 4);

    let tri = write("triangle.smg", "p smg 3 3 0\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    let o = run(&["oracle", s(&tri), "--mode", "bi"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["objective"], 1);
}

#[test]
fn experiment_csv() {
    let o = run(&["experiment", "--n", "9", "--m", "84", "--count", "0"]);
    assert_eq!(
        stdout(&o),
        "n,m,seed,min_degree,threshold_num,threshold_den,ratio_millis,method,restarts_used\n"
    );
    let out = scratch("k9.csv");
    let o = run(&["experiment", "--n", "9", "--m", "84", "--count", "3", "--seed", "7", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.split(',').nth(2).unwrap(), (7 + i).to_string());
        assert!(row.starts_with("9,84,") && row.contains(",64,3,5,761,"));
    }
    let again = run(&["experiment", "--n", "9", "--m", "84", "--count", "3", "--seed", "7"]);
    assert_eq!(stdout(&again), csv);
}

#[test]
fn config_file_and_environment() {
    let cfg = write("run.conf", "# experiment defaults\nn = 12\nm = 30\ncount = 2\nseed = 3\n");
    let a = run(&["experiment", "--config", s(&cfg)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).lines().count(), 3);
    let b = run(&["experiment", "--config", s(&cfg), "--count", "1"]);
    assert_eq!(stdout(&b).lines().count(), 2);

    let t15 = scratch("env_t15.h3");
    run(&["gen", "tight15", "--out", s(&t15)]);
    let o = bin().args(["oracle", s(&t15)]).env("JP_EXACT_CAP", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin().args(["oracle", s(&t15)]).env("JP_RESTARTS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = bin().args(["partition", s(&t15)]).env("JP_RESTARTS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(2));

    let bad = write("bad.conf", "speed = 3\n");
    assert_eq!(run(&["gen", "grid3", "--config", s(&bad)]).status.code(), Some(2));
}

#[test]
fn gen_round_trips_special() {
    let o = run(&["gen", "random-special", "6", "10", "2", "2", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("p smg 6 10 2\n"));
    let file = write("special.smg", &text);
    assert_eq!(run(&["oracle", s(&file)]).status.code(), Some(0));
}
