use std::process::{Command, Output};

fn ellgcd(args: &[&str]) -> Output {
    ellgcd_env(args, &[])
}

fn ellgcd_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ellgcd"));
    cmd.args(args).env_remove("ELLGCD_DEGREE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn diagonal_table_has_one_row_per_n() {
    let o = ellgcd(&["gcd-table", "--builtin", "running-pair", "--n-max", "10", "--diagonal"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 10);
    let degrees: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(degrees, ["0", "1", "2", "1", "0", "3", "0", "1", "2", "1"]);
}

#[test]
fn header_carries_version_and_digest() {
    let o = ellgcd(&["stability", "--builtin", "running-pair"]);
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    let (prefix, hash) = first.split_once("config-sha256=").unwrap();
    assert_eq!(prefix, format!("# ellgcd {} ", env!("CARGO_PKG_VERSION")));
    assert_eq!(hash.len(), 64);
    assert!(text.contains("# density_lower_bound=1/3\n"));

    let j = ellgcd(&["stability", "--builtin", "running-pair", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(doc["config_sha256"], hash);
    assert_eq!(doc["partial"], false);
    assert_eq!(doc["report"]["density_lower_bound"], "1/3");
}

#[test]
fn ar_reports_the_cyclotomic_candidate() {
    let o = ellgcd(&["ar", "--a", "0,1", "--b", "1,1", "--n-max", "36"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# h_candidate=1,1,1\n"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 36);
    for r in rows {
        let n: u32 = r[0].parse().unwrap();
        assert_eq!(r[2], if n % 6 == 0 { "2" } else { "0" }, "n={n}");
    }
}

#[test]
fn dependent_ar_inputs_are_rejected() {
    let o = ellgcd(&["ar", "--a", "0,1", "--b", "0,2", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_config_writes_nothing() {
    let dir = std::env::temp_dir().join(format!("ellgcd-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(&path, "[e1\nA = 1").unwrap();
    let o = ellgcd(&["gcd-table", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());

    std::fs::write(&path, "[e1]\nA = [0, 1]\nB = [1]\n[p1]\nx_num = [0]\ny_num = [3]\n").unwrap();
    let o = ellgcd(&["gcd-table", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let o = ellgcd(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(ellgcd(&[]).status.code(), Some(64));
    assert_eq!(ellgcd(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_does_not_depend_on_workers() {
    let args = |w: &'static str| ["gcd-table", "--builtin", "running-pair", "--n-max", "8", "--workers", w];
    let one = ellgcd(&args("1"));
    let four = ellgcd(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn degree_cap_gives_flagged_partial_output() {
    let o = ellgcd_env(
        &["gcd-table", "--builtin", "running-pair", "--n-max", "20", "--diagonal"],
        &[("ELLGCD_DEGREE_CAP", "60")],
    );
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("# partial=true")));
    let rows = data_rows(&text);
    assert!(!rows.is_empty() && rows.len() < 20);

    let bad = ellgcd_env(&["gcd-table", "--builtin", "running-pair"], &[("ELLGCD_DEGREE_CAP", "lots")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("ellgcd-out-{}.csv", std::process::id()));
    let o = ellgcd(&["relations", "--builtin", "running-pair", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.contains("\n0,3,3,"), "{text}");
}

#[test]
fn digest_tracks_semantics_not_presentation() {
    let hash = |args: &[&str]| stdout(&ellgcd(args)).lines().next().unwrap().to_string();
    let base = hash(&["gcd-table", "--builtin", "running-pair", "--n-max", "3"]);
    assert_eq!(base, hash(&["gcd-table", "--builtin", "running-pair", "--n-max", "3", "--workers", "2"]));
    assert_ne!(base, hash(&["gcd-table", "--builtin", "running-pair", "--n-max", "4"]));
}

#[test]
fn corpus_lists_and_prints() {
    let o = ellgcd(&["corpus"]);
    let names = stdout(&o);
    assert!(names.lines().any(|l| l == "running-pair"));
    let cfg = ellgcd(&["corpus", "legendre"]);
    assert!(stdout(&cfg).contains("[e1]"));
    assert_eq!(ellgcd(&["corpus", "nope"]).status.code(), Some(2));
}

#[test]
fn specialize_marks_bad_fibers() {
    let o = ellgcd(&["specialize", "--builtin", "legendre", "--t", "0,1,2", "--side", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].last().unwrap(), "bad_fiber");
    assert_eq!(rows[1].last().unwrap(), "bad_fiber");
}
