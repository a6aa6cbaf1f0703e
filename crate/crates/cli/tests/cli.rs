//! End-to-end tests of the `gessel` binary: output contracts, exit codes,
//! caps and determinism.

use std::process::{Command, Output};

fn gessel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gessel"))
        .args(args)
        .env_remove("EULERIAN_MAX_N")
        .output()
        .expect("binary runs")
}

fn gessel_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gessel"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 output")
}

#[test]
fn gen_two_sided_brute_json() {
    let out = gessel(&["gen", "two-sided", "--n", "3", "--method", "brute"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"s\",\"t\"],\"terms\":[{\"e\":[1,1],\"c\":\"1\"},{\"e\":[2,2],\"c\":\"4\"},{\"e\":[3,3],\"c\":\"1\"}]}\n"
    );
}

#[test]
fn gen_type_b_rec() {
    let out = gessel(&["gen", "type-B", "--n", "1", "--method", "rec"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"s\",\"t\"],\"terms\":[{\"e\":[0,0],\"c\":\"1\"},{\"e\":[1,1],\"c\":\"1\"}]}\n"
    );
}

#[test]
fn gen_two_sided_homog_rec() {
    let out = gessel(&["gen", "two-sided-homog", "--n", "2", "--method", "rec"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"s\",\"t\",\"x\",\"y\"],\"terms\":[{\"e\":[1,1,2,2],\"c\":\"1\"},{\"e\":[2,2,1,1],\"c\":\"1\"}]}\n"
    );
}

#[test]
fn gen_pretty_renders_factored_basis() {
    let out = gessel(&["gen", "two-sided-homog", "--n", "3", "--format", "pretty"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(stxy)*(st+xy)^2 + 2*(stxy)^2\n");

    let out = gessel(&["gen", "eulerian", "--n", "3", "--format", "pretty"]);
    assert_eq!(stdout(&out), "t*(1+t)^2 + 2*t^2\n");
}

#[test]
fn gen_csv_format() {
    let out = gessel(&["gen", "two-sided", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "s,t,coeff\n1,1,1\n2,2,1\n");
}

#[test]
fn gen_brute_and_rec_agree() {
    for family in ["eulerian", "two-sided", "type-B", "two-sided-homog"] {
        let brute = gessel(&["gen", family, "--n", "5", "--method", "brute"]);
        let rec = gessel(&["gen", family, "--n", "5", "--method", "rec"]);
        assert_eq!(stdout(&brute), stdout(&rec), "family {family}");
    }
}

#[test]
fn gen_tau_families() {
    let out = gessel(&["gen", "two-sided-tau", "--n", "3", "--tau", "321"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"s\",\"t\"],\"terms\":[{\"e\":[1,3],\"c\":\"1\"},{\"e\":[2,2],\"c\":\"4\"},{\"e\":[3,1],\"c\":\"1\"}]}\n"
    );
    let out = gessel(&["gen", "type-B-tau", "--n", "1", "--tau", "1"]);
    assert_eq!(
        stdout(&out),
        "{\"vars\":[\"s\",\"t\"],\"terms\":[{\"e\":[0,0],\"c\":\"1\"},{\"e\":[1,1],\"c\":\"1\"}]}\n"
    );
}

#[test]
fn usage_errors_exit_one_and_name_the_region() {
    let out = gessel(&["gen", "wrong-family", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("eulerian"));

    let out = gessel(&["gen", "two-sided", "--n", "12", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("1..=11"));

    let out = gessel(&["gen", "type-B", "--n", "9", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("1..=8"));

    let out = gessel(&["gen", "invseq", "--n", "12", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));

    let out = gessel(&["verify", "no_such_check"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("valid checks"));

    let out = gessel(&["gamma", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(1));

    let out = gessel(&["not-a-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn env_var_lowers_caps() {
    let ok = gessel_with_env(
        &["gen", "two-sided", "--n", "5", "--method", "brute"],
        "EULERIAN_MAX_N",
        "5",
    );
    assert!(ok.status.success());
    let blocked = gessel_with_env(
        &["gen", "two-sided", "--n", "6", "--method", "brute"],
        "EULERIAN_MAX_N",
        "5",
    );
    assert_eq!(blocked.status.code(), Some(1));
    assert!(stderr(&blocked).contains("EULERIAN_MAX_N"));
    // The variable can never raise a hard cap.
    let still_blocked = gessel_with_env(
        &["gen", "two-sided", "--n", "12", "--method", "brute"],
        "EULERIAN_MAX_N",
        "40",
    );
    assert_eq!(still_blocked.status.code(), Some(1));
}

#[test]
fn gamma_rec_and_expand_agree_to_nine() {
    let rec = gessel(&[
        "gamma", "--n-max", "9", "--method", "rec", "--format", "csv",
    ]);
    let expand = gessel(&[
        "gamma", "--n-max", "9", "--method", "expand", "--format", "csv",
    ]);
    assert!(rec.status.success());
    assert!(expand.status.success());
    assert_eq!(stdout(&rec), stdout(&expand));
    assert!(stdout(&rec).starts_with("n,i,j,gamma\n1,1,0,1\n"));
}

#[test]
fn gamma_univariate_flavor() {
    let out = gessel(&[
        "gamma",
        "--n-max",
        "4",
        "--method",
        "rec",
        "--flavor",
        "univariate",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "n,i,j,gamma\n1,1,,1\n2,1,,1\n3,1,,1\n3,2,,2\n4,1,,1\n4,2,,8\n"
    );
    let expand = gessel(&[
        "gamma",
        "--n-max",
        "4",
        "--method",
        "expand",
        "--flavor",
        "univariate",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), stdout(&expand));
}

#[test]
fn gamma_single_row_n1() {
    let out = gessel(&["gamma", "--n-max", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,i,j,gamma\n1,1,0,1\n");
}

#[test]
fn verify_theorems_pass_with_exit_zero() {
    let out = gessel(&[
        "verify",
        "--suite",
        "theorems",
        "--max-n",
        "4",
        "--workers",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json array");
    let array = reports.as_array().expect("array");
    assert!(!array.is_empty());
    for report in array {
        assert_eq!(report["outcome"], "pass", "{report}");
        assert_eq!(report["params"]["class"], "theorem");
        assert!(report["witness"].is_null());
        assert!(report["ms"].is_u64());
    }
}

#[test]
fn verify_conjectures_labeled() {
    let out = gessel(&["verify", "--suite", "conjectures", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    for report in reports.as_array().unwrap() {
        assert_eq!(report["params"]["class"], "conjecture");
        assert_eq!(report["outcome"], "pass");
    }
}

#[test]
fn verify_single_check_by_name() {
    let out = gessel(&[
        "verify",
        "check_gessel",
        "--max-n",
        "6",
        "--format",
        "pretty",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("[PASS] check_gessel"));
    assert!(text.contains("conjecture"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("gessel-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.json");
    let out = gessel(&[
        "gen",
        "two-sided",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"terms\""));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn export_tables() {
    let out = gessel(&[
        "export",
        "--what",
        "eulerian-triangle",
        "--n-max",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "n,k,count\n1,1,1\n2,1,1\n2,2,1\n3,1,1\n3,2,4\n3,3,1\n4,1,1\n4,2,11\n4,3,11\n4,4,1\n"
    );
    let out = gessel(&[
        "export",
        "--what",
        "two-sided-triangle",
        "--n-max",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "n,i,j,count\n1,1,1,1\n2,1,1,1\n2,2,2,1\n");
    let out = gessel(&[
        "export",
        "--what",
        "typeb-triangle",
        "--n-max",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "n,i,j,count\n1,0,0,1\n1,1,1,1\n2,0,0,1\n2,1,1,6\n2,2,2,1\n"
    );
    let out = gessel(&[
        "export",
        "--what",
        "gamma-typeb",
        "--n-max",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "n,i,j,gamma\n1,0,0,1\n2,0,0,1\n2,1,0,4\n");
    let out = gessel(&["export", "--what", "bogus", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_export_is_valid_json() {
    for args in [
        vec!["export", "--what", "eulerian-triangle", "--n-max", "3"],
        vec!["export", "--what", "gamma-typeb", "--n-max", "3"],
        vec!["gamma", "--n-max", "3"],
        vec!["gamma", "--n-max", "3", "--flavor", "univariate"],
    ] {
        let out = gessel(&args);
        assert!(out.status.success(), "{args:?}");
        serde_json::from_str::<serde_json::Value>(&stdout(&out))
            .unwrap_or_else(|e| panic!("{args:?}: invalid json: {e}"));
    }
}

#[test]
fn help_exits_zero() {
    let out = gessel(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = gessel(&["gen", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn outputs_do_not_depend_on_worker_count() {
    for args in [
        vec!["gen", "two-sided", "--n", "7", "--method", "brute"],
        vec!["gen", "invseq", "--n", "6"],
        vec![
            "gamma", "--n-max", "6", "--method", "expand", "--format", "csv",
        ],
    ] {
        let mut one = args.clone();
        one.extend(["--workers", "1"]);
        let mut eight = args.clone();
        eight.extend(["--workers", "8"]);
        let out_one = gessel(&one);
        let out_eight = gessel(&eight);
        assert_eq!(out_one.stdout, out_eight.stdout, "{args:?}");
    }
}
