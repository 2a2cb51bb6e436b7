use std::process::{Command, Output};

fn weil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weil"))
        .args(args)
        .env_remove("WEIL_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_split_quartic() {
    let o = weil(&["check", "--q", "2", "--g", "2", "--a", "0,3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in [
        "dh=true",
        "weil=true",
        "ordinary=true",
        "simplicity=NON_SIMPLE",
    ] {
        assert!(s.lines().any(|l| l == line), "missing {line} in\n{s}");
    }
}

#[test]
fn check_accepts_full_polynomial() {
    let o = weil(&["check", "--q", "2", "--poly", "1,0,3,0,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tuple=[0,3]"));
}

#[test]
fn check_rejects_non_symmetric_polynomial() {
    let o = weil(&[
        "check",
        "--q",
        "2",
        "--poly",
        "1,1,1,1,1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["q_symmetric"], false);
    assert_eq!(v["weil"], false);
    assert!(v["reason"].as_str().unwrap().contains("q=2"));
}

#[test]
fn enum_genus_one() {
    let o = weil(&["enum", "--q", "2", "--g", "1", "--set", "X"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2,1,-1\n2,1,1\n");
}

#[test]
fn recursion_verifies() {
    let o = weil(&[
        "verify",
        "--kind",
        "recursion",
        "--c1",
        "1",
        "--c2",
        "1",
        "--q",
        "2",
        "--kmax",
        "30",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 30);
}

#[test]
fn verify_other_kinds() {
    let o = weil(&["verify", "--kind", "thm23", "--q", "2", "--g", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = weil(&[
        "verify",
        "--kind",
        "aL-identity",
        "--q",
        "2",
        "--g",
        "3",
        "--epsilon",
        "3/10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["enum", "--q", "6", "--g", "1", "--set", "X"],
        &["enum", "--q", "2", "--g", "4", "--set", "Z"],
        &["enum", "--q", "2", "--g", "4", "--set", "X", "--n", "1"],
        &["enum", "--q", "2", "--g", "9", "--set", "X"],
        &["enum", "--q", "2", "--g", "5", "--set", "ALL"],
        &["enum", "--q", "2", "--g", "2", "--set", "W"],
        &["enum", "--q", "2", "--g", "2", "--parts", "0"],
        &["census", "--q", "2", "--g", "2", "--epsilon", "0.25"],
        &["census", "--q", "2", "--g", "2", "--epsilon", "1/3"],
        &["verify", "--kind", "recursion", "--q", "2", "--c1", "1"],
        &[
            "verify", "--kind", "thm23", "--q", "2", "--g", "4", "--n", "3",
        ],
        &["check", "--q", "2"],
        &["check", "--q", "2", "--g", "3", "--a", "0,3"],
        &["frobnicate"],
        &["enum", "--q", "2"],
    ];
    for args in cases {
        assert_eq!(weil(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn enum_output_independent_of_parts() {
    for set in ["X", "Y", "ALL", "ALL_ORDINARY"] {
        let base = weil(&["enum", "--q", "3", "--g", "3", "--set", set, "--parts", "1"]);
        assert_eq!(base.status.code(), Some(0));
        for parts in ["1", "2", "8"] {
            let o = weil(&[
                "enum", "--q", "3", "--g", "3", "--set", set, "--parts", parts,
            ]);
            assert_eq!(o.stdout, base.stdout, "set={set} parts={parts}");
        }
    }
}

#[test]
fn census_and_classify_independent_of_parts() {
    let run = |cmd: &str, parts: &str, fmt: &str| {
        let o = weil(&[
            cmd,
            "--q",
            "2",
            "--g",
            "3",
            "--parts",
            parts,
            "--no-header",
            "--format",
            fmt,
        ]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    for cmd in ["census", "classify"] {
        for fmt in ["csv", "json"] {
            let base = run(cmd, "1", fmt);
            for parts in ["1", "2", "8"] {
                assert_eq!(run(cmd, parts, fmt), base, "{cmd} {fmt} parts={parts}");
            }
        }
    }
}

#[test]
fn census_header_carries_timestamp() {
    let o = weil(&["census", "--q", "2", "--g", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["generated_at"].is_string());
    assert_eq!(v["epsilon"], "1/4");
    assert_eq!(v["counts"]["m_ord"], 2);
    let o = weil(&[
        "census",
        "--q",
        "2",
        "--g",
        "1",
        "--format",
        "json",
        "--no-header",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["generated_at"].is_null());
}

#[test]
fn writes_to_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_weil"))
        .args([
            "census",
            "--q",
            "3",
            "--g",
            "1",
            "--out",
            out.to_str().unwrap(),
        ])
        .env("WEIL_CACHE_DIR", dir.path().join("cache"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l.starts_with("3,1,1/4,")));
    assert!(dir.path().join("cache/census-q3-g1-eps1_4.json").exists());
}

#[test]
fn growth_table() {
    let o = weil(&["growth", "--q", "2", "--g", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "g,x_count,log_ratio,in_bracket\n1,2,1.000000,true\n2,8,0.750000,true\n"
    );
}
