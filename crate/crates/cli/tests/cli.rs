use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphorb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 6] = [
        (&["orbits", "-n", "4..6"], "orbits_4_6.txt"),
        (&["table", "cor4.3", "-n", "8", "-k", "3"], "cor43_8_3.txt"),
        (&["table", "chain", "-n", "10", "-k", "4"], "chain_10_4.txt"),
        (&["table", "dims", "-n", "12"], "dims_12.txt"),
        (&["stab", "-n", "6"], "stab_6.txt"),
        (&["verify", "series7.2", "--rmax", "12"], "series_12.txt"),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(args), golden(file), "{args:?}");
    }
}

#[test]
fn orbit_rows() {
    let rows = |n: &str| {
        stdout(&["orbits", "-n", n])
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("k\t"))
            .map(|l| l.split('\t').take(2).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
    };
    assert_eq!(rows("4"), ["2 +1", "2 -1"]);
    assert_eq!(rows("5"), ["2 merged"]);
    assert_eq!(rows("6"), ["2 merged", "3 +1", "3 -1"]);
}

#[test]
fn classification_and_chain() {
    let t = stdout(&["table", "cor4.3", "-n", "8", "-k", "3"]);
    let branches: Vec<&str> = t
        .lines()
        .skip(2)
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(
        branches,
        ["lower", "lower", "middle", "middle", "middle", "upper", "upper"]
    );
    assert_eq!(stdout(&["classify", "-n", "8", "-k", "3"]), t);
    let chain = stdout(&["table", "chain", "-n", "10", "-k", "4"]);
    assert!(chain.contains("ranks: 7,5,3,1\n"));
    let dims = stdout(&["table", "dims", "-n", "12"]);
    for l in dims.lines().skip(1) {
        let f: Vec<&str> = l.split('\t').collect();
        assert_eq!(f[4], f[5], "{l}");
    }
}

#[test]
fn verification_suites_pass() {
    for args in [
        &["verify", "lemma6.6", "-n", "6..10"][..],
        &["verify", "prop4.2", "-n", "4..8"],
        &["verify", "series7.2", "--rmax", "12"],
        &["verify", "prop3.2"],
        &["verify", "cor4.3"],
        &["verify", "lemma6.7"],
        &["verify", "thm6.8"],
    ] {
        let out = stdout(args);
        assert!(
            out.starts_with(&format!("suite {}: PASS", args[1])),
            "{out}"
        );
    }
}

#[test]
fn bracket_suite_reports_failures() {
    let out = run(&["verify", "brackets", "-n", "7", "-k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(
        failing,
        [
            "FAIL n=7 k=2 eps=+1 [H[4], X[6,5]]",
            "FAIL n=7 k=2 eps=+1 [H[5], X[6,5]]",
            "FAIL n=7 k=2 eps=+1 [H[6], X[6,5]]"
        ]
    );
}

#[test]
fn usage_errors() {
    for args in [
        &["orbits", "-n", "3"][..],
        &["verify", "prop9.9"],
        &["table", "nope", "-n", "6"],
        &["orbits", "-n", "6", "-k", "5"],
        &["orbits", "-n", "6", "--epsilon", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn deterministic_output() {
    let args = [
        "verify", "lemma6.6", "-n", "6..8", "--seed", "7", "--format", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["stab", "-n", "4..7"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn json_report_follows_schema() {
    let schema: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(format!(
            "{}/schema/report.v1.json",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap(),
    )
    .unwrap();
    let report: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify", "thm6.8", "-n", "4..6", "--format", "json",
    ]))
    .unwrap();
    let keys = |v: &serde_json::Value| {
        let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    let required = |v: &serde_json::Value| {
        let mut k: Vec<String> = v["required"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        k.sort();
        k
    };
    let props = &schema["properties"];
    assert_eq!(keys(&report), required(&schema));
    assert_eq!(keys(&report["parameters"]), required(&props["parameters"]));
    assert_eq!(keys(&report["summary"]), required(&props["summary"]));
    for case in report["cases"].as_array().unwrap() {
        assert_eq!(keys(case), required(&props["cases"]["items"]));
    }
    assert_eq!(report["schema"], props["schema"]["const"]);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["summary"]["cases"], 6);
}
