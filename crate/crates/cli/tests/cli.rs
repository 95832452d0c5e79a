use std::process::{Command, Output};

use serde_json::Value;

fn parkseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn four_car_simulation_renders() {
    let o = parkseq(&[
        "simulate",
        "--lengths",
        "1,2,2,3",
        "--trailer",
        "4",
        "--prefs",
        "3,7,5,3",
        "--render",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.starts_with(
            "+--------+--+-----+-----+--------+\n\
         |   T    |C1| C3  | C2  |   C4   |\n\
         +--------+--+-----+-----+--------+\n  \
         1  2  3  4  5  6  7  8  9 10 11\n"
        ),
        "{text}"
    );
    assert!(text.contains("configuration: T C1 C3 C2 C4"));
}

#[test]
fn failed_simulation_exits_one() {
    let o = parkseq(&["simulate", "--lengths", "2,2", "--prefs", "2,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("C2 fails: collision at spot 2"));
}

#[test]
fn check_exit_codes() {
    let o = parkseq(&[
        "check",
        "--family",
        "inv",
        "--lengths",
        "1,2",
        "--trailer",
        "1",
        "--prefs",
        "1,2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");
    let o = parkseq(&[
        "check",
        "--family",
        "inv",
        "--lengths",
        "1,2",
        "--prefs",
        "1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = parkseq(&[
        "check",
        "--family",
        "ps",
        "--lengths",
        "1,1,4",
        "--prefs",
        "5,6,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = parkseq(&[
        "check",
        "--family",
        "ps",
        "--lengths",
        "1,1,4",
        "--prefs",
        "1,5,6",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = parkseq(&[
        "check", "--family", "kstrong", "--n", "3", "--k", "3", "--prefs", "3,2,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = parkseq(&[
        "check",
        "--family",
        "upf",
        "--boundary",
        "1,2,3",
        "--prefs",
        "3,1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn count_formulas() {
    let cases: [(&[&str], &str); 6] = [
        (
            &[
                "count",
                "--formula",
                "sps-k",
                "--n",
                "3",
                "--k",
                "3",
                "--z",
                "1",
            ],
            "16",
        ),
        (&["count", "--formula", "catalan", "--n", "6"], "132"),
        (
            &["count", "--formula", "fuss", "--k", "2", "--n", "5"],
            "273",
        ),
        (
            &[
                "count",
                "--formula",
                "inv-two-block",
                "--n",
                "3",
                "--r",
                "2",
                "--trailer",
                "1",
            ],
            "4",
        ),
        (
            &[
                "count",
                "--formula",
                "ps",
                "--lengths",
                "2,2",
                "--trailer",
                "1",
            ],
            "4",
        ),
        (
            &[
                "count",
                "--formula",
                "ips-det",
                "--lengths",
                "1,1,3,1",
                "--trailer",
                "3",
            ],
            "146",
        ),
    ];
    for (args, want) in cases {
        let o = parkseq(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        parkseq(&["count", "--formula", "ps"]).status.code(),
        Some(2)
    );
    assert_eq!(
        parkseq(&["simulate", "--lengths", "0,1", "--prefs", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        parkseq(&["check", "--family", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        parkseq(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    let o = parkseq(&["simulate", "--lengths", "1,1", "--prefs", "1", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["command"], "simulate");
    assert_eq!(err["exit_code"], 2);
}

#[test]
fn budget_exceeded_exits_four() {
    let o = parkseq(&[
        "enumerate",
        "--family",
        "ps",
        "--lengths",
        "1,1,1,1,1,1",
        "--budget",
        "100",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "budget");
}

#[test]
fn enumerate_lists_lexicographically() {
    let o = parkseq(&["enumerate", "--family", "ps", "--lengths", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1,1\n1,2\n1,3\n3,1\ncount: 4\n");
    let o = parkseq(&[
        "enumerate",
        "--family",
        "kstrong",
        "--n",
        "3",
        "--k",
        "2",
        "--count-only",
    ]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn json_round_trip() {
    let o = parkseq(&[
        "enumerate",
        "--family",
        "inv",
        "--lengths",
        "2,2,1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    let keys: Vec<_> = doc.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 3);
    for k in ["command", "params", "result"] {
        assert!(doc.get(k).is_some(), "missing {k}");
    }
    assert_eq!(doc["result"]["cardinality"], "7");
    assert_eq!(doc["result"]["members"].as_array().unwrap().len(), 7);
    let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);

    let o = parkseq(&[
        "simulate",
        "--lengths",
        "1,2,2,3",
        "--trailer",
        "4",
        "--prefs",
        "3,7,5,3",
        "--json",
    ]);
    let doc = json_of(&o);
    assert_eq!(doc["result"]["outcome"], "success");
    assert_eq!(
        doc["result"]["configuration"],
        serde_json::json!([1, 3, 2, 4])
    );
}

#[test]
fn out_file_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("ps.csv");
    let json = dir.path().join("ps.json");
    for path in [&csv, &json] {
        let o = parkseq(&[
            "enumerate",
            "--family",
            "ips",
            "--lengths",
            "2,2",
            "--count-only",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "c1,c2\n1,1\n1,2\n1,3\n"
    );
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["cardinality"], "3");
    assert_eq!(doc["members"], serde_json::json!([[1, 1], [1, 2], [1, 3]]));
}

#[test]
fn verify_suites() {
    let o = parkseq(&["verify", "--suite", "table1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    let records = doc["records"].as_array().unwrap();
    let computed: Vec<_> = records
        .iter()
        .map(|r| r["computed"].as_str().unwrap())
        .collect();
    assert_eq!(computed, ["3", "7", "31", "171", "3", "7", "13", "51"]);

    let o = parkseq(&["verify", "--suite", "catalan", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));

    let o = parkseq(&["verify", "--suite", "all", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    assert_eq!(doc["result"]["failed"], 0);
    assert!(doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["pass"] == true));
}

#[test]
fn render_without_trailer() {
    let o = parkseq(&["render", "--lengths", "1", "--prefs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "+--+\n|C1|\n+--+\n  1\n");
}
