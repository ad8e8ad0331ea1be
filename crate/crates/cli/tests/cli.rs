use std::process::{Command, Output};

use serde_json::{json, Value};

fn numsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = numsg(&full);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn decompose_json() {
    let v = json_of(&["decompose", "kunz:5:11,22,28,14"]);
    assert_eq!(v["target"], json!([17, 23]));
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["minimals"].as_array().unwrap().len(), 3);
    assert_eq!(v["p_sets"], json!([[23], [17]]));
}

#[test]
fn special_gaps_text() {
    let out = numsg(&["special-gaps", "gaps:1,2,3,4,6,8,11,13"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "11 13\n");
}

#[test]
fn info_of_the_naturals() {
    let out = numsg(&["info", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("multiplicity: 1\n"));
    assert!(text.contains("frobenius: none\n"));
    assert!(text.contains("genus: 0\n"));
    let v = json_of(&["info", "1"]);
    assert_eq!(v["frobenius"], Value::Null);
}

#[test]
fn info_json_schema_and_round_trip() {
    let v = json_of(&["info", "5,7,9"]);
    assert_eq!(v["m"], json!(5));
    assert_eq!(v["coords"], json!([16, 7, 18, 9]));
    assert_eq!(v["frobenius"], json!(13));
    assert_eq!(v["genus"], json!(8));
    assert_eq!(v["apery"], json!([0, 7, 9, 16, 18]));

    let coords: Vec<String> = v["coords"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let spec = format!("kunz:{}:{}", v["m"], coords.join(","));
    assert_eq!(json_of(&["info", &spec]), v);
    assert_eq!(stdout(&numsg(&["info", &spec])), stdout(&numsg(&["info", "5,7,9"])));
    assert_eq!(
        stdout(&numsg(&["info", "gaps:1,2,3,4,6,8,11,13"])),
        stdout(&numsg(&["info", "5,7,9"]))
    );
}

#[test]
fn oversemigroups_golden_text() {
    let out = numsg(&["oversemigroups", "kunz:5:16,7,18,9"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "kunz:5:6,7,8,9\n\
         kunz:5:6,7,13,9\n\
         kunz:5:11,7,8,9\n\
         kunz:5:11,7,13,9\n\
         kunz:5:11,7,18,9\n\
         kunz:5:16,7,8,9\n\
         kunz:5:16,7,13,9\n\
         kunz:5:16,7,18,9\n"
    );
    let threaded = numsg(&["oversemigroups", "kunz:5:16,7,18,9", "--threads", "4"]);
    assert_eq!(stdout(&threaded), stdout(&out));
}

#[test]
fn oversemigroups_limit_is_a_domain_error() {
    let out = numsg(&["oversemigroups", "5,7,9", "--limit", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("LimitExceeded"));
}

#[test]
fn domain_errors_exit_one_with_error_name() {
    for (args, name) in [
        (&["info", "4,6"][..], "NotCofinite"),
        (&["info", "gaps:2"][..], "NotClosed"),
        (&["info", "kunz:5:7,7,18,9"][..], "BadResidue"),
        (&["info", "kunz:5:6,7,13,19"][..], "KunzViolation"),
        (&["min-genus", "5", "10"][..], "InvalidPair"),
        (&["pf", "1"][..], "MultiplicityOne"),
    ] {
        let out = numsg(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(stderr(&out).contains(name), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn usage_errors_exit_two_and_list_subcommands() {
    let out = numsg(&["frobnicate", "5,7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("decompose") && err.contains("special-gaps"), "{err}");
    assert_eq!(numsg(&["min-genus", "5"]).status.code(), Some(2));
    assert_eq!(numsg(&[]).status.code(), Some(2));
}

#[test]
fn predicates_and_labels() {
    assert_eq!(stdout(&numsg(&["irreducible", "2,3"])), "true\n");
    assert_eq!(stdout(&numsg(&["m-irreducible", "kunz:5:16,7,8,9"])), "true\n");
    assert_eq!(stdout(&numsg(&["m-irreducible", "kunz:5:16,7,18,9"])), "false\n");
    assert_eq!(stdout(&numsg(&["classify", "kunz:3:4,5"])), "m-pseudosymmetric\n");
    assert_eq!(json_of(&["classify", "kunz:4:5,6,7"]), json!("m-symmetric"));
    assert_eq!(json_of(&["min-genus", "5", "7"]), json!(5));
    assert_eq!(json_of(&["pf", "kunz:5:6,12,13,19"]), json!([7, 14]));
}

#[test]
fn maximal_sets() {
    assert_eq!(json_of(&["maximal", "5", "7"]), json!([[6, 12, 8, 9]]));
    let v = json_of(&["maximal", "5", "13"]);
    assert!(v.as_array().unwrap().contains(&json!([11, 7, 18, 9])));
}

#[test]
fn verify_mode_reports_agreement() {
    for args in [
        &["special-gaps", "kunz:5:6,12,13,19", "--verify"][..],
        &["oversemigroups", "5,7,9", "--verify"][..],
        &["decompose", "kunz:5:11,22,28,14", "--verify"][..],
        &["maximal", "5", "13", "--verify"][..],
        &["m-irreducible", "kunz:5:16,7,8,9", "--verify"][..],
        &["classify", "5,7,9", "--verify"][..],
        &["pf", "5,7,9", "--verify"][..],
        &["irreducible", "5,7,9", "--verify"][..],
        &["min-genus", "4", "11", "--verify"][..],
        &["info", "5,7,9", "--verify"][..],
    ] {
        let out = numsg(args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        assert!(stderr(&out).contains("verify: ok"), "{args:?}");
    }
}

#[test]
fn decompose_text_lists_minimals_on_request() {
    let plain = stdout(&numsg(&["decompose", "kunz:5:16,7,18,9"]));
    assert!(!plain.contains("minimals:"));
    assert!(plain.starts_with("target: 11 13\ncomponents: 2\n"));
    let all = stdout(&numsg(&["decompose", "kunz:5:16,7,18,9", "--all-minimals"]));
    assert!(all.contains("minimals:\n  kunz:5:11,7,18,9  P: 13\n  kunz:5:16,7,8,9  P: 11\n"));
    let top = stdout(&numsg(&["decompose", "kunz:5:6,7,8,9"]));
    assert_eq!(top, "target: \ncomponents: 1\n  kunz:5:6,7,8,9  P: \n");
}
