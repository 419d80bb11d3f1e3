use std::process::{Command, Output};

use wsp_cli::{csv_row, SemigroupReport, CSV_HEADER};
use wsp_core::NumericalSemigroup;

fn wsp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsp"))
        .args(args)
        .env_remove("WSP_MAX_GENUS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wsp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn json_round_trips() {
    for gens in [&["6", "7", "8"][..], &["4", "6", "11", "13"], &["2", "3"], &["1"], &["5", "7", "9"]] {
        for cmd in ["info", "bounds"] {
            let mut args = vec![cmd, "--json"];
            args.extend_from_slice(gens);
            let genus_below_two = matches!(gens, ["1"] | ["2", "3"]);
            if cmd == "bounds" && genus_below_two {
                continue;
            }
            let parsed: SemigroupReport = serde_json::from_str(&stdout(&args)).unwrap();
            let nums: Vec<u64> = gens.iter().map(|g| g.parse().unwrap()).collect();
            let recomputed = SemigroupReport::new(&NumericalSemigroup::from_generators(&nums).unwrap()).unwrap();
            assert_eq!(parsed, recomputed);
        }
    }
}

#[test]
fn json_keys_are_exact() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["info", "--json", "6", "7", "8"])).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = vec![
        "generators", "gaps", "genus", "frobenius", "symmetric", "lambda", "ewt", "wt", "t1", "bounds",
        "negatively_graded",
    ];
    expected.sort_unstable();
    let mut keys = keys;
    keys.sort_unstable();
    assert_eq!(keys, expected);
    assert_eq!(v["t1"]["plus"], 3);
    assert_eq!(v["bounds"]["exact_moduli_dim"], 14);
    assert_eq!(v["ewt"], 12);
}

#[test]
fn info_examples() {
    let out = stdout(&["info", "6", "7", "8"]);
    assert!(out.contains("genus        9\n"));
    assert!(out.contains("symmetric    true\n"));
    assert!(out.contains("ewt          12\n"));
    assert!(stdout(&["info", "1"]).contains("genus        0\n"));
    assert!(stdout(&["info", "--gaps", "1,2,4,5,8"]).starts_with("generators   3 7 11\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(wsp(&["info", "4", "6"]).status.code(), Some(2));
    assert_eq!(wsp(&["info", "--gaps", "3"]).status.code(), Some(2));
    assert_eq!(wsp(&["bounds", "2", "3"]).status.code(), Some(2));
    assert_eq!(wsp(&["family", "--id", "3", "--tau", "1"]).status.code(), Some(2));
    assert_eq!(wsp(&["family", "--id", "1", "--tau", "0"]).status.code(), Some(2));
    assert_eq!(wsp(&["enumerate", "--genus", "25"]).status.code(), Some(2));
    assert_eq!(wsp(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(wsp(&["info", "6", "7", "8"]).status.code(), Some(0));
}

#[test]
fn bounds_examples() {
    let out = stdout(&["bounds", "6", "7", "8"]);
    for line in ["pflueger_lower     13", "new_lower          14", "rv_upper           17"] {
        assert!(out.lines().any(|l| l == line), "{line}");
    }
    let large = stdout(&[
        "bounds", "29", "30", "31", "32", "33", "34", "35", "36", "37", "38", "39", "40", "41", "42", "57",
    ]);
    assert!(large.lines().any(|l| l == "new_lower          -6"));
    assert!(stdout(&["t1", "6", "7", "8"]).lines().any(|l| l == "t1_plus  = 3"));
}

#[test]
fn enumeration_csv() {
    let out = stdout(&["enumerate", "--genus", "6"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 1 + 23);
    assert!(lines.iter().all(|l| l.split(';').count() == 10));

    let positive = stdout(&["enumerate", "--genus", "5", "--only-positive-t1"]);
    assert_eq!(positive.lines().count(), 1 + 3);

    // Genus one has no bounds, so those fields stay empty.
    let g1 = stdout(&["enumerate", "--genus", "1"]);
    assert_eq!(g1.lines().nth(1), Some("1;2,3;1;1;0;;;;;"));
}

#[test]
fn max_genus_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wsp"))
        .args(["enumerate", "--genus", "4"])
        .env("WSP_MAX_GENUS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(wsp(&["enumerate", "--genus", "4", "--max-genus", "3"]).status.code(), Some(2));
}

#[test]
fn csv_row_matches_report() {
    let s = NumericalSemigroup::from_generators(&[6, 7, 8]).unwrap();
    let row = csv_row(&SemigroupReport::new(&s).unwrap());
    assert_eq!(row, "1,2,3,4,5,9,10,11,17;6,7,8;9;1;12;3;15;13;14;17");
}

#[test]
fn table_one_has_fifteen_rows() {
    let out = stdout(&["table1"]);
    assert_eq!(out.lines().count(), 1 + 15);
    assert!(out.lines().any(|l| l.split_whitespace().eq(["1,2,3,4,8,9", "10", "12", "2"])));
}

#[test]
fn family_verification() {
    let out = stdout(&["family", "--id", "1", "--tau", "2", "--verify"]);
    assert!(out.lines().any(|l| l == "t1_minus = 30 ✓"));
    assert!(!out.contains('✗'));
    let out = stdout(&["family", "--id", "2", "--tau", "3", "--verify"]);
    assert!(!out.contains('✗'));

    let json: wsp_cli::FamilyJson =
        serde_json::from_str(&stdout(&["family", "--id", "1", "--tau", "2", "--verify", "--json"])).unwrap();
    assert_eq!(json.t1_minus, 30);
    assert!(json.assertions.unwrap().iter().all(|a| a.passed));
}

#[test]
fn family_equations_and_syzygies() {
    let out = stdout(&["family-equations", "--id", "1", "--tau", "2"]);
    assert_eq!(out.lines().count(), 10);
    let out = stdout(&["family-syzygies", "--tau", "2"]);
    assert!(out.lines().all(|l| l.ends_with("= 0 ✓")));
    assert_eq!(out.lines().count(), 8);
}
