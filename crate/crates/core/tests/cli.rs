use std::io::Write;
use std::process::Command;

use balanced_codes::cli::{run, EXIT_DECODE, EXIT_INFEASIBLE, EXIT_PARSE};

fn qbal(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("qbal").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn payload(codeword: &str) -> &str {
    codeword.trim().split('|').nth(1).unwrap()
}

#[test]
fn pb_replay() {
    let (code, out, _) = qbal(&["encode", "--kind", "pb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--inject", "a=-2,z=6"]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out), "+4,+4,0,-2,-2,-2,+2");
}

#[test]
fn cb_replay() {
    let (code, out, _) = qbal(&["encode", "--kind", "cb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--inject", "z=32"]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out), "+4,+4,-2,0,-2,-2,-2");
}

#[test]
fn injected_index_that_does_not_balance() {
    let (code, _, err) = qbal(&["encode", "--kind", "cb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--inject", "z=31"]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert!(err.contains("does not balance"));
}

#[test]
fn smallest_knuth_case_roundtrips() {
    let (code, out, _) = qbal(&["encode", "--kind", "knuth", "--q", "2", "--word", "+1,-1"]);
    assert_eq!(code, 0);
    let (code, data, _) = qbal(&["decode", "--kind", "knuth", "--q", "2", "--word", out.trim()]);
    assert_eq!(code, 0);
    assert_eq!(data, "+1,-1\n");
}

#[test]
fn every_construction_roundtrips() {
    let cases = [
        ("knuth", "2", "+1,+1,+1,-1,+1,+1"),
        ("pb", "4", "+3,+3,+1,-1,+3,+1"),
        ("cb", "3", "+2,+2,+2,0,-2"),
        ("cpb", "6", "+5,+5,+5,+3,+1,-5"),
        ("sb", "4", "+3,+3,+3,+3,+3,+3,+3,-3"),
    ];
    for (kind, q, word) in cases {
        let (code, out, err) = qbal(&["encode", "--kind", kind, "--q", q, "--word", word]);
        assert_eq!(code, 0, "{kind}: {err}");
        let (code, data, err) = qbal(&["decode", "--kind", kind, "--q", q, "--word", out.trim()]);
        assert_eq!(code, 0, "{kind}: {err}");
        assert_eq!(data.trim(), word);
    }
}

#[test]
fn corrupted_prefix_fails_to_decode() {
    let (_, out, _) = qbal(&["encode", "--kind", "cb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0"]);
    let (prefix, rest) = out.trim().split_once('|').unwrap();
    let mut symbols: Vec<String> = prefix.split(',').map(String::from).collect();
    symbols[0] = if symbols[0] == "+4" { "+2".into() } else { "+4".into() };
    let corrupted = format!("{}|{rest}", symbols.join(","));
    let (code, _, err) = qbal(&["decode", "--kind", "cb", "--q", "5", "--word", &corrupted]);
    assert_eq!(code, EXIT_DECODE);
    assert!(!err.is_empty());
}

#[test]
fn unbalanced_payload_fails_to_decode() {
    let (_, out, _) = qbal(&["encode", "--kind", "pb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0"]);
    let tampered = out.trim().replacen("|+4", "|0", 1);
    assert_eq!(qbal(&["decode", "--kind", "pb", "--q", "5", "--word", &tampered]).0, EXIT_DECODE);
}

#[test]
fn balanced_tampering_goes_unnoticed() {
    let (_, out, _) = qbal(&["encode", "--kind", "cb", "--q", "3", "--word", "+2,0,-2,0"]);
    let (prefix, _) = out.trim().split_once('|').unwrap();
    let other = format!("{prefix}|0,0,0,0");
    let (code, data, _) = qbal(&["decode", "--kind", "cb", "--q", "3", "--word", &other]);
    assert_eq!(code, 0);
    assert_ne!(data.trim(), "+2,0,-2,0");
}

#[test]
fn malformed_input() {
    assert_eq!(qbal(&["encode", "--kind", "cb", "--q", "5", "--word", "+4,x"]).0, EXIT_PARSE);
    assert_eq!(qbal(&["encode", "--kind", "cb", "--q", "5", "--word", "+3,+4"]).0, EXIT_PARSE);
    assert_eq!(qbal(&["decode", "--kind", "cb", "--q", "5", "--word", "+4,-4"]).0, EXIT_PARSE);
    assert_eq!(qbal(&["encode", "--kind", "cb", "--q", "5"]).0, EXIT_PARSE);
    assert_eq!(qbal(&["count", "--kind", "cb", "--q", "5"]).0, EXIT_PARSE);
}

#[test]
fn infeasible_parameters() {
    assert_eq!(qbal(&["encode", "--kind", "sb", "--q", "3", "--word", "0,0,0,0"]).0, EXIT_INFEASIBLE);
    assert_eq!(qbal(&["encode", "--kind", "knuth", "--q", "2", "--word", "+1,-1,+1"]).0, EXIT_INFEASIBLE);
    assert_eq!(qbal(&["count", "--kind", "cpb", "--q", "4", "--n", "7", "--approx"]).0, EXIT_INFEASIBLE);
    assert_eq!(qbal(&["count", "--kind", "cb", "--q", "1", "--n", "7"]).0, EXIT_INFEASIBLE);
}

#[test]
fn counts() {
    assert_eq!(qbal(&["count", "--kind", "cpb", "--q", "4", "--n", "10", "--exact"]).1, "63504\n");
    assert_eq!(qbal(&["count", "--kind", "cb", "--q", "3", "--n", "4", "--exact"]).1, "19\n");
    assert_eq!(qbal(&["count", "--kind", "sb", "--q", "2", "--n", "5", "--exact"]).1, "0\n");
    assert_eq!(qbal(&["redundancy", "--kind", "cpb", "--q", "4", "--n", "1000"]).1, "5.3090\n");
    assert_eq!(qbal(&["redundancy", "--kind", "cpb", "--q", "4", "--n", "1000", "--approx"]).1, "5.3086\n");
}

#[test]
fn table1_rows() {
    let (code, out, _) = qbal(&["table1", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "n,exact,approx");
    assert_eq!(lines[1], "10,2.0227,1.9867");
    assert!(lines.contains(&"100,3.6513,3.6477"));
}

#[test]
fn table2_cells() {
    let (_, out, _) = qbal(&["table2", "--q", "2,3,5", "--format", "csv"]);
    assert_eq!(out, "q,SB,CB,PB,CPB\n2,1/2,1/2,1/2,1/2\n3,1,1/2,1/2,1/2\n5,2,1/2,1/2,1\n");
}

#[test]
fn sweep_skips_infeasible_lengths() {
    let (code, out, _) = qbal(&["sweep", "--kind", "sb", "--q", "3", "--from", "1", "--to", "12", "--step", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let ns: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, ["3", "6", "9", "12"]);
}

#[test]
fn machine_formats_are_stable() {
    for args in [
        &["table1", "--format", "json"][..],
        &["table2", "--format", "json"],
        &["encode", "--kind", "cpb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--emit-sideinfo", "--format", "json"],
        &["encode", "--kind", "sb", "--q", "3", "--word", "0,-2,-2,-2,0,-2", "--emit-sideinfo", "--format", "csv"],
        &["count", "--kind", "pb", "--q", "7", "--n", "40", "--format", "json"],
    ] {
        let first = qbal(args);
        assert_eq!(first.0, 0);
        assert_eq!(first, qbal(args));
    }
    let (_, out, _) = qbal(&["encode", "--kind", "cpb", "--q", "5", "--word", "+4,+4,-2,0,0,0,0", "--emit-sideinfo", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["payload"], "+2,+2,0,-4,-2,-2,+4");
    assert_eq!(v[0]["side_info"]["shift"], 1);
    assert_eq!(v[0]["side_info"]["construction"], "cpb");
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("qbal-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "+2,0,-2,0\n\n0,0,+2,+2").unwrap();
    let (code, out, _) = qbal(&["encode", "--kind", "cb", "--q", "3", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    std::fs::write(&path, &out).unwrap();
    let (code, data, _) = qbal(&["decode", "--kind", "cb", "--q", "3", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(data, "+2,0,-2,0\n0,0,+2,+2\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qbal");
    let ok = Command::new(bin).args(["count", "--kind", "cb", "--q", "3", "--n", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "19\n");
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    let bad = Command::new(bin).args(["decode", "--kind", "cb", "--q", "3", "--word", "+2,+2|0,0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DECODE));
    assert!(bad.stdout.is_empty());
}
