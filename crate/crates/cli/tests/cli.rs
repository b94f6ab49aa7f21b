use std::process::{Command, Output};

fn nlcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlcone")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nlcone(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn table_row_for_n2() {
    let s = stdout(&["table", "--max-n", "2"]);
    assert!(s.lines().any(|l| l == "2: 6+18 | 18 | 12 | 13 | 20"), "{s}");
}

#[test]
fn table_csv_header_and_row() {
    let s = stdout(&["table", "--max-n", "2", "--csv"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "n,chamber,facets,ehi,rays,hilbert_even,hilbert_full");
    assert_eq!(lines[2], "2,6,18,18,12,13,20");
}

#[test]
fn nl_example() {
    assert_eq!(stdout(&["nl", "--n", "2", "--parts", "1;1;1,1"]).trim(), "1");
}

#[test]
fn member_origin() {
    assert_eq!(stdout(&["member", "--n", "4", "--family", "minimal", "--parts", "0;0;0"]).trim(), "true");
}

#[test]
fn member_reports_violation() {
    let s = stdout(&["member", "--n", "2", "--parts", "5;1;"]);
    assert!(s.starts_with("false\nviolated:"), "{s}");
}

#[test]
fn json_carries_schema() {
    let s = stdout(&["--json", "lr", "--parts", "2,1;2,1;3,2,1"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["schema"], "nlcone/1");
    assert_eq!(v["value"], 2);
}

#[test]
fn lr_rules_agree() {
    for rule in ["v1", "v2", "v3", "memo"] {
        assert_eq!(stdout(&["lr", "--rule", rule, "--parts", "2,1;2,1;3,2,1"]).trim(), "2");
    }
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(nlcone(&["nl", "--parts", "1;x;1"]).status.code(), Some(2));
    assert_eq!(nlcone(&["nl", "--parts", "1;1"]).status.code(), Some(2));
    assert_eq!(nlcone(&["nl", "--n", "1", "--parts", "1,1;1;"]).status.code(), Some(2));
    assert_eq!(nlcone(&["ineq", "--n", "0"]).status.code(), Some(2));
    assert_eq!(nlcone(&["bogus"]).status.code(), Some(2));
    assert_eq!(nlcone(&["member", "--n", "2", "--parts", "1,2;;"]).status.code(), Some(2));
}

#[test]
fn ineq_counts_match_table() {
    let table = stdout(&["table", "--max-n", "3", "--polyhedral-max-n", "0", "--csv"]);
    for line in table.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let n = cols[0];
        assert_eq!(stdout(&["ineq", "--n", n, "--count"]).trim(), cols[2]);
        assert_eq!(stdout(&["ineq", "--n", n, "--family", "extended-horn", "--count"]).trim(), cols[3]);
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["ineq", "--n", "3", "--family", "extended-horn", "--json"];
    let one = stdout(&[&["--threads", "1"][..], &args[..]].concat());
    let many = stdout(&[&["--threads", "4"][..], &args[..]].concat());
    assert_eq!(one, many);
    let s1 = stdout(&["--json", "--threads", "1", "saturation", "--n", "2"]);
    let s4 = stdout(&["--json", "--threads", "4", "saturation", "--n", "2"]);
    assert_eq!(s1, s4);
}

#[test]
fn seeded_check_is_reproducible() {
    let a = stdout(&["--json", "check", "--samples", "30", "--seed", "7"]);
    let b = stdout(&["--json", "check", "--samples", "30", "--seed", "7"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["lr_mismatches"], 0);
    assert_eq!(v["family_mismatches"], 0);
}

#[test]
fn cone_certify_n2() {
    let s = stdout(&["cone", "--n", "2", "--certify", "--hilbert", "full"]);
    assert!(s.contains("rays: 12") && s.contains("hilbert: 20") && s.contains("certified facets: 24/24"), "{s}");
}

#[test]
fn saturation_n2_passes() {
    let s = stdout(&["saturation", "--n", "2"]);
    assert!(s.contains("hilbert: 13") && s.contains("violations: 0"), "{s}");
}

#[test]
fn rsk_round_trip() {
    let s = stdout(&["--json", "rsk", "--word", "3,1,2,1"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    let rows = |t: &serde_json::Value| {
        t["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_array().unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    };
    let (p, q) = (rows(&v["p"]), rows(&v["q"]));
    let back = stdout(&["rsk", "--inverse", "--p", &p, "--q", &q]);
    assert!(back.contains("bottom: 3,1,2,1"), "{back}");
}

#[test]
fn demote_and_rectify() {
    let s = stdout(&["demote", "--outer", "2,1", "--inner", "1", "--rows", "1;2", "--corner", "1,1"]);
    assert_eq!(s, "1 1\n2\nrow: 1\n");
    assert_eq!(stdout(&["rectify", "--outer", "2,1", "--inner", "1", "--rows", "1;1"]), "1 1\n");
    assert_eq!(nlcone(&["demote", "--outer", "2,2", "--rows", ";", "--corner", "1,1"]).status.code(), Some(2));
}

#[test]
fn factorization_on_example_facet() {
    let s = stdout(&["factor", "--n", "4", "--parts", "1,1,1,1;1,1,1,1;", "--datum", ";2,3,4;1,2,4;;1,3,4;"]);
    assert!(s.ends_with("\n"));
    let vals: Vec<&str> = s.lines().map(|l| l.split(": ").nth(1).unwrap()).collect();
    assert_eq!(vals[2], vals[3], "{s}");
    assert_eq!(vals[3], "1");
    let off = nlcone(&["factor", "--n", "4", "--parts", ";1;1", "--datum", ";2,3,4;1,2,4;;1,3,4;"]);
    assert_eq!(off.status.code(), Some(2));
}

#[test]
fn mnl_three_parts_matches_nl() {
    assert_eq!(stdout(&["mnl", "--parts", "1;1;1,1"]).trim(), "1");
}

#[test]
fn ineq_json_items_and_listing() {
    let s = stdout(&["--json", "ineq", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["count"], 474);
    assert_eq!(v["merged"], 0);
    let items = v["items"].as_array().unwrap();
    let facet = items
        .iter()
        .position(|q| q["coeffs"] == serde_json::json!([0, -1, -1, -1, 1, 1, 0, 1, 1, 0, 1, 1]))
        .expect("worked facet listed");
    assert_eq!(items[facet]["A'"], serde_json::json!([2, 3, 4]));
    assert_eq!(items[facet]["r"], 3);
    let text = stdout(&["ineq", "--n", "4"]);
    let line = text.lines().nth(facet).unwrap();
    assert!(line.starts_with(&format!("{facet}\t")) && line.ends_with(";2,3,4;1,2,4;;1,3,4;"), "{line}");
    // the index refers to the same facet
    let by_index = stdout(&["factor", "--n", "4", "--parts", "1,1,1,1;1,1,1,1;", "--datum", &facet.to_string()]);
    assert!(by_index.contains("product: 1"), "{by_index}");
    assert_eq!(nlcone(&["factor", "--n", "2", "--parts", ";;", "--datum", "99"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("nlcone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let s = stdout(&["--json", "--output", path.to_str().unwrap(), "table", "--max-n", "2"]);
    assert!(s.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][1]["hilbert_full"], 20);
    std::fs::remove_dir_all(&dir).unwrap();
}
