use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elemorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn psi_values() {
    for (expr, want) in [
        ("C180 x C5", "81191"),
        ("C150 x C6", "91175"),
        ("C4 x Q8", "119"),
        ("C2 x D16", "119"),
    ] {
        let o = run(&["psi", expr]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want, "{expr}");
    }
    let o = run(&["psi", "--force-explicit", "--cap", "900", "C180 x C5"]);
    assert_eq!(stdout(&o).trim(), "81191");
}

#[test]
fn lcmcheck_and_ordertype() {
    assert_eq!(stdout(&run(&["lcmcheck", "C2 x D16"])).trim(), "false");
    assert_eq!(stdout(&run(&["lcmcheck", "C4 x Q8"])).trim(), "true");
    assert_eq!(stdout(&run(&["lcmcheck", "C12"])).trim(), "true");
    let t = stdout(&run(&["ordertype", "D16"]));
    assert_eq!(t, "order\tcount\n1\t1\n2\t9\n4\t2\n8\t4\n");
}

#[test]
fn json_record() {
    let o = run(&["psi", "--json", "C4 x Q8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"], "C4 x Q8");
    assert_eq!(v["order"], "32");
    assert_eq!(v["psi"], "119");
    assert_eq!(v["lcm"], true);
    assert_eq!(v["order_type"][2]["order"], "4");
    assert_eq!(v["order_type"][2]["count"], "28");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
    // ψ beyond 64 bits stays exact
    let o = run(&[
        "ordertype",
        "--json",
        "C1000000007 x C1000000009 x C998244353",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let psi = v["psi"].as_str().unwrap();
    assert!(psi.len() > 20 && psi.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn identify() {
    assert_eq!(
        stdout(&run(&["identify", "900", "91175"])).trim(),
        "C6 x C150"
    );
    assert_eq!(
        stdout(&run(&["identify", "900", "81191"])).trim(),
        "C5 x C180"
    );
    assert_eq!(stdout(&run(&["identify", "8", "43"])).trim(), "C8");
    let o = run(&["identify", "8", "999"]);
    assert_eq!(stdout(&o).trim(), "none");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["identify", "0", "1"]).status.code(), Some(2));
    assert_eq!(run(&["identify", "x", "1"]).status.code(), Some(2));
}

#[test]
fn enumerate_lists_classes() {
    let out = stdout(&run(&["enumerate", "16"]));
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().any(|l| l.starts_with("C16\t")));
}

#[test]
fn exit_codes() {
    let o = run(&["psi", "D7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("D7"));
    assert_eq!(run(&["psi", "C2 x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["psi", "D1024"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 512"));
    assert_eq!(
        run(&["psi", "--force-explicit", "C1000"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["psi", "--cap", "16", "Q8 x C4"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["verify", "--lemma", "nope"]).status.code(), Some(2));
}

#[test]
fn counterexamples_tables() {
    let out = stdout(&run(&["counterexamples"]));
    assert!(out.contains("81191") && out.contains("91175"));
    assert!(out.contains("C2 x D16") && out.contains("C4 x Q8"));
    let json = stdout(&run(&["counterexamples", "--json"]));
    let recs: Vec<serde_json::Value> = json
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 4);
    assert_eq!(recs[0]["exponent"], "180");
    assert_eq!(recs[1]["exponent"], "150");
    assert_eq!(recs[2]["psi"], recs[3]["psi"]);
}

#[test]
fn verify_smoke_and_filter() {
    let o = run(&["verify", "--cap", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--lemma", "reduction"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reduction"));
    let o = run(&[
        "verify", "--lemma", "omeg", "--lemma", "nmid", "--json", "--cap", "16",
    ]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["lemma_id"] == "omeg" || v["lemma_id"] == "nmid");
        assert_eq!(v["verdict"], "pass");
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("omeg"));
}

#[test]
fn verify_reports_the_order_72_failure() {
    let o = run(&["verify", "--lemma", "cor3", "--cap", "72"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL cor3: G=C2 x C2 x C2 x C9, H=C8 x C3 x C3, p=3"));
}

#[test]
fn verify_json_is_byte_identical() {
    let args = [
        "verify",
        "--cap",
        "16",
        "--samples",
        "40",
        "--classification-max",
        "50",
        "--json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn table_export_and_import() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.txt");
    let table = run(&["table", "Q8"]);
    assert_eq!(table.status.code(), Some(0));
    std::fs::write(&path, &table.stdout).unwrap();
    let expr = format!("C4 x table:{}", path.display());
    assert_eq!(stdout(&run(&["psi", &expr])).trim(), "119");
    assert_eq!(stdout(&run(&["lcmcheck", &expr])).trim(), "true");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2\n0 1\n1 1\n").unwrap();
    let o = run(&["psi", &format!("table:{}", bad.display())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("repeats"));
    let o = run(&["psi", "table:/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["psi", "--cap", "4", &format!("table:{}", path.display())]);
    assert_eq!(o.status.code(), Some(3));
}
