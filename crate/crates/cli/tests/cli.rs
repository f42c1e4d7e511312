use std::process::{Command, Output};

fn widecat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_widecat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn groebner_basis_example() {
    let o = widecat(&["gb", "--ring", "QQ[x,y] grevlex", "x^2+y^2-1, x-y"]);
    assert_eq!(o.status.code(), Some(0));
    let mut lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    lines.sort();
    assert_eq!(lines, ["x - y", "y^2 - 1/2"]);
}

#[test]
fn member_example() {
    let o = widecat(&["member", "--ring", "ZZ", "--module", "Z/4", "--wide", "Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
    let o = widecat(&["member", "--ring", "ZZ", "--module", "Z/3", "--wide", "Z/2"]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn oracle_example() {
    let o = widecat(&["oracle", "--modulus", "12", "--gens", "Z/2", "--bound", "64"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "equal: true"), "{}", stdout(&o));
}

#[test]
fn json_carries_the_schema_version() {
    let o = widecat(&["--json", "koszul", "--ring", "QQ[x,y]", "x, y"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "koszul");
    assert_eq!(v["homology"][0]["module"], "R/(x, y)");
    assert_eq!(v["homology"][1]["zero"], true);
    let o = widecat(&["oracle", "--modulus", "6", "--gens", "Z/3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["modulus"], 6);
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = widecat(&["gb", "--ring", "QQ[x,y]", "x + z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 5"), "{}", stderr(&o));
    let o = widecat(&["supp", "--ring", "QQ[x]", "--module", "R/(x"]);
    assert_eq!(o.status.code(), Some(2));
    // Unknown flags are parse errors too.
    assert_eq!(widecat(&["gb", "--bogus"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1_with_their_name() {
    let o = widecat(&[
        "resolve",
        "--ring",
        "Fp(2)[x]/(x^2)",
        "--module",
        "R/(x)",
        "--cap",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("pd-bound-exceeded"));
    let o = widecat(&["gb", "--ring", "RR[x]", "x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unsupported-ring"));
    let o = widecat(&["resolve", "--ring", "QQ[x]", "--module", "R/(x + 1)"]);
    assert!(stderr(&o).contains("not-graded"));
    let o = widecat(&["oracle", "--gens", "Z/2", "--bound", "1000"]);
    assert!(stderr(&o).contains("bound-exceeded"));
    let o = widecat(&[
        "--json",
        "member",
        "--ring",
        "ZZ",
        "--module",
        "Z/2",
        "--wide",
        "wide[ZZ/4]{Z/2}",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"], "ring-mismatch");
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["nf", "--ring", "QQ[x,y]", "--ideal", "x^2 - y", "x^3"],
        &["ideal", "--ring", "ZZ", "--op", "quotient", "12", "8"],
        &["syz", "--ring", "QQ[x,y]", "[[x, y]]"],
        &["resolve", "--ring", "ZZ", "--module", "Z/4 + Z"],
        &["supp", "--ring", "ZZ/12", "--module", "Z/4"],
        &[
            "homology",
            "--ring",
            "QQ[x]",
            "--complex",
            "complex(0: 1, 1){[[x]]}",
            "--degree",
            "0",
        ],
        &["classify", "--ring", "QQ[x,y]", "--wide", "R/(x)"],
        &["fg", "--ring", "QQ[x,y]", "--thick", "complex(0: 1, 1){[[x]]}"],
        &["uv", "--ring", "QQ[x,y]", "--ideal", "y", "--wide", "R/(x)"],
        &["specz", "complement", "{2,3}"],
        &["specz", "member", "~{2}", "generic"],
    ];
    for args in cases {
        let o = widecat(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn help_documents_the_grammar() {
    let o = widecat(&["--help"]);
    let s = stdout(&o);
    assert!(s.contains("Fp(7)[x,y]") && s.contains("complex(LOW"));
}

#[test]
fn specific_values() {
    let o = widecat(&["ideal", "--ring", "ZZ", "--op", "quotient", "12", "8"]);
    assert_eq!(stdout(&o), "(3)\n");
    let o = widecat(&["specz", "coproduct-member", "{3}+generic", "Z_(3) + Q"]);
    assert_eq!(stdout(&o), "true\n");
    let o = widecat(&["specz", "coproduct-member", "{}+generic", "Z"]);
    assert_eq!(stdout(&o), "false\n");
    let o = widecat(&["resolve", "--ring", "QQ[x,y,z]", "--module", "R/(x, y, z)"]);
    assert!(stdout(&o).starts_with("ranks: 1 3 3 1\nlength: 3\n"));
}
