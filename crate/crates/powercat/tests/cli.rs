use powercat::run;

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("powercat").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{:?}: {}", args, out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("powercat").chain(args.iter().copied())).code
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["count", "--family", "geq,dash,geq", "--n", "5"]), "42\n");
    assert_eq!(ok(&["levels", "--rule", "pcat", "--depth", "5"]), "1,2,6,23,105\n");
    assert_eq!(ok(&["levels", "--rule", "pcat", "--depth", "3", "--format", "json"]), "[1,2,6]\n");
    assert_eq!(ok(&["map", "--name", "phi-star", "--input", "UUDUWUDDDD"]), "UUUDUDDD;marks=1\n");
}

#[test]
fn both_family_syntaxes_count_alike() {
    for n in 1..=6 {
        let n = n.to_string();
        assert_eq!(
            ok(&["count", "--family", "geq,geq,gt", "--n", &n]),
            ok(&["count", "--family", "avoid:100,110,210", "--n", &n])
        );
    }
    assert_eq!(ok(&["count", "--family", "perm:1-23-4", "--n", "5"]), "105\n");
    assert_eq!(ok(&["count", "--family", "pcat:tree", "--n", "4"]), "23\n");
}

#[test]
fn triangle_csv_rows() {
    let csv = ok(&["series", "triangle", "--n", "4"]);
    assert_eq!(csv, ok(&["triangle", "--n", "4", "--format", "csv"]));
    assert!(csv.starts_with("0,0,1\n1,0,0\n1,1,1\n"));
    assert!(csv.ends_with("4,0,0\n4,1,6\n4,2,10\n4,3,6\n4,4,1\n"));
}

#[test]
fn series_commands() {
    assert_eq!(ok(&["series", "kernel-a11", "--n", "6"]), "1,2,5,15,51,191\n");
    assert_eq!(ok(&["series", "e3", "--n", "3"]), "1,1,2,5\n");
    assert_eq!(ok(&["series", "residual", "--n", "4"]), "0\n");
    assert_eq!(ok(&["series", "baxter", "--n", "5", "--format", "csv"]), "1,1\n2,2\n3,6\n4,22\n5,92\n");
    assert_eq!(code(&["series", "baxter", "--n", "40"]), 2);
}

#[test]
fn grow_lists_labelled_children() {
    let out = ok(&["grow", "--family", "pcat:invseq", "--input", "0,0"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.split('\t').count() == 2));
    let json: serde_json::Value = serde_json::from_str(&ok(&["grow", "--family", "cat", "--input", "0,1", "--format", "json"])).unwrap();
    assert_eq!(json["children"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["count", "--family", "nonsense", "--n", "3"]), 2);
    assert_eq!(code(&["levels", "--rule", "nope", "--depth", "3"]), 2);
    assert_eq!(code(&["map", "--name", "psi", "--input", "UD"]), 2);
    assert_eq!(code(&["grow", "--family", "cat", "--input", "0,0,0"]), 2);
    assert_eq!(code(&["verify", "everything"]), 2);
    assert_eq!(code(&["count", "--family", "geq,geq,gt", "--n", "40"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn verification_reports_are_byte_stable() {
    let a = ok(&["verify", "series", "--format", "json", "-q"]);
    let b = ok(&["verify", "series", "--format", "json", "-q", "--jobs", "1"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "status", "suite"]);
    assert_eq!(v["status"], "pass");
}

#[test]
fn conjecture_report_is_labelled_as_evidence() {
    let out = run(["powercat", "conjecture", "--n", "5", "-q"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("conjecture evidence"));
}
