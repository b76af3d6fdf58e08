use std::process::{Command, Output};

use power_monoid::FiniteSet;

fn pmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmon"))
        .args(args)
        .env_remove("PMON_ALPHA_CACHE")
        .output()
        .expect("pmon runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pmon(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn predicate_words() {
    assert_eq!(stdout(&["atom", "{0,1,3}"]), "atom\n");
    assert_eq!(stdout(&["atom", "{0,1,2}"]), "non-atom\n");
    assert_eq!(stdout(&["divides", "{0,2}", "{0,1,2}"]), "no\n");
    assert_eq!(stdout(&["divides", "{0,1}", "{0,1,2}"]), "yes\n");
    assert_eq!(stdout(&["divides", "--context", "fin", "{2}", "{5,7}"]), "yes\n");
    assert_eq!(
        stdout(&["prime", "--p", "3", "--context", "nm:3,5", "--bound", "40"]),
        "violation\n"
    );
    assert_eq!(
        stdout(&["primal", "--p", "{1}", "--context", "fin", "--bound", "6"]),
        "no-violation\n"
    );
}

#[test]
fn alpha_row() {
    let text = stdout(&["alpha", "--n", "4"]);
    assert_eq!(text, "n,k,alpha\n4,1,1\n4,2,4\n4,3,4\n4,4,2\n4,total,11\n");
    assert!(text.lines().any(|l| l == "4,3,4"));
}

#[test]
fn cache_is_coherent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alpha.csv");
    let path = path.to_str().unwrap();
    let cold = stdout(&["alpha", "--n", "12"]);
    let first = stdout(&["--cache", path, "alpha", "--n", "12"]);
    let cached = std::fs::read(path).unwrap();
    let warm = stdout(&["--cache", path, "alpha", "--n", "12"]);
    assert_eq!(cold, first);
    assert_eq!(cold, warm);
    assert_eq!(cached, std::fs::read(path).unwrap());

    let via_env = Command::new(env!("CARGO_BIN_EXE_pmon"))
        .args(["density", "--n", "6"])
        .env("PMON_ALPHA_CACHE", path)
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(via_env.stdout).unwrap(),
        stdout(&["density", "--n", "6"])
    );
}

#[test]
fn monte_carlo_ignores_thread_count() {
    let run = |threads: &str| {
        stdout(&[
            "--threads", threads, "montecarlo", "--n", "30", "--k", "15", "--samples", "1500",
            "--seed", "11",
        ])
    };
    let one = run("1");
    assert!(one.starts_with("n,k,samples,seed,atom_fraction,std_error\n30,15,1500,11,"));
    assert_eq!(one, run("3"));
    assert_eq!(one, run("8"));
}

#[test]
fn exit_codes() {
    assert_eq!(pmon(&["atom", "{1,2}"]).status.code(), Some(1));
    assert_eq!(pmon(&["atom", "{0,1"]).status.code(), Some(1));
    assert_eq!(pmon(&["sumset", "{5000}", "{0}"]).status.code(), Some(1));
    assert_eq!(pmon(&["nm", "--gens", "4,6"]).status.code(), Some(1));
    assert_eq!(pmon(&["alpha", "--n", "40"]).status.code(), Some(1));
    assert_eq!(pmon(&["montecarlo", "--n", "10", "--k", "20", "--samples", "5", "--seed", "1"]).status.code(), Some(1));
    assert_eq!(pmon(&["atom"]).status.code(), Some(2));
    assert_eq!(pmon(&["atom", "{0,1}", "--bogus"]).status.code(), Some(2));
    assert_eq!(pmon(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pmon(&["density", "--n", "x"]).status.code(), Some(2));

    let err = pmon(&["atom", "{1,2}"]);
    let text = String::from_utf8(err.stderr).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
}

#[test]
fn printed_sets_round_trip() {
    let sum = stdout(&["sumset", "{0,3,9}", "{1,2,40}"]);
    let parsed: FiniteSet = sum.trim().parse().unwrap();
    assert_eq!(parsed.to_vec(), [1, 2, 4, 5, 10, 11, 40, 43, 49]);

    let listed = stdout(&["enumerate", "--n", "6", "--k", "4"]);
    assert_eq!(listed.lines().count(), 14);
    for line in listed.lines() {
        let s: FiniteSet = line.parse().unwrap();
        assert_eq!(s.to_string(), line);
    }
}

#[test]
fn json_carries_witnesses() {
    let text = stdout(&["--format", "json", "atom", "{0,1,2,3}"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["atom"], false);
    let b: FiniteSet = v["b"].as_str().unwrap().parse().unwrap();
    let c: FiniteSet = v["c"].as_str().unwrap().parse().unwrap();
    assert_eq!(power_monoid::sumset(&b, &c).unwrap().to_string(), "{0,1,2,3}");

    let text = stdout(&[
        "--format", "json", "primal", "--p", "{0,2}", "--context", "fin0", "--bound", "4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["outcome"], "violation");
    assert_eq!((v["b"].as_str(), v["c"].as_str()), (Some("{0,1}"), Some("{0,1,2}")));
}

#[test]
fn report_tables() {
    assert_eq!(
        stdout(&["density", "--n", "2"]),
        "n,alpha_n,ratio\n1,2,1.0\n2,3,0.75\n"
    );
    assert_eq!(
        stdout(&["moments", "--n", "1", "--r", "1"]),
        "n,r,e_x_num,e_x_den,e_y_num,e_y_den,ratio\n1,1,3,2,1,2,3.0\n"
    );
    assert_eq!(
        stdout(&["unimodality", "--n", "4"]),
        "n,k,expected,alpha_k,alpha_next\n4,2,decreasing,4,4\n"
    );
    let forms = stdout(&["verify-closed-forms", "--n", "10"]);
    assert_eq!(forms.lines().count(), 5);
    assert!(forms.lines().skip(1).all(|l| l.ends_with(",true")));
    let nm = stdout(&["nm", "--gens", "3,5"]);
    assert_eq!(nm.lines().nth(1), Some("\"<3,5>\",7,8,1 2 4 7,false,3,5,10"));
    let json = stdout(&["--format", "json", "montecarlo", "--n", "10", "--k", "11", "--samples", "4", "--seed", "0"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["atom_fraction"], 0.0);
}
