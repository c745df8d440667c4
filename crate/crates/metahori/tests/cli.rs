use std::process::Command;

use metahori::whittaker::WhittakerVector;
use metahori::LaurentPoly;

fn run(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    // `~` stands for a space inside one argument.
    let argv: Vec<String> = std::iter::once("metahori").chain(args.split_whitespace()).map(|a| a.replace('~', " ")).collect();
    let code = metahori::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap().trim_end().to_string(), String::from_utf8(err).unwrap())
}

fn ok(args: &str) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args}: {err}");
    out
}

#[test]
fn partition_examples() {
    assert_eq!(ok("partition --n 2 --r 3 --mu 2,3,0 --theta 1,0,0 --w s1"), "v*z1^3*z2^2");
    assert_eq!(ok("partition --n 2 --r 2 --mu 1,0 --theta 0,1 --w s1"), "g[1]*z2");
    assert_eq!(ok("partition --n 2 --r 3 --mu 2,3,0 --theta 0,0,0 --w s1"), "0");
    assert_eq!(ok("partition --n 2 --r 3 --mu 2,3,0 --theta 1,0,0 --w 2~1~3 --variant fully-fused --blocks 3"), "v*z1^3*z2^2");
}

#[test]
fn whittaker_examples() {
    assert_eq!(ok("whittaker --n 2 --r 2 --lambda 0,0 --w-prime e --w s1 --theta 0,1"), "g[1]*z1^-1*z2");
    assert_eq!(ok("whittaker --n 2 --r 2 --lambda 0,0 --w-prime e --w e --theta 1,0"), "1");
    assert_eq!(ok("whittaker --n 2 --r 2 --lambda -1,0 --w-prime e --w s1 --theta 0,1"), "0");
    assert_eq!(ok("whittaker --n 2 --r 2 --lambda 0,0 --w-prime e --w s1 --all"), "0,1: g[1]*z1^-1*z2");
}

#[test]
fn verify_examples() {
    let out = ok("verify --suite main-theorem --max-n 2 --max-r 2 --max-mu 2");
    assert!(out.starts_with("main-theorem: ") && out.ends_with("0 failures: PASS"), "{out}");
    ok("verify --suite hecke --max-n 3 --max-r 3");
    ok("verify --suite ybe-aux --max-n 2 --max-r 2");
    for suite in metahori::verify::Suite::ALL {
        ok(&format!("verify --suite {suite} --max-n 2 --max-r 2 --max-mu 1"));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "partition --n 2 --r 2 --mu 1,0,0 --theta 0,1 --w s1",
        "partition --n 2 --r 2 --mu 1,x --theta 0,1 --w s1",
        "partition --n 2 --r 2 --mu 1,-1 --theta 0,1 --w s1",
        "partition --n 0 --r 2 --mu 1,0 --theta 0,1 --w s1",
        "partition --n 2 --r 2 --mu 1,0 --theta 0,1 --w s3",
        "partition --n 2 --r 2 --mu 3,0 --theta 0,1 --w e --blocks 1",
        "whittaker --n 2 --r 2 --lambda 0,0 --w-prime e --w s1",
        "verify --suite nonsense",
        "frobnicate",
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args}");
        assert!(!err.is_empty(), "{args}");
    }
}

#[test]
fn text_output_round_trips_through_json() {
    for args in [
        "partition --n 2 --r 3 --mu 2,3,0 --theta 1,0,0 --w s1",
        "partition --n 3 --r 3 --mu 4,2,0 --theta 1,0,2 --w s1~s2",
        "partition --n 2 --r 2 --mu 1,0 --theta 0,1 --w s1",
    ] {
        let text = ok(args);
        let json: serde_json::Value = serde_json::from_str(&ok(&format!("{args} --format json"))).unwrap();
        let p = LaurentPoly::from_json(&json).unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(LaurentPoly::parse(p.n(), p.rank(), &text).unwrap(), p);
    }
    let args = "whittaker --n 3 --r 3 --lambda 1,0,0 --w-prime e --w 3~2~1 --all";
    let text = ok(args);
    let json: serde_json::Value = serde_json::from_str(&ok(&format!("{args} --format json"))).unwrap();
    let f = WhittakerVector::from_json(&json).unwrap();
    assert_eq!(f.to_string(), text);
    for line in text.lines() {
        let (theta, poly) = line.split_once(": ").unwrap();
        let theta: Vec<u32> = theta.split(',').map(|t| t.parse().unwrap()).collect();
        assert_eq!(LaurentPoly::parse(3, 3, poly).unwrap(), f.component(&theta));
    }
    let args = "verify --suite averaged --max-n 2 --max-r 3";
    let text = ok(args);
    let json: serde_json::Value = serde_json::from_str(&ok(&format!("{args} --format json"))).unwrap();
    assert_eq!(text, format!("averaged: {} checked, 0 failures: PASS", json["checked"]));
}

#[test]
fn output_is_independent_of_worker_count() {
    let bin = env!("CARGO_BIN_EXE_metahori");
    let args = ["verify", "--suite", "fusion", "--max-n", "2", "--max-r", "3", "--max-mu", "2", "--format", "json"];
    let outs: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|k| {
            let o = Command::new(bin).args(args).env("METAHORI_WORKERS", k).output().unwrap();
            assert!(o.status.success());
            o.stdout
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    let o = Command::new(bin).args(args).env("METAHORI_WORKERS", "zero").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let a = Command::new(bin).args(["partition", "--n", "3", "--r", "3", "--mu", "4,2,0", "--theta", "1,0,2", "--w", "s1 s2"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&a.stdout).trim(), "(g[1] + -v*g[1])*z1*z2^3*z3^2");
}
