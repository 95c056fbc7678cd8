use std::process::{Command, Output};

use menage_cli::{compute_terms, Cache, Method, SequenceSpec, TermRecord};
use menage_core::ExactInt;

fn menage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_menage"))
        .args(args)
        .env_remove("MENAGE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn touchard_plain_output() {
    let o = menage(&["compute", "--seq", "A000179", "--from", "3", "--to", "5", "--method", "touchard"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n2\n13\n");
}

#[test]
fn raw_k4_transfer_matches_bruteforce() {
    let base = ["compute", "--raw-k", "4", "--from", "1", "--to", "4", "--method"];
    let a = menage(&[&base[..], &["transfer"]].concat());
    let b = menage(&[&base[..], &["bruteforce"]].concat());
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_output() {
    let o = menage(&["compute", "--seq", "A094047", "--to", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 2);
    assert_eq!(v["sequence"], "A094047");
    assert_eq!(v["method"], "transfer");
    assert_eq!(v["terms"][3]["value"], "12");
    assert_eq!(v["terms"][3]["n"], 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--seq", "A258338", "--to", "9", "--format", "json", "--verbose"];
    assert_eq!(menage(&args).stdout, menage(&args).stdout);
}

#[test]
fn exit_codes() {
    let ok = menage(&["verify", "--k", "3", "--n-max", "4", "--methods", "transfer,bruteforce"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).lines().all(|l| l.ends_with(" ok")));

    let usage = [
        &["verify", "--k", "3", "--n-max", "4", "--methods", "transfer,touchard"][..],
        &["verify", "--k", "2", "--n-max", "4", "--methods", "touchard"],
        &["verify", "--k", "2", "--n-max", "9", "--methods", "touchard,bruteforce"],
        &["compute", "--seq", "A114939", "--to", "3", "--method", "eigen"],
        &["compute", "--seq", "A000179", "--from", "0", "--to", "3"],
        &["compute", "--to", "3"],
        &["compute", "--seq", "A999999", "--to", "3"],
    ];
    for args in usage {
        assert_eq!(menage(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("terms.jsonl");
    let mut cache = Cache::load(&path).unwrap();
    let records = [
        TermRecord::new(2, 5, &ExactInt::from(3120), Method::Touchard, 0),
        TermRecord::new(3, 7, &ExactInt::from(2324085120u64), Method::B2, 12),
        TermRecord::new(5, 40, &"123456789012345678901234567890".parse().unwrap(), Method::Transfer, 7),
    ];
    for r in &records {
        cache.store(r.clone()).unwrap();
    }
    let reloaded = Cache::load(&path).unwrap();
    assert_eq!(reloaded.len(), records.len());
    for r in &records {
        assert_eq!(reloaded.get(r.k, r.n, r.method), Some(r));
    }
}

#[test]
fn empty_and_corrupt_caches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    std::fs::write(&path, "").unwrap();
    assert!(Cache::load(&path).unwrap().is_empty());

    let path = dir.path().join("corrupt.jsonl");
    std::fs::write(
        &path,
        "{\"k\":2,\"n\":3,\"value\":\"12\",\"method\":\"touchard\",\"elapsed_ms\":0}\nnot json\n{\"k\":2}\n",
    )
    .unwrap();
    let cache = Cache::load(&path).unwrap();
    assert_eq!(cache.len(), 1);
}

#[test]
fn cache_hit_equals_fresh_value() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("terms.jsonl");
    let spec = SequenceSpec::raw(3);
    let mut cache = Cache::load(&path).unwrap();
    let fresh = compute_terms(&spec, 8, 8, Method::Transfer, Some(&mut cache), false).unwrap();

    let mut reloaded = Cache::load(&path).unwrap();
    assert!(reloaded.get(3, 8, Method::Transfer).is_some());
    let hit = compute_terms(&spec, 8, 8, Method::Transfer, Some(&mut reloaded), false).unwrap();
    assert_eq!(hit, fresh);
    // nothing new was appended on a hit
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1);
}

#[test]
fn cache_is_used_and_recompute_bypasses_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("terms.jsonl");
    // a planted wrong value shows whether the cache was consulted
    std::fs::write(&path, "{\"k\":2,\"n\":3,\"value\":\"999\",\"method\":\"touchard\",\"elapsed_ms\":0}\n")
        .unwrap();
    let cache = path.to_str().unwrap();
    let base =
        ["compute", "--seq", "A059375", "--from", "3", "--to", "3", "--method", "touchard", "--cache", cache];
    assert_eq!(stdout(&menage(&base)), "999\n");
    assert_eq!(stdout(&menage(&[&base[..], &["--recompute"]].concat())), "12\n");

    let via_env = Command::new(env!("CARGO_BIN_EXE_menage"))
        .args(&base[..9])
        .env("MENAGE_CACHE", cache)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(via_env.stdout).unwrap(), "12\n");
}
