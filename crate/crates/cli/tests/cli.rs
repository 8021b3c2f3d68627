use assert_cmd::Command;
use hilbtail_core::OutputEnvelope;
use predicates::prelude::*;
use serde_json::Value;
use tempfile::TempDir;

fn hilbtail(cache: &TempDir) -> Command {
    let mut cmd = Command::cargo_bin("hilbtail").expect("binary builds");
    cmd.env_remove("HILBTAIL_CACHE_DIR")
        .arg("--cache-dir")
        .arg(cache.path());
    cmd
}

fn envelope(cache: &TempDir, args: &[&str]) -> (String, OutputEnvelope) {
    let out = hilbtail(cache)
        .args(args)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{args:?} failed");
    let text = String::from_utf8(out.stdout).unwrap();
    let env = OutputEnvelope::from_json(&text).expect("valid envelope");
    (text, env)
}

#[test]
fn hilb_plain() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["hilb", "--n", "1"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("1 + L + L^2 (euler 3)\n"))
        .stdout(predicate::str::contains("palindromic on [0, 2]: yes"));
}

#[test]
fn hilb_json_envelope() {
    let cache = TempDir::new().unwrap();
    let (text, env) = envelope(&cache, &["hilb", "--n", "2"]);
    assert_eq!(env.schema_version, "hilbtail-envelope/1");
    assert_eq!(env.command, "hilb");
    let class = &env.result["class"];
    let expected: Value =
        serde_json::from_str(r#"{"0":"1","1":"2","2":"3","3":"2","4":"1"}"#).unwrap();
    assert_eq!(class, &expected);
    assert_eq!(env.result["euler"], "9");
    // Byte-identical round trip.
    assert_eq!(env.to_json().unwrap() + "\n", text);
}

#[test]
fn negative_n_is_a_usage_error() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["hilb", "--n", "-1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("Usage"));
}

#[test]
fn moduli_coprime() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["moduli", "--d", "4", "--chi", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("chi0=-5 rho=3 dbar=7 shift=3"))
        .stdout(predicate::str::contains("b_34=1 b_33=0 b_32=2"))
        .stderr(predicate::str::is_empty());

    let (_, env) = envelope(&cache, &["moduli", "--d", "4", "--chi", "1"]);
    assert_eq!(env.result["params"]["stable_threshold"], 29);
    let entries = env.result["betti_tail"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    assert_eq!(entries[5]["index"], 34);
    assert_eq!(entries[5]["value"], "1");
    assert!(env.warnings.is_empty());
}

#[test]
fn moduli_negative_chi() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["moduli", "--d", "5", "--chi", "-7"])
        .assert()
        .success()
        .stdout(predicate::str::contains("chi0=-7"));
}

#[test]
fn moduli_non_coprime_warns() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["moduli", "--d", "4", "--chi", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("b_").not())
        .stderr(predicate::str::contains("semistable_only"));

    let (_, env) = envelope(&cache, &["moduli", "--d", "4", "--chi", "2"]);
    assert!(env.result["betti_tail"].is_null());
    assert_eq!(env.result["motivic_tail"]["semistable_only"], true);
    assert!(env
        .warnings
        .iter()
        .any(|w| w.starts_with("semistable_only")));
}

#[test]
fn moduli_degenerate_degree() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["moduli", "--d", "1", "--chi", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("tail: vacuous"))
        .stderr(predicate::str::contains("vacuous range"));
    hilbtail(&cache)
        .args(["moduli", "--d", "0", "--chi", "1"])
        .assert()
        .code(2);
}

#[test]
fn verify_ranges() {
    let cache = TempDir::new().unwrap();
    let out = hilbtail(&cache)
        .args(["verify", "--d", "3..12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.ends_with(": pass")));

    hilbtail(&cache)
        .args(["verify", "--d", "3..3"])
        .assert()
        .success()
        .stdout("d=3 rho=2 degrees 9..10 chi0 -7..-2: pass\n");
    hilbtail(&cache)
        .args(["verify", "--d", "2..3"])
        .assert()
        .code(2);

    let (_, env) = envelope(&cache, &["verify", "--d", "4..5"]);
    assert_eq!(env.result["all_pass"], true);
    assert_eq!(env.result["reports"][0]["outcome"]["status"], "pass");
    assert_eq!(env.result["reports"][0]["common_tail"]["17"], "1");
}

#[test]
fn euler_with_and_without_cache() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["euler", "--n", "4"])
        .assert()
        .success()
        .stdout("51\n");
    hilbtail(&cache)
        .args(["euler", "--n", "0"])
        .assert()
        .success()
        .stdout("1\n");
    hilbtail(&cache)
        .args(["hilb", "--n", "3"])
        .assert()
        .success();
    hilbtail(&cache)
        .args(["euler", "--n", "3"])
        .assert()
        .success()
        .stdout("22 (matches hilb_class)\n");
}

#[test]
fn cache_survives_restart_and_clear() {
    let cache = TempDir::new().unwrap();
    hilbtail(&cache)
        .args(["cache", "info"])
        .assert()
        .success()
        .stdout(predicate::str::contains("empty"));
    let (first, _) = envelope(&cache, &["hilb", "--n", "20"]);
    assert!(cache.path().join("hilb_classes.json").exists());
    hilbtail(&cache)
        .args(["cache", "info"])
        .assert()
        .success()
        .stdout(predicate::str::contains("classes 0..=20"));
    let (second, _) = envelope(&cache, &["hilb", "--n", "20"]);
    assert_eq!(first, second);
    hilbtail(&cache).args(["cache", "clear"]).assert().success();
    assert!(!cache.path().join("hilb_classes.json").exists());
}

#[test]
fn flag_beats_environment() {
    let flag_dir = TempDir::new().unwrap();
    let env_dir = TempDir::new().unwrap();
    Command::cargo_bin("hilbtail")
        .unwrap()
        .env("HILBTAIL_CACHE_DIR", env_dir.path())
        .arg("--cache-dir")
        .arg(flag_dir.path())
        .args(["hilb", "--n", "2"])
        .assert()
        .success();
    assert!(flag_dir.path().join("hilb_classes.json").exists());
    assert!(!env_dir.path().join("hilb_classes.json").exists());

    Command::cargo_bin("hilbtail")
        .unwrap()
        .env("HILBTAIL_CACHE_DIR", env_dir.path())
        .args(["hilb", "--n", "2"])
        .assert()
        .success();
    assert!(env_dir.path().join("hilb_classes.json").exists());
}
