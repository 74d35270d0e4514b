use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn hbrace(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbrace")).args(args).current_dir(cwd).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn emit() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let out = hbrace(&["catalog", "--emit", "cat"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    dir
}

fn files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn emitted_braces_verify() {
    let dir = emit();
    let braces = files(&dir.path().join("cat/braces"));
    assert_eq!(braces.len(), 10);
    for f in braces {
        let out = hbrace(&["verify", f.to_str().unwrap()], dir.path());
        assert_eq!(out.status.code(), Some(0), "{}", f.display());
        let r = report(&out);
        assert_eq!(r["passed"], true);
        assert!(!r["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn reports_are_byte_identical() {
    let a = emit();
    let b = emit();
    for sub in ["braces", "skew", "morphisms"] {
        let fa = files(&a.path().join("cat").join(sub));
        let fb = files(&b.path().join("cat").join(sub));
        assert_eq!(fa.len(), fb.len());
        for (x, y) in fa.iter().zip(&fb) {
            assert_eq!(fs::read(x).unwrap(), fs::read(y).unwrap(), "{}", x.display());
        }
    }
    let b4 = "cat/braces/b4.json";
    for args in [vec!["verify", b4], vec!["ybe", b4, "--emit-matrix"], vec!["decompose", b4], vec!["commutator", b4]] {
        let x = hbrace(&args, a.path());
        let y = hbrace(&args, a.path());
        assert_eq!(x.stdout, y.stdout, "{args:?}");
        assert_eq!(x.stderr, y.stderr, "{args:?}");
    }
}

#[test]
fn decompose_b4() {
    let dir = emit();
    let out = hbrace(&["decompose", "cat/braces/b4.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["torsion_dim"], 1);
    assert_eq!(r["result"]["free_dim"], 4);
    let exact = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "exactness").unwrap();
    assert_eq!(exact["passed"], true);
}

#[test]
fn ybe_trivial_c2() {
    let dir = emit();
    let out = hbrace(&["ybe", "cat/braces/trivial_c2.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let braid = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "braid_equation").unwrap();
    assert_eq!(braid["passed"], true);
}

#[test]
fn malformed_input_exits_2() {
    let dir = emit();
    let c2 = fs::read_to_string(dir.path().join("cat/braces/trivial_c2.json")).unwrap();
    let p4 = c2.replace("\"Q\"", "{\"Fp\": 4}");
    assert_ne!(p4, c2);
    fs::write(dir.path().join("p4.json"), p4).unwrap();
    let out = hbrace(&["verify", "p4.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["exit_code"], 2);

    let v: Value = serde_json::from_str(&c2).unwrap();
    let mut v = v;
    v["counit"][0][1] = 0.into();
    fs::write(dir.path().join("den0.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let out = hbrace(&["verify", "den0.json"], dir.path());
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));

    fs::write(dir.path().join("junk.json"), "{ not json").unwrap();
    assert_eq!(hbrace(&["verify", "junk.json"], dir.path()).status.code(), Some(2));
    assert_eq!(hbrace(&["verify", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(hbrace(&["skew", "lift", "cat/skew/b4.json", "--field", "Fp:4"], dir.path()).status.code(), Some(2));
}

#[test]
fn broken_axiom_exits_1() {
    let dir = emit();
    let text = fs::read_to_string(dir.path().join("cat/braces/b4.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    // Swap the bullet products of two basis pairs; the result is still a
    // well-formed file but no longer a brace.
    let mb = v["mul_bullet"].as_array_mut().unwrap();
    let (i, j) = (1, 2);
    let a = mb[i][2].clone();
    mb[i][2] = mb[j][2].clone();
    mb[j][2] = a;
    fs::write(dir.path().join("broken.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let out = hbrace(&["verify", "broken.json"], dir.path());
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
    let r = report(&out);
    assert_eq!(r["passed"], false);
    let failing: Vec<&Value> = r["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|c| c["witness"].is_array()));
}

#[test]
fn morphism_commands_on_catalog() {
    let dir = emit();
    for m in files(&dir.path().join("cat/morphisms")) {
        let m = m.to_str().unwrap();
        for cmd in ["kernel", "factorize"] {
            let out = hbrace(&[cmd, "--morphism", m], dir.path());
            assert_eq!(out.status.code(), Some(0), "{cmd} {m}");
        }
    }
    let out = hbrace(&["kernel", "--morphism", "cat/morphisms/b4_mod2.json"], dir.path());
    let r = report(&out);
    assert_eq!(r["result"]["dim"], 2);
    assert_eq!(r["result"]["basis"], serde_json::json!(["e0", "e2"]));
    fs::write(dir.path().join("ker.json"), serde_json::to_string(&r["result"]["subspace"]).unwrap()).unwrap();

    let out = hbrace(&["quotient", "cat/braces/b4.json", "--normal-sub", "ker.json", "--out", "q.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["dim"], 2);
    assert_eq!(hbrace(&["verify", "q.json"], dir.path()).status.code(), Some(0));
}

#[test]
fn non_normal_quotient_fails() {
    let dir = emit();
    let row = |k: usize| (0..6).map(|i| if i == k { "[1,1]" } else { "[0,1]" }).collect::<Vec<_>>().join(",");
    let sub = format!("{{\"format\":\"subspace/1\",\"ambient\":6,\"vectors\":[[{}],[{}]]}}", row(0), row(1));
    fs::write(dir.path().join("sub.json"), sub).unwrap();
    let out = hbrace(&["quotient", "cat/braces/trivial_s3.json", "--normal-sub", "sub.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn remaining_commands() {
    let dir = emit();
    let ok = |args: &[&str]| {
        let out = hbrace(args, dir.path());
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        report(&out)
    };
    let r = ok(&["abelianize", "cat/braces/b4.json", "--out", "ab.json"]);
    assert_eq!(r["result"]["dim"], 2);
    ok(&["verify", "ab.json"]);
    let r = ok(&["commutator", "cat/braces/b4.json"]);
    assert_eq!(r["result"]["dim"], 2);
    ok(&["matched-pair", "cat/braces/op_s3.json", "--to", "--out", "mp.json"]);
    ok(&["matched-pair", "mp.json", "--from", "--out", "back.json"]);
    assert_eq!(fs::read(dir.path().join("back.json")).unwrap(), fs::read(dir.path().join("cat/braces/op_s3.json")).unwrap());
    ok(&["skew", "lift", "cat/skew/b4.json", "--field", "Fp:3"]);
    let r = ok(&["skew", "ybe", "cat/skew/b4.json"]);
    assert_eq!(r["result"]["table"].as_array().unwrap().len(), 16);
    for p in files(&dir.path().join("cat/points")) {
        let (pi, gamma) = (p.join("pi.json"), p.join("gamma.json"));
        ok(&["points", "decompose", "--pi", pi.to_str().unwrap(), "--gamma", gamma.to_str().unwrap()]);
    }
}
