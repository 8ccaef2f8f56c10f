use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn tuza(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tuza"))
        .args(args)
        .env_remove("TUZA_ORACLE_BUDGET")
        .output()
        .expect("spawn tuza")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn complete(dir: &Path, n: usize) -> PathBuf {
    let mut text = format!("{} {}\n", n, n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            text += &format!("{u} {v}\n");
        }
    }
    write(dir, &format!("k{n}.txt"), &text)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pack_k5() {
    let dir = TempDir::new().unwrap();
    let k5 = complete(dir.path(), 5);
    for cmd in ["pack", "hit"] {
        let out = tuza(&[cmd, s(&k5)]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let r = json(&out);
        assert_eq!(r["packing"].as_array().unwrap().len(), 2);
        assert_eq!(r["hitting"].as_array().unwrap().len(), 4);
        assert_eq!(r["ratioOk"], true);
    }
}

#[test]
fn p4_is_a_class_error() {
    let dir = TempDir::new().unwrap();
    let p4 = write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = tuza(&["pack", s(&p4)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("witness"));
}

#[test]
fn empty_graph_has_empty_certificates() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "e.txt", "6 0\n");
    let out = tuza(&["pack", s(&g)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!(r["packing"].as_array().unwrap().is_empty());
    assert!(r["hitting"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "bad.txt", "3 1\n0 x\n");
    assert_eq!(code(&tuza(&["pack", s(&g)])), 1);
    assert_eq!(code(&tuza(&["pack", "/nonexistent/graph.txt"])), 1);
    assert_eq!(code(&tuza(&["gen", "bogus"])), 1);
    assert_eq!(code(&tuza(&["gen", "clique:x"])), 1);
    assert_eq!(code(&tuza(&["frobnicate"])), 1);
    assert_eq!(code(&tuza(&["--help"])), 0);
}

#[test]
fn oracle_values() {
    let dir = TempDir::new().unwrap();
    for (n, mu) in [(4, 1), (5, 2), (6, 4), (7, 7)] {
        let k = complete(dir.path(), n);
        let out = tuza(&["oracle", s(&k), "--mu"]);
        assert_eq!(code(&out), 0);
        let r = json(&out);
        assert_eq!(r["value"], mu, "K{n}");
        assert_eq!(r["exact"], true);
        assert_eq!(r["witness"].as_array().unwrap().len(), mu);
    }
    let c5 = write(dir.path(), "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = tuza(&["oracle", s(&c5), "--tau"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["value"], 0);

    let k5 = complete(dir.path(), 5);
    assert_eq!(code(&tuza(&["oracle", s(&k5)])), 1);
    assert_eq!(code(&tuza(&["oracle", s(&k5), "--mu", "--tau"])), 1);
}

#[test]
fn oracle_budget_exhaustion_exits_4() {
    let dir = TempDir::new().unwrap();
    let k5 = complete(dir.path(), 5);
    let out = Command::new(env!("CARGO_BIN_EXE_tuza"))
        .args(["oracle", s(&k5), "--mu"])
        .env("TUZA_ORACLE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["exact"], false);
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_tuza"))
        .args(["oracle", s(&k5), "--mu", "--budget", "1000"])
        .env("TUZA_ORACLE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_accepts_own_report_and_rejects_tampering() {
    let dir = TempDir::new().unwrap();
    let k5 = complete(dir.path(), 5);
    let out = tuza(&["pack", s(&k5)]);
    let report = write(
        dir.path(),
        "r.json",
        std::str::from_utf8(&out.stdout).unwrap(),
    );
    let out = tuza(&["verify", s(&k5), s(&report)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["passed"], true);

    let mut r: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    r["hitting"].as_array_mut().unwrap().pop();
    let bad = write(dir.path(), "bad.json", &r.to_string());
    let out = tuza(&["verify", s(&k5), s(&bad)]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn gen_pack_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    for family in ["threshold-all:6", "cochain-rand:4:5", "clique:4..7"] {
        let out_dir = dir.path().join(family.replace(':', "_"));
        let out = tuza(&["gen", family, "--seed", "7", "--out", s(&out_dir)]);
        assert_eq!(code(&out), 0);
        let manifest: Value =
            serde_json::from_str(&fs::read_to_string(out_dir.join("manifest.json")).unwrap())
                .unwrap();
        let graphs = manifest["graphs"].as_array().unwrap();
        assert!(!graphs.is_empty());
        for entry in graphs {
            let g = out_dir.join(entry["file"].as_str().unwrap());
            let out = tuza(&["pack", s(&g)]);
            assert_eq!(code(&out), 0, "{family} {}", entry["id"]);
            let report = write(
                dir.path(),
                "report.json",
                std::str::from_utf8(&out.stdout).unwrap(),
            );
            assert_eq!(code(&tuza(&["verify", s(&g), s(&report)])), 0);
        }
    }
}

#[test]
fn gen_samples() {
    let dir = TempDir::new().unwrap();
    let out = tuza(&["gen", "threshold:111", "--out", s(dir.path())]);
    assert_eq!(code(&out), 0);
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    let file = manifest["graphs"][0]["file"].as_str().unwrap();
    assert_eq!(manifest["graphs"][0]["m"], 6);
    let text = fs::read_to_string(dir.path().join(file)).unwrap();
    assert_eq!(text, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

    let a = dir.path().join("a");
    let b = dir.path().join("b");
    tuza(&["gen", "cochain-rand:4:10", "--seed", "7", "--out", s(&a)]);
    tuza(&["gen", "cochain-rand:4:10", "--seed", "7", "--out", s(&b)]);
    let files = |d: &Path| {
        let mut v: Vec<_> = fs::read_dir(d)
            .unwrap()
            .map(|e| {
                let p = e.unwrap().path();
                (p.file_name().unwrap().to_owned(), fs::read(&p).unwrap())
            })
            .collect();
        v.sort();
        v
    };
    let fa = files(&a);
    assert_eq!(fa.len(), 11);
    assert_eq!(fa, files(&b));
}

#[test]
fn sweep_threshold_all_8() {
    let out = tuza(&[
        "sweep",
        "threshold-all:8",
        "--exact-below",
        "9",
        "--jobs",
        "4",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graphId,n,class,caseLabel,packSize,hitSize,mu,tau,exact,ratioNum,ratioDen,pass"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 128);
    assert!(rows.iter().all(|r| r.rsplit(',').next() == Some("true")));
    assert!(rows.iter().all(|r| r.split(',').nth(8) == Some("true")));
    let ids: Vec<&str> = rows.iter().map(|r| r.split(',').next().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn sweep_cliques() {
    let out = tuza(&["sweep", "clique:4..6", "--exact-below", "9"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let cols: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let mu: Vec<&str> = cols.iter().map(|c| c[6]).collect();
    let tau: Vec<&str> = cols.iter().map(|c| c[7]).collect();
    assert_eq!(mu, ["1", "2", "4"]);
    assert_eq!(tau, ["2", "4", "6"]);
}

#[test]
fn sweep_empty_family() {
    let out = tuza(&["sweep", "clique:6..5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn sweep_is_deterministic_and_writes_file() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, jobs) in [(&a, "1"), (&b, "8")] {
        let out = tuza(&[
            "sweep",
            "cochain-rand:4:20",
            "--seed",
            "3",
            "--jobs",
            jobs,
            "--out",
            s(path),
        ]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
    }
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes.iter().filter(|&&c| c == b'\n').count(), 21);
    assert_eq!(bytes, fs::read(&b).unwrap());
}
