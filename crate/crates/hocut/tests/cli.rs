//! The binary's output and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

fn golden(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden").join(rel).to_str().unwrap().to_string()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hocut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn hocut(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hocut")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// Feeds printed derivations back to `check`.
fn rechecks(name: &str, stdout: &str) {
    let p = scratch(name, stdout);
    let (code, out, err) = hocut(&["check", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}\n{out}{err}");
    assert!(out.contains(": ok steps="));
}

#[test]
fn check_reports_steps() {
    let (code, out, _) = hocut(&["check", &golden("reflexivity.hc")]);
    assert_eq!(code, 0);
    assert!(out.contains("iff_refl: ok steps=7"), "{out}");
    assert!(out.contains("leib_refl_o: ok steps=3"), "{out}");
}

#[test]
fn check_failures() {
    let (code, out, _) = hocut(&["check", &golden("failing/bad_eigen.hc")]);
    assert_eq!(code, 1);
    assert!(out.contains("bad: FAIL / eigenvariable-violation"), "{out}");
    let empty = scratch("empty.hc", "");
    assert_eq!(hocut(&["check", empty.to_str().unwrap()]).0, 2);
    let broken = scratch("broken.hc", "const a : o.\nderiv d := (init :concl {a, ~a}\n");
    assert_eq!(hocut(&["check", broken.to_str().unwrap()]).0, 2);
    assert_eq!(hocut(&["check", "/nonexistent/file.hc"]).0, 2);
    assert_eq!(hocut(&["check", &golden("ext_gap.hc"), "--calculus", "Nope"]).0, 2);
    assert_eq!(hocut(&["check", &golden("ext_gap.hc"), "--calculus", "GbCutA"]).0, 2);
    // the same derivation fails outside its calculus
    let (code, out, _) = hocut(&["check", &golden("ext_gap.hc"), "--calculus", "Gb"]);
    assert_eq!(code, 1);
    assert!(out.contains("rule-not-in-calculus"), "{out}");
}

#[test]
fn schema_command() {
    let (code, out, _) = hocut(&["schema", "leibniz@o", "--context", "{~ (a == b @ o)}", "--cutformula", "c"]);
    assert_eq!(code, 0);
    assert!(out.contains("extra=3"), "{out}");
    let (code, out, _) = hocut(&["schema", "boolext", "--context", "{~p, p}", "--cutformula", "c"]);
    assert_eq!(code, 0);
    assert!(out.contains("extra=14 ") && out.contains("premises-check=true"), "{out}");
    rechecks("boolext.hc", &out);
    assert_eq!(hocut(&["schema", "nope", "--context", "{}", "--cutformula", "c"]).0, 2);
    assert_eq!(hocut(&["schema", "trivial", "--context", "{~", "--cutformula", "c"]).0, 2);
}

#[test]
fn schema_with_premise_files() {
    let left = scratch("left.hc", "const p : o.\nderiv l := (orR :concl {p, p | ~p} (init :concl {p, ~p, p | ~p}))\n");
    let right =
        scratch("right.hc", "const p : o.\nderiv r := (orR :concl {~p, p | ~p} (init :concl {p, ~p, p | ~p}))\n");
    let (l, r) = (left.to_str().unwrap(), right.to_str().unwrap());
    let (code, out, _) =
        hocut(&["schema", "andrews@i", "--context", "{p | ~p}", "--cutformula", "p", "--left", l, "--right", r]);
    assert_eq!(code, 0);
    assert!(out.contains("extra=4 ") && out.contains("steps=8"), "{out}");
    rechecks("andrews.hc", &out);
    // premises swapped: neither concludes the expected sequent
    let (code, _, err) =
        hocut(&["schema", "andrews@i", "--context", "{p | ~p}", "--cutformula", "p", "--left", r, "--right", l]);
    assert_eq!(code, 1);
    assert!(err.contains("is required"), "{err}");
    assert_eq!(hocut(&["schema", "trivial", "--context", "{}", "--cutformula", "c", "--left", l]).0, 2);
}

#[test]
fn simulate_command() {
    let (code, out, _) = hocut(&["simulate", &golden("one_cut.hc"), "--realizer", "leibniz@i"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "one_cut: d=3 n=1 k=3 out=5 bound-ok=true");
    let (code, out, _) = hocut(&["simulate", &golden("one_cut.hc"), "--realizer", "leibniz@i", "--emit"]);
    assert_eq!(code, 0);
    rechecks("simulated.hc", &out);
    // the realizer's negation is not among the hypotheses
    let (code, out, _) = hocut(&["simulate", &golden("one_cut.hc"), "--realizer", "boolext"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
    assert_eq!(hocut(&["simulate", &golden("one_cut.hc"), "--realizer", "nope"]).0, 2);
}

#[test]
fn prove_command() {
    let args = ["prove", &golden("ext_gap.hc"), "--goal", "ext_gap", "--max-nodes", "6", "--calculus"];
    let (code, out, _) = hocut(&[&args[..], &["GbFb"]].concat());
    assert_eq!(code, 0);
    assert!(out.contains("steps=5"), "{out}");
    rechecks("proved.hc", &out);
    let (code, out, _) = hocut(&[&args[..], &["GbFbMinus"]].concat());
    assert_eq!(code, 1);
    assert!(out.starts_with("NotFound"), "{out}");
    assert_eq!(hocut(&["prove", &golden("ext_gap.hc"), "--goal", "nope"]).0, 2);
}

#[test]
fn bench_command() {
    let (code, out, _) = hocut(&["bench", "iterdef", "--calculus", "Gb", "--without-cut", "--sizes", "1,2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family=iterdef calculus=Gb");
    assert_eq!(lines[1], "n\tmin-size\texpansions");
    assert!(lines[2].starts_with("1\t12\t") && lines[3].starts_with("2\t28\t"), "{out}");
    let (code, out, _) = hocut(&["bench", "iterdef", "--calculus", "Gb", "--with-cut", "--sizes", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("family=iterdef calculus=GbCut\n"), "{out}");
    assert_eq!(hocut(&["bench", "nope"]).0, 2);
    assert_eq!(hocut(&["bench", "iterdef", "--with-cut", "--without-cut"]).0, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(hocut(&[]).0, 2);
    assert_eq!(hocut(&["frobnicate"]).0, 2);
    assert_eq!(hocut(&["check"]).0, 2);
    assert_eq!(hocut(&["--help"]).0, 0);
}
