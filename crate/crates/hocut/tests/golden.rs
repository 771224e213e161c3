//! The shipped corpus under `golden/`. Files are regenerated from the
//! library and compared byte for byte; `HOCUT_BLESS=1` rewrites them.

use std::path::{Path, PathBuf};

use hocut::calculus::{Calculus, Derivation, Rule, Sequent};
use hocut::cli;
use hocut::kernel::sugar::{leibniz, not};
use hocut::kernel::{Term, Type};
use hocut::prover::{prove, SearchBudget};
use hocut::schemas::{build_iff_refl, build_leib_refl, builtin_schemas};
use hocut::syntax::{parse_problem, print_problem, NamedDerivation, SourceProblem};

const SCHEMA_CONTEXT: &str = "{~p, p}";
const SCHEMA_CUT: &str = "r";

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn run(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("hocut").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn named(name: &str, calc: Calculus, d: Derivation) -> NamedDerivation {
    NamedDerivation { name: name.into(), calculus: Some(calc), derivation: d }
}

fn problem(seqs: Vec<(&str, Sequent)>, ds: Vec<NamedDerivation>) -> String {
    let p = SourceProblem {
        signature: Default::default(),
        sequents: seqs.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
        derivations: ds,
    };
    print_problem(&p)
}

fn reflexivity() -> String {
    let a = Term::param("a", Type::O);
    let k = Term::param("k", Type::I);
    let ds = vec![
        named("iff_refl", Calculus::Gb, build_iff_refl(&Sequent::empty(), &a).unwrap()),
        named("leib_refl_o", Calculus::Gb, build_leib_refl(&Sequent::empty(), &a, &Type::O).unwrap()),
        named("leib_refl_i", Calculus::Gb, build_leib_refl(&Sequent::empty(), &k, &Type::I).unwrap()),
    ];
    problem(vec![], ds)
}

fn ext_gap() -> String {
    let (a, b) = (Term::param("a", Type::O), Term::param("b", Type::O));
    let q = Term::param("q", Type::O.pred());
    let goal = Sequent::trusted([
        not(a.clone()),
        not(b),
        not(Term::app(q.clone(), a)),
        Term::app(q, Term::param("b", Type::O)),
    ]);
    let d = prove(&goal, &Calculus::GbFb, &SearchBudget::nodes(6)).unwrap();
    problem(vec![("ext_gap", goal)], vec![named("ext_gap_fb", Calculus::GbFb, d)])
}

/// A cut on `q` below two axioms, with `¬(a ≐ b)` available as realizer.
fn one_cut() -> (Sequent, Derivation) {
    let (p, q) = (Term::param("p", Type::O), Term::param("q", Type::O));
    let eq = leibniz(Term::param("a", Type::I), Term::param("b", Type::I), Type::I);
    let delta = Sequent::trusted([not(eq), not(p.clone()), p]);
    let d = Derivation::new(
        Rule::Cut { formula: q.clone() },
        delta.clone(),
        vec![Derivation::leaf(Rule::Init, delta.with(q.clone())), Derivation::leaf(Rule::Init, delta.with(not(q)))],
    );
    (delta, d)
}

fn one_cut_file() -> String {
    let (_, d) = one_cut();
    problem(vec![], vec![named("one_cut", Calculus::GbCut, d)])
}

const BAD_EIGEN: &str = "\
# piR picks an eigen-parameter that occurs in its conclusion
const a : o.
const q : o -> o.
deriv bad in Gb :=
(piR :c q :concl {q a, a == a @ o}
  (orR :concl {q a, ~q a | q a}
    (init :concl {q a, ~q a})))
";

fn expected() -> Vec<(PathBuf, String)> {
    let r = root();
    let mut files = vec![
        (r.join("reflexivity.hc"), reflexivity()),
        (r.join("ext_gap.hc"), ext_gap()),
        (r.join("one_cut.hc"), one_cut_file()),
        (r.join("failing/bad_eigen.hc"), BAD_EIGEN.to_string()),
    ];
    for s in builtin_schemas() {
        let (code, out) = run(&["schema", &s.name, "--context", SCHEMA_CONTEXT, "--cutformula", SCHEMA_CUT]);
        assert_eq!(code, 0, "{}", s.name);
        let file = s.name.replace(['@', ','], "_");
        files.push((r.join(format!("schemas/{file}.hc")), out));
    }
    files
}

#[test]
fn corpus_matches_generators() {
    let bless = std::env::var_os("HOCUT_BLESS").is_some();
    for (path, text) in expected() {
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{} is stale; rerun with HOCUT_BLESS=1", path.display());
    }
}

fn corpus(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            if p.file_name().unwrap() != "failing" {
                out.extend(corpus(&p));
            }
        } else if p.extension().is_some_and(|x| x == "hc") {
            out.push(p);
        }
    }
    out.sort();
    out
}

#[test]
fn corpus_checks() {
    let files = corpus(&root());
    assert!(files.len() >= 13, "{files:?}");
    for f in files {
        let (code, out) = run(&["check", f.to_str().unwrap()]);
        assert_eq!(code, 0, "{}: {out}", f.display());
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn bad_eigen_is_rejected() {
    let f = root().join("failing/bad_eigen.hc");
    let (code, out) = run(&["check", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("eigenvariable-violation"), "{out}");
}

#[test]
fn step_counts_in_corpus() {
    let text = std::fs::read_to_string(root().join("reflexivity.hc")).unwrap();
    let p = parse_problem(&text).unwrap();
    let steps: Vec<usize> = p.derivations.iter().map(|d| d.derivation.step_count()).collect();
    assert_eq!(steps, [7, 3, 3]);
    let text = std::fs::read_to_string(root().join("schemas/boolext.hc")).unwrap();
    assert!(text.contains("extra=14"));
}

#[test]
fn boolext_follows_the_published_tree() {
    let text = std::fs::read_to_string(root().join("schemas/boolext.hc")).unwrap();
    let d = parse_problem(&text).unwrap().derivations.remove(0).derivation;
    let mut rules = Vec::new();
    d.visit(&mut |_, n| rules.push(n.rule.kind().to_string()));
    // two instantiations, orL, then ¬¬(a ⇔ a) over the seven-step
    // reflexivity and the three-step Leibniz cut over the premises
    let expected = "piL piL orL neg orL neg orR init neg orR init piL orL neg init init";
    assert_eq!(rules.join(" "), expected);
}
