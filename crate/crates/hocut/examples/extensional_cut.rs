//! In the calculus with extensionality axioms, a cut is replaced by an
//! instance of the functional extensionality axiom plus its realizer.

use hocut::calculus::{check_derivation, Calculus, RuleKind};
use hocut::syntax::{parse_problem, print_derivation};
use hocut::transform::eliminate_cut_in_ge;

const PROBLEM: &str = "\
const p, q : o.
deriv d in GbECut :=
(cut :f q :concl {p, ~p}
  (init :concl {p, ~p, q})
  (init :concl {p, ~p, ~q}))
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let d = &p.derivations[0].derivation;
    check_derivation(d, &Calculus::GbECut).unwrap();
    let out = eliminate_cut_in_ge(d).unwrap();
    check_derivation(&out, &Calculus::GbE).unwrap();
    println!("{}", print_derivation(&out));
    println!(
        "d={} n={} out={} cuts-left={}",
        d.step_count(),
        d.count_rule(RuleKind::Cut),
        out.step_count(),
        out.count_rule(RuleKind::Cut)
    );
}
