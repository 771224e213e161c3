//! Remove cuts with the Leibniz realizer: each cut costs at most three
//! extra steps once `¬(a ≐ b)` is a hypothesis.

use hocut::calculus::{check_derivation, Calculus, RuleKind};
use hocut::schemas::schema_by_name;
use hocut::syntax::{parse_problem, print_derivation};
use hocut::transform::{eliminate_cut_a, simulate_cut_rule};

const PROBLEM: &str = "\
const a, b, k : i.
const p : o.
const h : i -> o.
deriv d in GbCut :=
(cut :f h k :concl {~(a == b @ i), p, ~p}
  (cut :f p | h k :concl {~(a == b @ i), p, ~p, h k}
    (init :concl {~(a == b @ i), p, ~p, h k, p | h k})
    (init :concl {~(a == b @ i), p, ~p, h k, ~(p | h k)}))
  (init :concl {~(a == b @ i), p, ~p, ~h k}))
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let d = &p.derivations[0].derivation;
    check_derivation(d, &Calculus::GbCut).unwrap();
    let s = schema_by_name("leibniz@i").unwrap();

    let with_cut_a = simulate_cut_rule(d, &s).unwrap();
    let out = eliminate_cut_a(&with_cut_a, &s).unwrap();
    check_derivation(&out, &Calculus::Gb).unwrap();

    let (size, n) = (d.step_count(), d.count_rule(RuleKind::Cut));
    println!("{}", print_derivation(&out));
    println!("d={size} n={n} k={} out={} bound={}", s.budget, out.step_count(), size + n * s.budget);
}
