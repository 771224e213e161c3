//! Weakening and double-negation inversion as derivation transformers that
//! never add steps. Weakening renames an eigen-parameter it would capture.

use hocut::calculus::{check_derivation, Calculus};
use hocut::kernel::sugar::not;
use hocut::kernel::{Term, Type};
use hocut::syntax::{parse_problem, print_derivation};
use hocut::transform::{neg_invert, weaken};

const PROBLEM: &str = "\
const h : i -> o.
const c1 : i.
const a : o.
deriv all in Gb :=
(piR :c c1 :concl {!x:i. ~h x | h x}
  (orR :concl {!x:i. ~h x | h x, ~h c1 | h c1}
    (init :concl {!x:i. ~h x | h x, ~h c1 | h c1, ~h c1, h c1})))
deriv dn in Gb :=
(neg :concl {~~a, ~a}
  (init :concl {a, ~a, ~~a}))
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let all = &p.derivation("all").unwrap().derivation;
    // h c1 mentions the eigen-parameter; the transformer picks another
    let extra = Term::app(Term::param("h", Type::I.pred()), Term::param("c1", Type::I));
    let w = weaken(all, &[extra]).unwrap();
    check_derivation(&w, &Calculus::Gb).unwrap();
    println!("{}\nsteps {} -> {}\n", print_derivation(&w), all.step_count(), w.step_count());

    let dn = &p.derivation("dn").unwrap().derivation;
    let a = Term::param("a", Type::O);
    let inv = neg_invert(dn, &a).unwrap();
    check_derivation(&inv, &Calculus::Gb).unwrap();
    println!("{}\nsteps {} -> {}", print_derivation(&inv), dn.step_count(), inv.step_count());
    assert!(!inv.conclusion.contains(&not(not(a))));
}
