//! Every builtin realizer simulates a cut on `C` at its fixed price.

use hocut::calculus::{check_derivation, Calculus, Derivation, Rule, Sequent};
use hocut::kernel::sugar::{not, or};
use hocut::kernel::{Term, Type};
use hocut::schemas::builtin_schemas;

fn main() {
    let (p, c) = (Term::param("p", Type::O), Term::param("c", Type::O));
    // Δ = {p ∨ ¬p}; both premises take two steps
    let delta = Sequent::trusted([or(p.clone(), not(p.clone()))]);
    let premise = |side: Term| {
        let goal = delta.with(side);
        let top = goal.with(p.clone()).with(not(p.clone()));
        Derivation::new(Rule::OrR, goal, vec![Derivation::leaf(Rule::Init, top)])
    };
    let (dc, dnc) = (premise(c.clone()), premise(not(c.clone())));

    println!("schema\tk\textra\tsteps");
    for s in builtin_schemas() {
        let d = s.realize(&delta, &c, &dc, &dnc).unwrap();
        check_derivation(&d, &Calculus::Gb).unwrap();
        let extra = d.step_count() - dc.step_count() - dnc.step_count();
        println!("{}\t{}\t{extra}\t{}", s.name, s.budget, d.step_count());
    }
}
