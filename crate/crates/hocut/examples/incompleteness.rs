//! `{¬a, ¬b, ¬(q a), q b}` is valid once Boolean extensionality holds, but
//! without the rule tying equality to the decomposition of `q a ≐ q b`
//! nothing concludes it.

use hocut::calculus::{refute_applicability, Applicability, Calculus};
use hocut::prover::{prove, SearchBudget};
use hocut::syntax::{parse_problem, print_derivation};

fn main() {
    let p = parse_problem("const a, b : o.\nconst q : o -> o.\nseq g { ~a, ~b, ~(q a), q b }\n").unwrap();
    let goal = p.sequent("g").unwrap();

    match refute_applicability(goal, &Calculus::GbFbMinus) {
        Applicability::Empty { checked_rules } => {
            println!("GbFbMinus: no rule applies ({} rules tried)", checked_rules.len())
        }
        Applicability::Instances(is) => println!("GbFbMinus: {} instances", is.len()),
    }
    let budget = SearchBudget::nodes(6);
    let d = prove(goal, &Calculus::GbFb, &budget).unwrap();
    println!("GbFb: {} steps\n{}", d.step_count(), print_derivation(&d));
    println!("GbFbMinus search: {:?}", prove(goal, &Calculus::GbFbMinus, &budget).err());
}
