//! Parse a problem file and check each derivation in its calculus.

use hocut::calculus::{check_derivation, Calculus};
use hocut::syntax::{parse_problem, print_sequent};

const PROBLEM: &str = "\
const a : o.
const h : i -> o.
const k : i.
seq em { a | ~a }
deriv em in Gb :=
(orR :concl {a | ~a}
  (init :concl {a, ~a, a | ~a}))
deriv inst in Gb :=
(piL :w k :concl {~(!x:i. h x), h k}
  (init :concl {~h k, ~(!x:i. h x), h k}))
# cut is not a rule of Gb
deriv cut in Gb :=
(cut :f a :concl {a | ~a}
  (orR :concl {a, a | ~a} (init :concl {a, ~a, a | ~a}))
  (orR :concl {~a, a | ~a} (init :concl {a, ~a, a | ~a})))
";

fn main() {
    let p = parse_problem(PROBLEM).expect("problem parses");
    for (name, s) in &p.sequents {
        println!("seq {name} = {}", print_sequent(s));
    }
    for nd in &p.derivations {
        let calc = nd.calculus.clone().unwrap_or(Calculus::Gb);
        match check_derivation(&nd.derivation, &calc) {
            Ok(()) => println!("{}: ok steps={}", nd.name, nd.derivation.step_count()),
            Err(e) => println!("{}: FAIL {e}", nd.name),
        }
    }
}
