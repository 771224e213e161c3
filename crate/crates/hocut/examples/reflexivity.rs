//! The two reflexivity derivations every schema builds on: `A ⇔ A` for an
//! atom in seven steps, and `B ≐ B` in three.

use hocut::calculus::{check_derivation, Calculus, Sequent};
use hocut::kernel::{Term, Type};
use hocut::schemas::{build_iff_refl, build_leib_refl};
use hocut::syntax::print_derivation;

fn main() {
    let a = Term::param("a", Type::O);
    let f = Term::param("f", Type::fun(Type::I, Type::I));
    let ctx = Sequent::empty();

    let iff = build_iff_refl(&ctx, &a).unwrap();
    check_derivation(&iff, &Calculus::Gb).unwrap();
    println!("{}\nsteps={}\n", print_derivation(&iff), iff.step_count());

    let leib = build_leib_refl(&ctx, &f, &Type::fun(Type::I, Type::I)).unwrap();
    check_derivation(&leib, &Calculus::Gb).unwrap();
    println!("{}\nsteps={}\n", print_derivation(&leib), leib.step_count());

    // only atoms qualify for the seven-step form
    let compound = hocut::kernel::sugar::not(a);
    println!("non-atomic: {}", build_iff_refl(&ctx, &compound).unwrap_err());
}
