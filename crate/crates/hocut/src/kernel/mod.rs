//! Simply typed λ-calculus over `o` and `i` with `¬`, `∨` and `Π^α`.

mod normalize;
mod signature;
pub mod sugar;
mod term;
mod types;

pub use normalize::{beta_eta_normalize, beta_normalize, beta_step, normalize_with, Strategy};
pub use signature::{fresh_name, fresh_param, Signature};
pub use term::{name, Const, Hint, Name, Term, TypeError};
pub use types::Type;

/// `α`-equality; the term representation makes this structural.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b
}
