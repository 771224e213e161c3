//! Sequents, the rules of every calculus, and the derivation checker.

mod check;
mod derivation;
mod instances;
mod sequent;

pub use check::{
    analyze, check_derivation, check_node, check_with, decompose_leibniz, fits, pointwise_leibniz, render_path,
    CheckError, CheckOptions, Decomposition, Reason, Shape,
};
pub use derivation::{Calculus, Derivation, Rule, RuleKind};
pub use instances::{
    applicable_rule_instances, instances, refute_applicability, Applicability, ContextMode, InstancePool, RuleInstance,
};
pub use sequent::{check_sentence, SentenceError, Sequent};

/// Number of nodes of `d`.
pub fn step_count(d: &Derivation) -> usize {
    d.step_count()
}
