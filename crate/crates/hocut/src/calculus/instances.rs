use std::collections::BTreeSet;

use crate::kernel::sugar::{as_leibniz, as_not, as_or, as_pi, bool_ext_axiom, func_ext_axiom, leibniz, not};
use crate::kernel::{beta_normalize, fresh_name, Name, Term, Type};

use super::check::{decompose_leibniz, pointwise_leibniz};
use super::derivation::{Calculus, Derivation, Rule, RuleKind};
use super::sequent::Sequent;

/// A rule application read backwards from its conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleInstance {
    pub rule: Rule,
    pub conclusion: Sequent,
    pub premises: Vec<Sequent>,
}

impl RuleInstance {
    pub fn build(&self, premises: Vec<Derivation>) -> Derivation {
        debug_assert_eq!(premises.len(), self.premises.len());
        Derivation::new(self.rule.clone(), self.conclusion.clone(), premises)
    }
}

/// Which premise contexts to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ContextMode {
    /// Keep the principal formulas in the premises (the only variant a
    /// complete backward search needs).
    #[default]
    Keep,
    /// Every subset of the principal formulas may be dropped.
    All,
}

/// Candidate terms for the rules that are not determined by the goal.
#[derive(Debug, Clone, Default)]
pub struct InstancePool {
    /// piL witnesses; filtered by type.
    pub witnesses: Vec<Term>,
    /// cut / cutA formulas.
    pub cut_formulas: Vec<Term>,
    /// Type pairs for extFAx.
    pub ext_types: Vec<(Type, Type)>,
    /// Names piR must not pick besides those of the goal.
    pub reserved: BTreeSet<Name>,
}

impl InstancePool {
    pub fn witnesses(ws: impl IntoIterator<Item = Term>) -> Self {
        InstancePool { witnesses: ws.into_iter().collect(), ..Default::default() }
    }
}

/// All instances concluding exactly `goal`, principal formulas kept in the
/// premises; piL is complete relative to `pool`. Formulas of the pool are
/// also offered as cut formulas.
pub fn applicable_rule_instances(goal: &Sequent, calc: &Calculus, pool: &[Term]) -> Vec<RuleInstance> {
    let p = InstancePool {
        witnesses: pool.to_vec(),
        cut_formulas: pool.iter().filter(|t| t.type_of().ok() == Some(Type::O)).cloned().collect(),
        ext_types: vec![(Type::I, Type::I)],
        reserved: BTreeSet::new(),
    };
    instances(goal, calc, &p, ContextMode::All)
}

fn variants(goal: &Sequent, principal: &[Term], sides: Vec<Vec<Term>>, mode: ContextMode) -> Vec<Vec<Sequent>> {
    let base = principal.iter().fold(goal.clone(), |s, f| s.without(f));
    let masks: Vec<u32> = match mode {
        ContextMode::Keep => vec![(1u32 << principal.len()) - 1],
        ContextMode::All => (0..(1u32 << principal.len())).rev().collect(),
    };
    let mut out: Vec<Vec<Sequent>> = Vec::new();
    for m in masks {
        let ctx = principal
            .iter()
            .enumerate()
            .filter(|(i, _)| m & (1 << i) != 0)
            .fold(base.clone(), |s, (_, f)| s.with(f.clone()));
        let prem: Vec<Sequent> = sides.iter().map(|s| ctx.with_all(s.iter().cloned())).collect();
        if !out.contains(&prem) {
            out.push(prem);
        }
    }
    out
}

/// Instances for the rules of `calc` in the fixed search order.
pub fn instances(goal: &Sequent, calc: &Calculus, pool: &InstancePool, mode: ContextMode) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    let mut push = |rule: Rule, principal: &[Term], sides: Vec<Vec<Term>>| {
        for premises in variants(goal, principal, sides.clone(), mode) {
            out.push(RuleInstance { rule: rule.clone(), conclusion: goal.clone(), premises });
        }
    };
    let has = |k| calc.contains(k);

    if has(RuleKind::Init) {
        for f in goal.iter() {
            if f.is_atomic() && goal.contains(&not(f.clone())) {
                push(Rule::Init, &[], vec![]);
                break;
            }
        }
    }
    if has(RuleKind::InitLeib) {
        for na in goal.iter() {
            let Some(a) = as_not(na) else { continue };
            if !a.is_atomic() {
                continue;
            }
            for b in goal.iter().filter(|b| b.is_atomic()) {
                let side = leibniz(a.clone(), b.clone(), Type::O);
                push(Rule::InitLeib, &[na.clone(), b.clone()], vec![vec![side]]);
            }
        }
    }
    if has(RuleKind::Neg) {
        for f in goal.iter() {
            if let Some(a) = as_not(f).and_then(as_not) {
                push(Rule::Neg, std::slice::from_ref(f), vec![vec![a.clone()]]);
            }
        }
    }
    if has(RuleKind::OrR) {
        for f in goal.iter() {
            if let Some((a, b)) = as_or(f) {
                push(Rule::OrR, std::slice::from_ref(f), vec![vec![a.clone(), b.clone()]]);
            }
        }
    }
    if has(RuleKind::OrL) {
        for f in goal.iter() {
            if let Some((a, b)) = as_not(f).and_then(as_or) {
                push(Rule::OrL, std::slice::from_ref(f), vec![vec![not(a.clone())], vec![not(b.clone())]]);
            }
        }
    }
    if has(RuleKind::PropB) {
        for f in goal.iter() {
            if let Some((a, b, Type::O)) = as_leibniz(f) {
                push(Rule::PropB, std::slice::from_ref(f), vec![vec![not(a.clone()), b.clone()], vec![not(b), a]]);
            }
        }
    }
    if has(RuleKind::PropF) {
        for f in goal.iter() {
            if let Some((a, b, Type::Fun(d, c))) = as_leibniz(f) {
                push(Rule::PropF, std::slice::from_ref(f), vec![vec![pointwise_leibniz(&a, &b, &d, &c)]]);
            }
        }
    }
    if has(RuleKind::Dec) {
        for f in goal.iter() {
            if let Some((_, pairs)) = decompose_leibniz(f) {
                let n = pairs.len();
                let sides = pairs.into_iter().map(|(x, y, t)| vec![leibniz(x, y, t)]).collect();
                push(Rule::Dec { arity: n }, std::slice::from_ref(f), sides);
            }
        }
    }
    if has(RuleKind::PiR) {
        let mut avoid: BTreeSet<Name> = goal.params().into_keys().collect();
        avoid.extend(pool.reserved.iter().cloned());
        for f in goal.iter() {
            if let Some((ty, body)) = as_pi(f) {
                let c = Term::param(&fresh_name(ty, &avoid), ty.clone());
                let side = beta_normalize(&Term::app(body.clone(), c.clone()));
                push(Rule::PiR { eigen: c }, std::slice::from_ref(f), vec![vec![side]]);
            }
        }
    }
    if has(RuleKind::PiL) {
        for f in goal.iter() {
            if let Some((ty, body)) = as_not(f).and_then(as_pi) {
                for w in pool.witnesses.iter().filter(|w| w.type_of().ok().as_ref() == Some(ty) && w.is_closed()) {
                    let side = not(beta_normalize(&Term::app(body.clone(), w.clone())));
                    push(Rule::PiL { witness: w.clone() }, std::slice::from_ref(f), vec![vec![side]]);
                }
            }
        }
    }
    if has(RuleKind::ExtFAx) {
        for (d, c) in &pool.ext_types {
            push(Rule::ExtFAx { dom: d.clone(), cod: c.clone() }, &[], vec![vec![not(func_ext_axiom(d, c))]]);
        }
    }
    if has(RuleKind::ExtBAx) {
        push(Rule::ExtBAx, &[], vec![vec![not(bool_ext_axiom())]]);
    }
    if has(RuleKind::Cut) {
        for c in &pool.cut_formulas {
            push(Rule::Cut { formula: c.clone() }, &[], vec![vec![c.clone()], vec![not(c.clone())]]);
        }
    }
    if has(RuleKind::CutA) {
        let na = not(calc.realizer().expect("cutA calculus has a realizer").clone());
        if goal.contains(&na) {
            for c in &pool.cut_formulas {
                push(
                    Rule::CutA { formula: c.clone() },
                    std::slice::from_ref(&na),
                    vec![vec![c.clone()], vec![not(c.clone())]],
                );
            }
        }
    }
    out
}

/// Result of [`refute_applicability`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    /// No rule of the calculus concludes the goal, for any witness pool:
    /// every pool-free rule was enumerated completely, and piL needs a
    /// `¬Π` formula that the goal lacks.
    Empty {
        checked_rules: Vec<RuleKind>,
    },
    Instances(Vec<RuleInstance>),
}

/// Decides whether any rule instance concludes `goal`.
pub fn refute_applicability(goal: &Sequent, calc: &Calculus) -> Applicability {
    let has_neg_pi = goal.iter().any(|f| as_not(f).and_then(as_pi).is_some());
    let mut pool = InstancePool::default();
    if has_neg_pi {
        // any witness shows piL applies
        for f in goal.iter() {
            if let Some((ty, _)) = as_not(f).and_then(as_pi) {
                pool.witnesses.push(Term::param(&fresh_name(ty, &goal.params().into_keys().collect()), ty.clone()));
            }
        }
    }
    let unbounded = [RuleKind::Cut, RuleKind::CutA, RuleKind::ExtFAx];
    if unbounded.iter().any(|k| calc.contains(*k)) {
        // cut and extFAx apply to every goal
        pool.cut_formulas.push(Term::param("b1", Type::O));
        pool.ext_types.push((Type::I, Type::I));
    }
    let found = instances(goal, calc, &pool, ContextMode::All);
    if found.is_empty() {
        Applicability::Empty { checked_rules: calc.rules() }
    } else {
        Applicability::Instances(found)
    }
}
