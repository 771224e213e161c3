//! Tree-to-tree transformers: parameter renaming, weakening, negation
//! inversion, and the cut simulation and elimination passes.
//!
//! Renaming and weakening share one recursion: every node's conclusion is
//! mapped through a renaming `θ` and enlarged by a fixed set `E`. Because
//! each rule only constrains its principal and side formulas, the image of a
//! checking node still checks; the one exception is a `piR` whose
//! eigen-parameter would now occur below it, which is repaired by choosing a
//! fresh eigen-parameter and extending `θ` for the subtree.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::calculus::{analyze, check_sentence, fits, render_path, Derivation, Rule, RuleKind, SentenceError, Sequent};
use crate::kernel::sugar::{func_ext_axiom, not};
use crate::kernel::{fresh_name, Const, Name, Term, Type};
use crate::schemas::{CutStrongSchema, SchemaError, SchemaKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("invalid extra formula: {0}")]
    InvalidExtra(SentenceError),
    #[error("{0} does not occur in the conclusion")]
    NotPresent(Term),
    #[error("{0} is not in the end sequent, so it cannot realize cuts")]
    NotCutStrong(Term),
    #[error("cutA node at {path} lacks {expected}")]
    SchemaMismatch { path: String, expected: Term },
    #[error("renaming {from} to {to} changes its type from {from_ty} to {to_ty}")]
    IllTypedRenaming { from: Name, to: Name, from_ty: Type, to_ty: Type },
    #[error("schema: {0}")]
    Schema(Box<SchemaError>),
}

impl From<SchemaError> for TransformError {
    fn from(e: SchemaError) -> Self {
        TransformError::Schema(Box::new(e))
    }
}

/// A finite map on parameter names. Types are carried by the parameters
/// themselves, so a renaming is type-preserving when no target name is used
/// at a different type; [`rename_params`] checks this.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamRenaming(pub BTreeMap<Name, Name>);

impl ParamRenaming {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(from: &str, to: &str) -> Self {
        ParamRenaming(BTreeMap::from([(from.into(), to.into())]))
    }

    pub fn apply(&self, t: &Term) -> Term {
        t.rename_params(&self.0)
    }
}

fn rename_seq(s: &Sequent, theta: &BTreeMap<Name, Name>) -> Sequent {
    if theta.is_empty() {
        return s.clone();
    }
    s.iter().map(|f| f.rename_params(theta)).collect()
}

struct Reshape<'a> {
    extra: &'a [Term],
    cut_to_cut_a: bool,
    avoid: BTreeSet<Name>,
}

impl Reshape<'_> {
    fn go(&mut self, d: &Derivation, theta: &BTreeMap<Name, Name>) -> Derivation {
        let conclusion = rename_seq(&d.conclusion, theta).with_all(self.extra.iter().cloned());
        let mut sub = theta.clone();
        let rule = match &d.rule {
            Rule::PiR { eigen: Term::Const(Const::Param(c, ty)) } => {
                let keep = !conclusion.mentions_param(c);
                let e: Name = if keep { c.clone() } else { fresh_name(ty, &self.avoid) };
                self.avoid.insert(e.clone());
                if e == *c {
                    sub.remove(c);
                } else {
                    sub.insert(c.clone(), e.clone());
                }
                Rule::PiR { eigen: Term::param(&e, ty.clone()) }
            }
            Rule::Cut { formula } if self.cut_to_cut_a => Rule::CutA { formula: formula.rename_params(theta) },
            r => r.rename_params(theta),
        };
        let premises = d.premises.iter().map(|p| self.go(p, &sub)).collect();
        Derivation::new(rule, conclusion, premises)
    }
}

fn reshape(d: &Derivation, theta: &BTreeMap<Name, Name>, extra: &[Term], cut_to_cut_a: bool) -> Derivation {
    let mut avoid: BTreeSet<Name> = d.params().into_keys().collect();
    avoid.extend(theta.values().cloned());
    for f in extra {
        avoid.extend(f.params().into_keys());
    }
    Reshape { extra, cut_to_cut_a, avoid }.go(d, theta)
}

/// Applies `θ` to every formula and parameter of `d`; eigen-parameters that
/// would clash are replaced by fresh ones.
pub fn rename_params(d: &Derivation, theta: &ParamRenaming) -> Result<Derivation, TransformError> {
    let params = d.params();
    for (from, to) in &theta.0 {
        if let (Some(a), Some(b)) = (params.get(from), params.get(to)) {
            if a != b {
                return Err(TransformError::IllTypedRenaming {
                    from: from.clone(),
                    to: to.clone(),
                    from_ty: a.clone(),
                    to_ty: b.clone(),
                });
            }
        }
    }
    Ok(reshape(d, &theta.0, &[], false))
}

/// Adds `extra` to every sequent of `d`. The node count does not change.
pub fn weaken(d: &Derivation, extra: &[Term]) -> Result<Derivation, TransformError> {
    for f in extra {
        check_sentence(f).map_err(TransformError::InvalidExtra)?;
    }
    if extra.iter().all(|f| d.conclusion.contains(f)) && !extra.is_empty() {
        // a no-op unless some eigen-parameter clashes, which it cannot
        // since `extra` already occurs in the conclusion
        return Ok(d.clone());
    }
    Ok(reshape(d, &BTreeMap::new(), extra, false))
}

/// Weakens `d` so that it concludes exactly `target` (a superset).
pub(crate) fn weaken_to(d: &Derivation, target: &Sequent) -> Result<Derivation, TransformError> {
    let extra: Vec<Term> = target.iter().filter(|f| !d.conclusion.contains(f)).cloned().collect();
    if extra.is_empty() {
        return Ok(d.clone());
    }
    weaken(d, &extra)
}

/// Turns a derivation of `Δ*¬¬A` into one of `Δ*A` that is no larger.
///
/// A `neg` node with principal `¬¬A` is dropped; any other node keeps its
/// rule with `¬¬A` replaced by `A` throughout; a branch that no longer
/// mentions `¬¬A` is weakened by `A`.
pub fn neg_invert(d: &Derivation, a: &Term) -> Result<Derivation, TransformError> {
    let nna = not(not(a.clone()));
    if !d.conclusion.contains(&nna) {
        return Err(TransformError::NotPresent(nna));
    }
    invert(d, a, &nna)
}

fn invert(d: &Derivation, a: &Term, nna: &Term) -> Result<Derivation, TransformError> {
    if !d.conclusion.contains(nna) {
        return weaken(d, std::slice::from_ref(a));
    }
    if d.rule.kind() == RuleKind::Neg {
        let prem = &d.premises[0].conclusion;
        if fits(&d.conclusion, std::slice::from_ref(nna), &[prem], &[vec![a.clone()]]) {
            return invert(&d.premises[0], a, nna);
        }
    }
    // a premise that needs ¬¬A as its side formula keeps it and only gains A
    let sides = analyze(d, None).map(|s| s.sides).unwrap_or_default();
    let conclusion = d.conclusion.without(nna).with(a.clone());
    let premises = d
        .premises
        .iter()
        .enumerate()
        .map(|(i, p)| match sides.get(i) {
            Some(s) if s.contains(nna) => weaken(p, std::slice::from_ref(a)),
            _ => invert(p, a, nna),
        })
        .collect::<Result<_, _>>()?;
    Ok(Derivation::new(d.rule.clone(), conclusion, premises))
}

/// Rewrites every `cut` as `cutA` by keeping `¬A` in every sequent. The
/// node count is unchanged; the result lives in `GbCutA(A)`.
pub fn simulate_cut_rule(d: &Derivation, realizer: &CutStrongSchema) -> Result<Derivation, TransformError> {
    let na = not(realizer.realizer.clone());
    if !d.conclusion.contains(&na) {
        return Err(TransformError::NotCutStrong(na));
    }
    Ok(reshape(d, &BTreeMap::new(), &[na], true))
}

/// Replaces each `cutA` node by the schema's realizing derivation, adding
/// at most `k` nodes per cut. The result lives in `Gb`.
pub fn eliminate_cut_a(d: &Derivation, schema: &CutStrongSchema) -> Result<Derivation, TransformError> {
    let na = not(schema.realizer.clone());
    let mut path = Vec::new();
    eliminate(d, &mut path, &mut |node, path, kids| {
        let Rule::CutA { formula } = &node.rule else { return Ok(None) };
        if !node.conclusion.contains(&na) {
            return Err(TransformError::SchemaMismatch { path: render_path(path), expected: na.clone() });
        }
        let gamma = &node.conclusion;
        let dc = weaken_to(&kids[0], &gamma.with(formula.clone()))?;
        let dnc = weaken_to(&kids[1], &gamma.with(not(formula.clone())))?;
        Ok(Some(schema.realize(gamma, formula, &dc, &dnc)?))
    })
}

/// Replaces each `cut` in a `GbE`-plus-cut derivation by `extFAx` at
/// `i -> i` followed by the functional extensionality realizer: 12 extra
/// nodes per cut.
pub fn eliminate_cut_in_ge(d: &Derivation) -> Result<Derivation, TransformError> {
    let schema = CutStrongSchema::new(SchemaKind::FuncExt { dom: Type::I, cod: Type::I });
    let nf = not(func_ext_axiom(&Type::I, &Type::I));
    let mut path = Vec::new();
    eliminate(d, &mut path, &mut |node, _, kids| {
        let Rule::Cut { formula } = &node.rule else { return Ok(None) };
        let delta = node.conclusion.with(nf.clone());
        let dc = weaken_to(&kids[0], &delta.with(formula.clone()))?;
        let dnc = weaken_to(&kids[1], &delta.with(not(formula.clone())))?;
        let body = schema.realize(&delta, formula, &dc, &dnc)?;
        Ok(Some(Derivation::new(Rule::ExtFAx { dom: Type::I, cod: Type::I }, node.conclusion.clone(), vec![body])))
    })
}

type Replace<'a> = dyn FnMut(&Derivation, &[usize], &[Derivation]) -> Result<Option<Derivation>, TransformError> + 'a;

/// Bottom-up rewrite: children first, then `replace` may substitute the
/// node (given its rewritten children).
fn eliminate(d: &Derivation, path: &mut Vec<usize>, replace: &mut Replace<'_>) -> Result<Derivation, TransformError> {
    let mut kids = Vec::with_capacity(d.premises.len());
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        kids.push(eliminate(p, path, replace)?);
        path.pop();
    }
    if let Some(out) = replace(d, path, &kids)? {
        return Ok(out);
    }
    Ok(Derivation::new(d.rule.clone(), d.conclusion.clone(), kids))
}
