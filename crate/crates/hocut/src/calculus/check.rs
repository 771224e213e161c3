use std::fmt;

use thiserror::Error;

use crate::kernel::sugar::{as_leibniz, as_not, as_or, as_pi, bool_ext_axiom, func_ext_axiom, leibniz, not, pi};
use crate::kernel::{beta_normalize, Const, Hint, Term, Type};

use super::derivation::{Calculus, Derivation, Rule, RuleKind};
use super::sequent::{check_sentence, SentenceError, Sequent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    RuleNotInCalculus,
    ShapeMismatch,
    EigenvariableViolation,
    NotBetaNormal,
    NotAtomic,
    TypeMismatch,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::RuleNotInCalculus => "rule-not-in-calculus",
            Reason::ShapeMismatch => "shape-mismatch",
            Reason::EigenvariableViolation => "eigenvariable-violation",
            Reason::NotBetaNormal => "not-beta-normal",
            Reason::NotAtomic => "not-atomic",
            Reason::TypeMismatch => "type-mismatch",
        }
    }

    /// Reasons naming a violated side condition beat a plain shape mismatch.
    fn rank(self) -> u8 {
        match self {
            Reason::ShapeMismatch => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A failed node: its path from the root (child indices) and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {reason} ({detail})", render_path(.path))]
pub struct CheckError {
    pub path: Vec<usize>,
    pub reason: Reason,
    pub detail: String,
}

pub fn render_path(path: &[usize]) -> String {
    if path.is_empty() {
        "/".into()
    } else {
        path.iter().map(|i| format!("/{i}")).collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Accept `negInv` and `weak` nodes.
    pub allow_admissible: bool,
}

/// How a node decomposes: principal formulas of the conclusion and the
/// side formulas of each premise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub principal: Vec<Term>,
    pub sides: Vec<Vec<Term>>,
}

/// The rule fits iff principal and side formulas are present and every
/// other formula occurs in the conclusion and in all premises.
pub fn fits(conclusion: &Sequent, principal: &[Term], premises: &[&Sequent], sides: &[Vec<Term>]) -> bool {
    if premises.len() != sides.len() || !principal.iter().all(|f| conclusion.contains(f)) {
        return false;
    }
    for (g, s) in premises.iter().zip(sides) {
        if !s.iter().all(|f| g.contains(f)) {
            return false;
        }
    }
    let everywhere = |f: &Term| premises.iter().all(|g| g.contains(f));
    if !conclusion.iter().filter(|f| !principal.contains(f)).all(everywhere) {
        return false;
    }
    premises
        .iter()
        .zip(sides)
        .all(|(g, s)| g.iter().filter(|f| !s.contains(f)).all(|f| conclusion.contains(f) && everywhere(f)))
}

type Fail = (Reason, String);

struct Search {
    best: Option<Fail>,
}

impl Search {
    fn note(&mut self, r: Reason, msg: impl Into<String>) {
        if self.best.as_ref().is_none_or(|(b, _)| r.rank() > b.rank()) {
            self.best = Some((r, msg.into()));
        }
    }

    fn finish(self, rule: RuleKind) -> Fail {
        self.best.unwrap_or((Reason::ShapeMismatch, format!("no {rule} instance matches")))
    }
}

fn sentence_fail(e: SentenceError) -> Fail {
    match e {
        SentenceError::NotBetaNormal(_) => (Reason::NotBetaNormal, e.to_string()),
        _ => (Reason::TypeMismatch, e.to_string()),
    }
}

/// `Π^α(λX. a X ≐^β b X)` in β-normal form.
pub fn pointwise_leibniz(a: &Term, b: &Term, dom: &Type, cod: &Type) -> Term {
    let x = Term::Bound(0);
    let body = leibniz(Term::app(a.shift(1, 0), x.clone()), Term::app(b.shift(1, 0), x), cod.clone());
    beta_normalize(&pi(dom.clone(), Term::Lam(Hint("X".into()), dom.clone(), body.into())))
}

/// The common head of an equation and its argument pairs with their types.
pub type Decomposition = (Term, Vec<(Term, Term, Type)>);

/// Splits `h A1 .. An ≐^β h B1 .. Bn` (same parameter head `h`).
pub fn decompose_leibniz(f: &Term) -> Option<Decomposition> {
    let (l, r, ty) = as_leibniz(f)?;
    if !ty.is_base() {
        return None;
    }
    let (hl, al) = l.head_args();
    let (hr, ar) = r.head_args();
    if hl != hr || !matches!(hl, Term::Const(Const::Param(..))) || al.is_empty() || al.len() != ar.len() {
        return None;
    }
    let pairs = al
        .iter()
        .zip(&ar)
        .map(|(a, b)| {
            let t = a.type_of().expect("sentence subterm is typed");
            ((*a).clone(), (*b).clone(), t)
        })
        .collect();
    Some((hl.clone(), pairs))
}

fn expected_premises(rule: &Rule) -> Option<usize> {
    Some(match rule {
        Rule::Init => 0,
        Rule::OrL | Rule::Cut { .. } | Rule::CutA { .. } | Rule::PropB => 2,
        Rule::Dec { arity } => *arity,
        _ => 1,
    })
}

/// Determines principal and side formulas of a node, independently of any
/// calculus. For `cutA` the principal is `¬realizer` when one is given.
pub fn analyze(node: &Derivation, realizer: Option<&Term>) -> Result<Shape, Fail> {
    for f in node.conclusion.iter() {
        check_sentence(f).map_err(sentence_fail)?;
    }
    let kind = node.rule.kind();
    if let Some(n) = expected_premises(&node.rule) {
        if node.premises.len() != n {
            return Err((Reason::ShapeMismatch, format!("{kind} expects {n} premises, found {}", node.premises.len())));
        }
    }
    let gamma = &node.conclusion;
    let prem: Vec<&Sequent> = node.premises.iter().map(|p| &p.conclusion).collect();
    let mut search = Search { best: None };
    let ok = |p: Vec<Term>, s: Vec<Vec<Term>>| -> Option<Shape> {
        fits(gamma, &p, &prem, &s).then_some(Shape { principal: p, sides: s })
    };

    match &node.rule {
        Rule::Init => {
            for f in gamma.iter() {
                let nf = not(f.clone());
                if gamma.contains(&nf) {
                    if f.is_atomic() {
                        return Ok(Shape { principal: vec![f.clone(), nf], sides: vec![] });
                    }
                    search.note(Reason::NotAtomic, format!("{f} is not atomic"));
                }
            }
        }
        Rule::Neg => {
            for f in gamma.iter() {
                if let Some(a) = as_not(f).and_then(as_not) {
                    if let Some(s) = ok(vec![f.clone()], vec![vec![a.clone()]]) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::NegInv => {
            for f in gamma.iter() {
                let nnf = not(not(f.clone()));
                if let Some(s) = ok(vec![f.clone()], vec![vec![nnf]]) {
                    return Ok(s);
                }
            }
        }
        Rule::Weak => {
            let p: Vec<Term> = gamma.iter().filter(|f| !prem[0].contains(f)).cloned().collect();
            if let Some(s) = ok(p, vec![vec![]]) {
                return Ok(s);
            }
        }
        Rule::OrL => {
            for f in gamma.iter() {
                if let Some((a, b)) = as_not(f).and_then(as_or) {
                    let sides = vec![vec![not(a.clone())], vec![not(b.clone())]];
                    if let Some(s) = ok(vec![f.clone()], sides) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::OrR => {
            for f in gamma.iter() {
                if let Some((a, b)) = as_or(f) {
                    if let Some(s) = ok(vec![f.clone()], vec![vec![a.clone(), b.clone()]]) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::PiL { witness } => {
            let wty = witness.type_of().map_err(|e| (Reason::TypeMismatch, e.to_string()))?;
            if !witness.is_closed() {
                return Err((Reason::TypeMismatch, format!("witness {witness} is not closed")));
            }
            for f in gamma.iter() {
                if let Some((ty, body)) = as_not(f).and_then(as_pi) {
                    if *ty != wty {
                        search.note(Reason::TypeMismatch, format!("witness has type {wty}, quantifier {ty}"));
                        continue;
                    }
                    let side = not(beta_normalize(&Term::app(body.clone(), witness.clone())));
                    if let Some(s) = ok(vec![f.clone()], vec![vec![side]]) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::PiR { eigen } => {
            let Term::Const(Const::Param(c, cty)) = eigen else {
                return Err((Reason::TypeMismatch, format!("eigen-parameter {eigen} is not a parameter")));
            };
            for f in gamma.iter() {
                if let Some((ty, body)) = as_pi(f) {
                    if ty != cty {
                        search.note(Reason::TypeMismatch, format!("eigen-parameter has type {cty}, quantifier {ty}"));
                        continue;
                    }
                    let side = beta_normalize(&Term::app(body.clone(), eigen.clone()));
                    if let Some(s) = ok(vec![f.clone()], vec![vec![side]]) {
                        if gamma.mentions_param(c) {
                            return Err((
                                Reason::EigenvariableViolation,
                                format!("eigen-parameter {c} occurs in the conclusion"),
                            ));
                        }
                        return Ok(s);
                    }
                }
            }
        }
        Rule::Cut { formula } | Rule::CutA { formula } => {
            check_sentence(formula).map_err(sentence_fail)?;
            let sides = vec![vec![formula.clone()], vec![not(formula.clone())]];
            if matches!(node.rule, Rule::Cut { .. }) {
                if let Some(s) = ok(vec![], sides) {
                    return Ok(s);
                }
            } else {
                let candidates: Vec<Term> = match realizer {
                    Some(a) => vec![not(a.clone())],
                    None => gamma.iter().filter(|f| as_not(f).is_some()).cloned().collect(),
                };
                for p in candidates {
                    if let Some(s) = ok(vec![p], sides.clone()) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::ExtFAx { dom, cod } => {
            if let Some(s) = ok(vec![], vec![vec![not(func_ext_axiom(dom, cod))]]) {
                return Ok(s);
            }
        }
        Rule::ExtBAx => {
            if let Some(s) = ok(vec![], vec![vec![not(bool_ext_axiom())]]) {
                return Ok(s);
            }
        }
        Rule::PropF => {
            for f in gamma.iter() {
                if let Some((a, b, Type::Fun(dom, cod))) = as_leibniz(f) {
                    let side = pointwise_leibniz(&a, &b, &dom, &cod);
                    if let Some(s) = ok(vec![f.clone()], vec![vec![side]]) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::PropB => {
            for f in gamma.iter() {
                if let Some((a, b, Type::O)) = as_leibniz(f) {
                    let sides = vec![vec![not(a.clone()), b.clone()], vec![not(b), a]];
                    if let Some(s) = ok(vec![f.clone()], sides) {
                        return Ok(s);
                    }
                }
            }
        }
        Rule::InitLeib => {
            for g in prem[0].iter() {
                if let Some((a, b, Type::O)) = as_leibniz(g) {
                    let p = vec![not(a.clone()), b.clone()];
                    if let Some(s) = ok(p, vec![vec![g.clone()]]) {
                        if !a.is_atomic() || !b.is_atomic() {
                            search.note(Reason::NotAtomic, format!("{a} or {b} is not atomic"));
                            continue;
                        }
                        return Ok(s);
                    }
                }
            }
        }
        Rule::Dec { arity } => {
            if *arity == 0 {
                return Err((Reason::ShapeMismatch, "dec needs at least one argument".into()));
            }
            for f in gamma.iter() {
                if let Some((_, _, ty)) = as_leibniz(f) {
                    if !ty.is_base() {
                        search.note(Reason::TypeMismatch, format!("dec at non-base type {ty}"));
                        continue;
                    }
                }
                if let Some((_, pairs)) = decompose_leibniz(f) {
                    if pairs.len() != *arity {
                        continue;
                    }
                    let sides = pairs.into_iter().map(|(x, y, t)| vec![leibniz(x, y, t)]).collect();
                    if let Some(s) = ok(vec![f.clone()], sides) {
                        return Ok(s);
                    }
                }
            }
        }
    }
    Err(search.finish(kind))
}

/// Checks one node against `calc`, given its children's conclusions.
pub fn check_node(node: &Derivation, calc: &Calculus, opts: CheckOptions) -> Result<Shape, Fail> {
    let kind = node.rule.kind();
    let allowed = calc.contains(kind) || (opts.allow_admissible && kind.is_admissible_only());
    if !allowed {
        return Err((Reason::RuleNotInCalculus, format!("{kind} is not a rule of {calc}")));
    }
    analyze(node, calc.realizer())
}

/// Checks every node; reports the first failure in pre-order.
pub fn check_derivation(d: &Derivation, calc: &Calculus) -> Result<(), CheckError> {
    check_with(d, calc, CheckOptions::default())
}

pub fn check_with(d: &Derivation, calc: &Calculus, opts: CheckOptions) -> Result<(), CheckError> {
    let mut err = None;
    d.visit(&mut |path, node| {
        if err.is_none() {
            if let Err((reason, detail)) = check_node(node, calc, opts) {
                err = Some(CheckError { path: path.to_vec(), reason, detail });
            }
        }
    });
    err.map_or(Ok(()), Err)
}
