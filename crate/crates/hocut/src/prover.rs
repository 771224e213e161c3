//! Bounded backward proof search.
//!
//! Premises always keep the principal formulas, so every premise is a
//! superset of its conclusion and the only possible cycle is an instance
//! whose premise equals its conclusion; those are skipped. Search results
//! then depend only on the sequent, which makes them cacheable: each
//! sequent maps to its smallest derivation, or to the largest bound under
//! which none exists.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::calculus::{instances, Calculus, ContextMode, Derivation, InstancePool, Sequent};
use crate::kernel::sugar::{as_not, as_pi};
use crate::kernel::{fresh_name, Hint, Name, Term, Type};

/// Where piL witnesses come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessPolicy {
    /// Closed subterms of the current sequent, `λX. C` wrappers of its
    /// formulas (vacuous, or abstracting one closed subterm), the seeds,
    /// and one fresh parameter per quantified type.
    #[default]
    SubtermClosure,
    /// The seeds only.
    Explicit,
    /// The seeds plus one fresh parameter per quantified type.
    ExplicitPlusFresh,
}

/// Where cut formulas come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutPool {
    /// Closed formulas occurring in the sequent, and the seeds of type `o`.
    #[default]
    Subformulas,
    /// Atomic closed formulas occurring in the sequent, and the seeds.
    Atoms,
    /// The seeds of type `o` only.
    Seeds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: usize,
    pub max_depth: usize,
    pub policy: WitnessPolicy,
    /// Extra witnesses, also offered as cut formulas when of type `o`.
    pub seeds: Vec<Term>,
    /// Type pairs tried for `extFAx`.
    pub ext_types: Vec<(Type, Type)>,
    pub cut_pool: CutPool,
}

impl SearchBudget {
    pub fn nodes(max_nodes: usize) -> Self {
        SearchBudget {
            max_nodes: max_nodes.max(1),
            max_depth: usize::MAX,
            policy: WitnessPolicy::default(),
            seeds: Vec::new(),
            ext_types: vec![(Type::I, Type::I)],
            cut_pool: CutPool::default(),
        }
    }

    pub fn with_policy(mut self, policy: WitnessPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_seeds(mut self, seeds: impl IntoIterator<Item = Term>) -> Self {
        self.seeds.extend(seeds);
        self
    }

    pub fn with_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no derivation with at most {max_nodes} nodes")]
pub struct NotFoundWithinBudget {
    pub max_nodes: usize,
}

/// Closed subterms, excluding the bare logical constants.
pub fn closed_subterms(t: &Term, out: &mut BTreeSet<Term>) {
    fn go(t: &Term, out: &mut BTreeSet<Term>) {
        if t.is_closed() && !matches!(t, Term::Const(c) if c.is_logical()) {
            out.insert(t.clone());
        }
        match t {
            Term::App(f, a) => {
                go(f, out);
                go(a, out);
            }
            Term::Lam(_, _, b) => go(b, out),
            _ => {}
        }
    }
    go(t, out)
}

/// `c` with every occurrence of the closed term `t` replaced by the bound
/// variable at `depth`.
fn abstract_term(c: &Term, t: &Term, depth: u32) -> Term {
    if c == t {
        return Term::Bound(depth);
    }
    match c {
        Term::App(f, a) => Term::app(abstract_term(f, t, depth), abstract_term(a, t, depth)),
        Term::Lam(h, ty, b) => Term::Lam(h.clone(), ty.clone(), abstract_term(b, t, depth + 1).into()),
        other => other.clone(),
    }
}

/// The piL witness pool for `goal` under `budget`.
pub fn witness_pool(goal: &Sequent, budget: &SearchBudget) -> Vec<Term> {
    let needed: BTreeSet<Type> =
        goal.iter().filter_map(|f| as_not(f).and_then(as_pi)).map(|(ty, _)| ty.clone()).collect();
    let mut pool: BTreeSet<Term> = budget.seeds.iter().cloned().collect();
    if needed.is_empty() {
        return pool.into_iter().collect();
    }
    if budget.policy == WitnessPolicy::SubtermClosure {
        let mut subs = BTreeSet::new();
        for f in goal.iter() {
            closed_subterms(f, &mut subs);
        }
        let formulas: Vec<&Term> = subs.iter().filter(|s| s.type_of().ok() == Some(Type::O)).collect();
        for ty in &needed {
            let (args, cod) = ty.uncurry();
            if args.is_empty() || cod != Type::O {
                continue;
            }
            for c in &formulas {
                let mut w = (*c).clone();
                for a in args.iter().rev() {
                    w = Term::Lam(Hint("X".into()), a.clone(), w.shift(1, 0).into());
                }
                pool.insert(w);
                if args.len() == 1 {
                    let mut inner = BTreeSet::new();
                    closed_subterms(c, &mut inner);
                    for t in inner.iter().filter(|t| *t != *c && t.type_of().ok().as_ref() == Some(&args[0])) {
                        let body = abstract_term(c, t, 0);
                        pool.insert(Term::Lam(Hint("X".into()), args[0].clone(), body.into()));
                    }
                }
            }
        }
        pool.extend(subs);
    }
    if budget.policy != WitnessPolicy::Explicit {
        let mut avoid: BTreeSet<Name> = goal.params().into_keys().collect();
        for s in &pool {
            avoid.extend(s.params().into_keys());
        }
        for ty in &needed {
            let n = fresh_name(ty, &avoid);
            avoid.insert(n.clone());
            pool.insert(Term::param(&n, ty.clone()));
        }
    }
    pool.into_iter().filter(|w| w.type_of().is_ok_and(|t| needed.contains(&t))).collect()
}

fn cut_pool(goal: &Sequent, budget: &SearchBudget) -> Vec<Term> {
    let mut subs = BTreeSet::new();
    if budget.cut_pool != CutPool::Seeds {
        for f in goal.iter() {
            closed_subterms(f, &mut subs);
        }
        if budget.cut_pool == CutPool::Atoms {
            subs.retain(|t| t.is_atomic());
        }
    }
    subs.extend(budget.seeds.iter().cloned());
    subs.into_iter().filter(|t| t.type_of().ok() == Some(Type::O)).collect()
}

/// A search over one calculus and budget; reusable across goals.
pub struct Prover {
    calc: Calculus,
    budget: SearchBudget,
    depth_matters: bool,
    best: HashMap<(Sequent, usize), Derivation>,
    failed: HashMap<(Sequent, usize), usize>,
    /// Number of sequents expanded so far.
    pub expansions: usize,
}

impl Prover {
    pub fn new(calc: Calculus, budget: SearchBudget) -> Self {
        let depth_matters = budget.max_depth < budget.max_nodes;
        Prover { calc, budget, depth_matters, best: HashMap::new(), failed: HashMap::new(), expansions: 0 }
    }

    /// Iterative deepening on the node count.
    pub fn prove(&mut self, goal: &Sequent) -> Result<Derivation, NotFoundWithinBudget> {
        let depth = self.budget.max_depth;
        for n in 1..=self.budget.max_nodes {
            if let Some(d) = self.solve(goal, n, depth) {
                return Ok(d);
            }
        }
        Err(NotFoundWithinBudget { max_nodes: self.budget.max_nodes })
    }

    fn pool(&self, goal: &Sequent) -> InstancePool {
        let needs_cut = self.calc.realizer().is_some() || self.calc.contains(crate::calculus::RuleKind::Cut);
        InstancePool {
            witnesses: witness_pool(goal, &self.budget),
            cut_formulas: if needs_cut { cut_pool(goal, &self.budget) } else { Vec::new() },
            ext_types: self.budget.ext_types.clone(),
            reserved: BTreeSet::new(),
        }
    }

    /// Smallest derivation of `goal` with at most `bound` nodes.
    fn solve(&mut self, goal: &Sequent, bound: usize, depth: usize) -> Option<Derivation> {
        if bound == 0 || depth == 0 {
            return None;
        }
        let key = (goal.clone(), if self.depth_matters { depth } else { 0 });
        if let Some(d) = self.best.get(&key) {
            return (d.step_count() <= bound).then(|| d.clone());
        }
        if self.failed.get(&key).is_some_and(|&b| b >= bound) {
            return None;
        }
        self.expansions += 1;
        let pool = self.pool(goal);
        let mut best: Option<Derivation> = None;
        let mut limit = bound;
        for inst in instances(goal, &self.calc, &pool, ContextMode::Keep) {
            let k = inst.premises.len();
            if 1 + k > limit || inst.premises.iter().any(|p| p == goal) {
                continue;
            }
            let mut remaining = limit - 1;
            let mut kids = Vec::with_capacity(k);
            for (i, p) in inst.premises.iter().enumerate() {
                let reserve = k - i - 1;
                match self.solve(p, remaining - reserve, depth - 1) {
                    Some(d) => {
                        remaining -= d.step_count();
                        kids.push(d);
                    }
                    None => break,
                }
            }
            if kids.len() == k {
                let d = inst.build(kids);
                let size = d.step_count();
                best = Some(d);
                if size == 1 {
                    break;
                }
                limit = size - 1;
            }
        }
        match &best {
            Some(d) => {
                self.best.insert(key, d.clone());
            }
            None => {
                let e = self.failed.entry(key).or_insert(0);
                *e = (*e).max(bound);
            }
        }
        best
    }
}

pub fn prove(goal: &Sequent, calc: &Calculus, budget: &SearchBudget) -> Result<Derivation, NotFoundWithinBudget> {
    Prover::new(calc.clone(), budget.clone()).prove(goal)
}

/// Node count of the smallest derivation within `max_nodes`, or `None`
/// when the bound is exhausted.
pub fn minimal_proof_size(goal: &Sequent, calc: &Calculus, max_nodes: usize) -> Option<usize> {
    prove(goal, calc, &SearchBudget::nodes(max_nodes)).ok().map(|d| d.step_count())
}
