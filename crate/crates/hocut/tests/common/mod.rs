//! Seeded generators shared by the property suites and the acceptance run.
#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};

use hocut::calculus::{Derivation, Rule, Sequent};
use hocut::kernel::sugar::{as_not, as_or, as_pi, forall, not, or};
use hocut::kernel::{beta_normalize, fresh_param, Const, Hint, Name, Signature, Term, Type};

pub fn rng(seed: u64) -> TestRng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    TestRng::from_seed(RngAlgorithm::ChaCha, &bytes)
}

/// Parameters random terms are built from. None of them is used by a
/// builtin schema.
pub fn params() -> Vec<(&'static str, Type)> {
    let i = Type::I;
    vec![
        ("p0", Type::O),
        ("p1", Type::O),
        ("p2", Type::O),
        ("p3", Type::O),
        ("k0", i.clone()),
        ("k1", i.clone()),
        ("g", Type::fun(i.clone(), i.clone())),
        ("h", i.clone().pred()),
        ("u", Type::O.pred()),
        ("r", Type::curried(&[i.clone(), i.clone()], Type::O)),
    ]
}

pub fn signature() -> Signature {
    let mut s = Signature::new();
    for (n, t) in params() {
        s.declare(n, t);
    }
    s
}

fn param(n: &str) -> Term {
    let ty = params().into_iter().find(|(m, _)| *m == n).expect("known parameter").1;
    Term::param(n, ty)
}

// ---------------------------------------------------------------- terms

fn heads(ty: &Type, env: &[Type]) -> Vec<Term> {
    let mut out: Vec<Term> = params().into_iter().filter(|(_, t)| t == ty).map(|(n, t)| Term::param(n, t)).collect();
    for (i, t) in env.iter().rev().enumerate() {
        if t == ty {
            out.push(Term::Bound(i as u32));
        }
    }
    let logical = [Const::Not, Const::Or, Const::Pi(Type::I), Const::Pi(Type::O)];
    out.extend(logical.into_iter().filter(|c| c.ty() == *ty).map(Term::Const));
    out
}

/// A closed, well-typed term of type `ty`, possibly with β-redexes.
pub fn term(rng: &mut TestRng, ty: &Type, depth: u32) -> Term {
    term_in(rng, ty, &mut Vec::new(), depth)
}

fn term_in(rng: &mut TestRng, ty: &Type, env: &mut Vec<Type>, depth: u32) -> Term {
    let hs = heads(ty, env);
    let roll = rng.random_range(0..10);
    if (depth == 0 || roll < 3) && !hs.is_empty() {
        return hs[rng.random_range(0..hs.len())].clone();
    }
    if let Some((dom, cod)) = ty.as_fun() {
        if depth == 0 || (3..=5).contains(&roll) {
            env.push(dom.clone());
            let body = term_in(rng, cod, env, depth.saturating_sub(1));
            env.pop();
            return Term::Lam(Hint("x".into()), dom.clone(), body.into());
        }
    }
    let depth = depth - 1;
    let arg_ty = if rng.random_bool(0.5) { Type::O } else { Type::I };
    if roll >= 8 {
        env.push(arg_ty.clone());
        let body = term_in(rng, ty, env, depth);
        env.pop();
        let arg = term_in(rng, &arg_ty, env, depth);
        return Term::app(Term::Lam(Hint("y".into()), arg_ty, body.into()), arg);
    }
    let f = term_in(rng, &Type::fun(arg_ty.clone(), ty.clone()), env, depth);
    let a = term_in(rng, &arg_ty, env, depth);
    Term::app(f, a)
}

/// Types the kernel properties draw from.
pub fn some_type(rng: &mut TestRng) -> Type {
    let choices = [
        Type::O,
        Type::I,
        Type::O.pred(),
        Type::I.pred(),
        Type::fun(Type::I, Type::I),
        Type::fun(Type::I.pred(), Type::O),
    ];
    choices[rng.random_range(0..choices.len())].clone()
}

// ------------------------------------------------------------- formulas

/// A β-normal sentence over the fixed parameters, with `¬`, `∨`, `Π^ι`.
pub fn formula(rng: &mut TestRng, depth: u32) -> Term {
    formula_in(rng, depth, &mut Vec::new())
}

fn formula_in(rng: &mut TestRng, depth: u32, vars: &mut Vec<String>) -> Term {
    let roll = if depth == 0 { 0 } else { rng.random_range(0..10) };
    match roll {
        0..=3 => {
            let mut atoms = vec![param("p0"), param("p1"), param("p2"), param("p3")];
            let mut ind = vec![param("k0"), param("k1"), Term::app(param("g"), param("k0"))];
            ind.extend(vars.iter().map(|v| Term::var(v, Type::I)));
            let t = ind[rng.random_range(0..ind.len())].clone();
            atoms.push(Term::app(param("h"), t));
            atoms[rng.random_range(0..atoms.len())].clone()
        }
        4..=5 => not(formula_in(rng, depth - 1, vars)),
        6..=8 => or(formula_in(rng, depth - 1, vars), formula_in(rng, depth - 1, vars)),
        _ => {
            let x = format!("x{}", vars.len());
            vars.push(x.clone());
            let body = formula_in(rng, depth - 1, vars);
            vars.pop();
            forall(&x, Type::I, &body)
        }
    }
}

// ---------------------------------------------------------- derivations

/// Builds checking derivations top down. Every node concludes exactly the
/// sequent it was asked for; principal formulas stay in the premises.
pub struct DerivationGen<'a> {
    pub rng: &'a mut TestRng,
    /// Unforced rule applications still allowed.
    pub noise: u32,
    /// Cuts still allowed.
    pub cuts: u32,
    pub formula_depth: u32,
}

impl<'a> DerivationGen<'a> {
    pub fn new(rng: &'a mut TestRng) -> Self {
        DerivationGen { rng, noise: 3, cuts: 0, formula_depth: 2 }
    }

    pub fn context(&mut self, extra: usize) -> Sequent {
        let d = self.formula_depth;
        Sequent::trusted((0..extra).map(|_| formula(self.rng, d)))
    }

    /// A derivation of `ctx ∪ {F, ¬F}` for a random `F`.
    pub fn closed(&mut self, ctx: &Sequent) -> Derivation {
        let f = formula(self.rng, self.formula_depth);
        let goal = ctx.with(f.clone()).with(not(f.clone()));
        self.close(goal, &f)
    }

    /// Derives `goal`, which must contain `f` and `¬f`.
    pub fn close(&mut self, goal: Sequent, f: &Term) -> Derivation {
        debug_assert!(goal.contains(f) && goal.contains(&not(f.clone())));
        if self.cuts > 0 && self.rng.random_bool(0.4) {
            self.cuts -= 1;
            let c = formula(self.rng, self.formula_depth);
            let left = self.close(goal.with(c.clone()), f);
            let right = self.close(goal.with(not(c.clone())), f);
            return Derivation::new(Rule::Cut { formula: c }, goal, vec![left, right]);
        }
        if self.noise > 0 && self.rng.random_bool(0.3) {
            if let Some(d) = self.noise_step(&goal, f) {
                return d;
            }
        }
        let nf = not(f.clone());
        if f.is_atomic() {
            return Derivation::leaf(Rule::Init, goal);
        }
        if let Some(a) = as_not(f) {
            // ¬f = ¬¬a
            let prem = goal.with(a.clone());
            let sub = self.close(prem, a);
            return Derivation::new(Rule::Neg, goal, vec![sub]);
        }
        if let Some((a, b)) = as_or(f) {
            let (a, b) = (a.clone(), b.clone());
            if self.rng.random_bool(0.5) {
                let mid = goal.with(a.clone()).with(b.clone());
                let l = self.close(mid.with(not(a.clone())), &a);
                let r = self.close(mid.with(not(b.clone())), &b);
                let or_l = Derivation::new(Rule::OrL, mid.clone(), vec![l, r]);
                return Derivation::new(Rule::OrR, goal, vec![or_l]);
            }
            let (ga, gb) = (goal.with(not(a.clone())), goal.with(not(b.clone())));
            let (ma, mb) = (ga.with(a.clone()).with(b.clone()), gb.with(a.clone()).with(b.clone()));
            let l = Derivation::new(Rule::OrR, ga, vec![self.close(ma, &a)]);
            let r = Derivation::new(Rule::OrR, gb, vec![self.close(mb, &b)]);
            return Derivation::new(Rule::OrL, goal, vec![l, r]);
        }
        let (ty, p) = as_pi(f).expect("formulas are atoms, ¬, ∨ or Π");
        let mut avoid: BTreeSet<Name> = goal.params().into_keys().collect();
        let c = fresh_param(ty, &mut avoid);
        let body = beta_normalize(&Term::app(p.clone(), c.clone()));
        let mid = goal.with(body.clone());
        let low = mid.with(not(body.clone()));
        let sub = self.close(low, &body);
        let pil = Derivation::new(Rule::PiL { witness: c.clone() }, mid.clone(), vec![sub]);
        debug_assert!(goal.contains(&nf));
        Derivation::new(Rule::PiR { eigen: c }, goal, vec![pil])
    }

    /// One rule on some other formula of `goal` that adds something new.
    fn noise_step(&mut self, goal: &Sequent, f: &Term) -> Option<Derivation> {
        let fs: Vec<Term> = goal.iter().cloned().collect();
        let start = self.rng.random_range(0..fs.len());
        for g in fs.iter().cycle().skip(start).take(fs.len()) {
            let (rule, prem) = match (as_or(g), as_not(g)) {
                (Some((a, b)), _) if !(goal.contains(a) && goal.contains(b)) => {
                    (Rule::OrR, goal.with(a.clone()).with(b.clone()))
                }
                (_, Some(inner)) => match (as_not(inner), as_pi(inner)) {
                    (Some(a), _) if !goal.contains(a) => (Rule::Neg, goal.with(a.clone())),
                    (_, Some((ty, p))) if *ty == Type::I => {
                        let w = [param("k0"), param("k1")][self.rng.random_range(0..2)].clone();
                        let inst = not(beta_normalize(&Term::app(p.clone(), w.clone())));
                        if goal.contains(&inst) {
                            continue;
                        }
                        (Rule::PiL { witness: w }, goal.with(inst))
                    }
                    _ => continue,
                },
                _ => match as_pi(g) {
                    Some((ty, p)) if *ty == Type::I => {
                        let mut avoid: BTreeSet<Name> = goal.params().into_keys().collect();
                        let c = fresh_param(ty, &mut avoid);
                        (Rule::PiR { eigen: c.clone() }, goal.with(beta_normalize(&Term::app(p.clone(), c))))
                    }
                    _ => continue,
                },
            };
            self.noise -= 1;
            let sub = self.close(prem, f);
            return Some(Derivation::new(rule, goal.clone(), vec![sub]));
        }
        None
    }
}

/// Eigen-parameters picked anywhere in `d`.
pub fn eigens(d: &Derivation) -> Vec<Term> {
    let mut out = Vec::new();
    d.visit(&mut |_, n| {
        if let Rule::PiR { eigen } = &n.rule {
            out.push(eigen.clone());
        }
    });
    out
}

/// Extra formulas for weakening; half of them mention an eigen-parameter
/// of `d` so that renaming is exercised.
pub fn weakening_extras(rng: &mut TestRng, d: &Derivation) -> Vec<Term> {
    let ev = eigens(d);
    let n = rng.random_range(1..=3);
    (0..n)
        .map(|_| match ev.get(rng.random_range(0..ev.len().max(1) * 2)) {
            Some(c) if c.type_of().ok() == Some(Type::I) => Term::app(param("h"), c.clone()),
            _ => formula(rng, 2),
        })
        .collect()
}

/// `¬(a ≐ b)` at `ι`, the hypothesis that makes `leibniz@i` available.
pub fn leibniz_hypothesis() -> Term {
    use hocut::kernel::sugar::leibniz;
    not(leibniz(Term::param("a", Type::I), Term::param("b", Type::I), Type::I))
}

/// A derivation with at least one cut whose end sequent holds `extra`.
pub fn cut_derivation(rng: &mut TestRng, extra: &[Term], max_cuts: u32) -> Derivation {
    let mut g = DerivationGen::new(rng);
    g.cuts = max_cuts.saturating_sub(1);
    let f = formula(g.rng, g.formula_depth);
    let n = g.rng.random_range(0..3);
    let goal = g.context(n).with_all(extra.iter().cloned()).with(f.clone()).with(not(f.clone()));
    let c = formula(g.rng, g.formula_depth);
    let left = g.close(goal.with(c.clone()), &f);
    let right = g.close(goal.with(not(c.clone())), &f);
    Derivation::new(Rule::Cut { formula: c }, goal, vec![left, right])
}

/// A cut-free derivation of a random `Δ ∪ {F, ¬F}`.
pub fn plain_derivation(rng: &mut TestRng) -> Derivation {
    let mut g = DerivationGen::new(rng);
    g.formula_depth = 3;
    let n = g.rng.random_range(0..3);
    let ctx = g.context(n);
    g.closed(&ctx)
}

/// A cut-free derivation whose end sequent contains `¬¬A`; returns `A`.
pub fn double_negation_derivation(rng: &mut TestRng) -> (Derivation, Term) {
    let mut g = DerivationGen::new(rng);
    let a = formula(g.rng, 2);
    let n = g.rng.random_range(0..3);
    let ctx = g.context(n);
    let d = if g.rng.random_bool(0.5) {
        // ¬A and ¬¬A are the closing pair
        let na = not(a.clone());
        g.close(ctx.with(na.clone()).with(not(na.clone())), &na)
    } else {
        // ¬¬A is a bystander, possibly decomposed by noise
        g.noise = 4;
        g.closed(&ctx.with(not(not(a.clone()))))
    };
    (d, a)
}
