//! Property checks shared by the test suites and the acceptance run.

use hocut::calculus::{check_derivation, Calculus, RuleKind, Sequent};
use hocut::kernel::sugar::not;
use hocut::schemas::{schema_by_name, CutStrongSchema};
use hocut::transform::{eliminate_cut_a, eliminate_cut_in_ge, neg_invert, simulate_cut_rule, weaken};

use proptest::prelude::RngExt;

pub type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Weakening keeps the node count and adds exactly the extra formulas.
pub fn weaken_exact(seed: u64) -> Outcome {
    let mut rng = super::rng(seed);
    let d = super::plain_derivation(&mut rng);
    check_derivation(&d, &Calculus::Gb).map_err(|e| format!("generator: {e}"))?;
    let extra = super::weakening_extras(&mut rng, &d);
    let w = weaken(&d, &extra).map_err(|e| e.to_string())?;
    check_derivation(&w, &Calculus::Gb).map_err(|e| format!("weakened: {e}"))?;
    ensure(w.step_count() == d.step_count(), || format!("{} -> {}", d.step_count(), w.step_count()))?;
    ensure(w.conclusion == d.conclusion.with_all(extra), || "end sequent".into())
}

/// Inverting `¬¬A` never adds nodes.
pub fn neg_invert_shrinks(seed: u64) -> Outcome {
    let mut rng = super::rng(seed);
    let (d, a) = super::double_negation_derivation(&mut rng);
    check_derivation(&d, &Calculus::Gb).map_err(|e| format!("generator: {e}"))?;
    let out = neg_invert(&d, &a).map_err(|e| e.to_string())?;
    check_derivation(&out, &Calculus::Gb).map_err(|e| format!("inverted: {e}"))?;
    ensure(out.step_count() <= d.step_count(), || format!("{} -> {}", d.step_count(), out.step_count()))?;
    let expected = d.conclusion.without(&not(not(a.clone()))).with(a);
    ensure(out.conclusion == expected, || "end sequent".into())
}

pub fn leibniz() -> CutStrongSchema {
    schema_by_name("leibniz@i").expect("builtin")
}

/// Cut simulation with the Leibniz realizer stays within `d + 3n`.
/// Returns `(d, n, out)`.
pub fn simulate_bound(seed: u64) -> Result<(usize, usize, usize), String> {
    let mut rng = super::rng(seed);
    let d = super::cut_derivation(&mut rng, &[super::leibniz_hypothesis()], 4);
    check_derivation(&d, &Calculus::GbCut).map_err(|e| format!("generator: {e}"))?;
    let s = leibniz();
    let sim = simulate_cut_rule(&d, &s).map_err(|e| e.to_string())?;
    let out = eliminate_cut_a(&sim, &s).map_err(|e| e.to_string())?;
    check_derivation(&out, &Calculus::Gb).map_err(|e| format!("output: {e}"))?;
    let (size, n) = (d.step_count(), d.count_rule(RuleKind::Cut));
    ensure(out.conclusion == d.conclusion, || "end sequent".into())?;
    ensure(out.step_count() <= size + n * s.budget, || format!("d={size} n={n} out={}", out.step_count()))?;
    Ok((size, n, out.step_count()))
}

/// Cut elimination in `GbE` stays within `d + 12n`. Returns `(d, n, out)`.
pub fn ge_bound(seed: u64) -> Result<(usize, usize, usize), String> {
    let mut rng = super::rng(seed);
    let d = super::cut_derivation(&mut rng, &[], 4);
    check_derivation(&d, &Calculus::GbECut).map_err(|e| format!("generator: {e}"))?;
    let out = eliminate_cut_in_ge(&d).map_err(|e| e.to_string())?;
    check_derivation(&out, &Calculus::GbE).map_err(|e| format!("output: {e}"))?;
    let (size, n) = (d.step_count(), d.count_rule(RuleKind::Cut));
    ensure(out.count_rule(RuleKind::Cut) == 0, || "cut left".into())?;
    ensure(out.conclusion == d.conclusion, || "end sequent".into())?;
    ensure(out.step_count() <= size + 12 * n, || format!("d={size} n={n} out={}", out.step_count()))?;
    Ok((size, n, out.step_count()))
}

/// `realize` on random checking premises adds exactly `k` nodes.
/// Returns the extra count.
pub fn schema_extra(s: &CutStrongSchema, seed: u64) -> Result<usize, String> {
    let mut rng = super::rng(seed);
    let mut g = super::DerivationGen::new(&mut rng);
    let n = g.rng.random_range(0..3);
    let f = super::formula(g.rng, 2);
    let delta: Sequent = g.context(n).with(f.clone()).with(not(f.clone()));
    let c = super::formula(g.rng, 2);
    let dc = g.close(delta.with(c.clone()), &f);
    let dnc = g.close(delta.with(not(c.clone())), &f);
    let out = s.realize(&delta, &c, &dc, &dnc).map_err(|e| e.to_string())?;
    check_derivation(&out, &Calculus::Gb).map_err(|e| format!("{}: {e}", s.name))?;
    ensure(out.conclusion == delta.with(not(s.realizer.clone())), || "end sequent".into())?;
    Ok(out.step_count() - dc.step_count() - dnc.step_count())
}

// ------------------------------------------------------------ search oracle

use std::collections::HashMap;

use hocut::calculus::{instances, ContextMode, InstancePool};
use hocut::kernel::Type;
use hocut::prover::{witness_pool, SearchBudget};

/// Whether some derivation of `goal` has at most `n` nodes. Tries every
/// rule instance, with every subset of principal formulas dropped, and
/// every split of the node budget; answers are memoized but nothing is
/// pruned.
pub fn derivable_within(goal: &Sequent, calc: &Calculus, n: usize) -> bool {
    Enumerator { calc, memo: HashMap::new() }.within(goal, n)
}

struct Enumerator<'a> {
    calc: &'a Calculus,
    memo: HashMap<(Sequent, usize), bool>,
}

impl Enumerator<'_> {
    fn within(&mut self, goal: &Sequent, n: usize) -> bool {
        if n == 0 {
            return false;
        }
        if let Some(&b) = self.memo.get(&(goal.clone(), n)) {
            return b;
        }
        let pool = InstancePool {
            witnesses: witness_pool(goal, &SearchBudget::nodes(n)),
            ext_types: vec![(Type::I, Type::I)],
            ..Default::default()
        };
        let found =
            instances(goal, self.calc, &pool, ContextMode::All).iter().any(|inst| match inst.premises.as_slice() {
                [] => true,
                [p] => self.within(p, n - 1),
                [p, q] => (1..n - 1).any(|k| self.within(p, k) && self.within(q, n - 1 - k)),
                _ => unreachable!("rules have at most two premises"),
            });
        self.memo.insert((goal.clone(), n), found);
        found
    }
}

/// The least `n ≤ max` with [`derivable_within`].
pub fn naive_minimal_size(goal: &Sequent, calc: &Calculus, max: usize) -> Option<usize> {
    let mut e = Enumerator { calc, memo: HashMap::new() };
    (1..=max).find(|&n| e.within(goal, n))
}

/// Goals with small minimal proofs, in the calculus they are posed in.
pub fn regression_goals() -> Vec<(&'static str, Calculus, Sequent)> {
    use hocut::syntax::parse_sequent_declaring;
    let mut sig = super::signature();
    sig.declare("a", Type::O);
    sig.declare("b", Type::O);
    sig.declare("q", Type::O.pred());
    let src = [
        ("init", Calculus::Gb, "{p0, ~p0}"),
        ("excluded-middle", Calculus::Gb, "{p0 | ~p0}"),
        ("double-negation", Calculus::Gb, "{~~p0, ~p0}"),
        ("or-left", Calculus::Gb, "{~(p0 | p1), p0, p1}"),
        ("or-both", Calculus::Gb, "{~(p0 | p1), p1 | p0}"),
        ("instance", Calculus::Gb, "{~(!x:i. h x), h k0}"),
        ("instance-g", Calculus::Gb, "{~(!x:i. h x), h (g k1)}"),
        ("forall-em", Calculus::Gb, "{!x:i. ~h x | h x}"),
        ("leibniz-refl-o", Calculus::Gb, "{p0 == p0 @ o}"),
        ("leibniz-refl-i", Calculus::Gb, "{k0 == k0 @ i}"),
        ("leibniz-sym-use", Calculus::Gb, "{~(k0 == k1 @ i), ~h k0, h k1}"),
        ("unprovable", Calculus::Gb, "{p0, p1}"),
        ("ext_gap", Calculus::GbFb, "{~a, ~b, ~q a, q b}"),
        ("ext-gap-minus", Calculus::GbFbMinus, "{~a, ~b, ~q a, q b}"),
        ("bool-eq", Calculus::GbFb, "{~a, ~b, a == b @ o}"),
        ("ext-refl", Calculus::GbE, "{k0 == k0 @ i}"),
    ];
    src.into_iter()
        .map(|(n, c, s)| (n, c, parse_sequent_declaring(s, &mut sig).expect("regression goal parses")))
        .collect()
}
