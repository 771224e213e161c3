//! Proof-size families for comparing search with and without cut.
//!
//! Neither family comes with a known asymptotic separation at the sizes a
//! desk-scale search can reach; they only show how minimal sizes evolve.

use std::fmt::Write;
use std::str::FromStr;

use crate::calculus::{Calculus, Sequent};
use crate::kernel::sugar::{implies, not, or};
use crate::kernel::{Term, Type};
use crate::prover::{CutPool, Prover, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `n + 1` pigeons, `n` holes, as a clause set over atoms `p_i_j`.
    Pigeonhole,
    /// `x_0`, and for `i ≤ n` the two definitions
    /// `x_{i-1} ⇒ x_i ∨ y_i` and `x_{i-1} ⇒ x_i ∨ ¬y_i`; prove `x_n`.
    /// Without cut every derivation of `x_i` ends in two branches that both
    /// continue, so the tree doubles per level; a cut on `x_i` shares them.
    IteratedDefinition,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Pigeonhole, Family::IteratedDefinition];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pigeonhole => "pigeonhole",
            Family::IteratedDefinition => "iterdef",
        }
    }

    /// Instance sizes the bench runs by default.
    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Family::Pigeonhole => vec![1, 2],
            Family::IteratedDefinition => vec![1, 2, 3, 4],
        }
    }

    pub fn instance(self, n: usize) -> Sequent {
        match self {
            Family::Pigeonhole => pigeonhole(n),
            Family::IteratedDefinition => iterated_definition(n),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}` (expected pigeonhole or iterdef)"))
    }
}

fn atom(n: &str) -> Term {
    Term::param(n, Type::O)
}

fn disj(mut fs: Vec<Term>) -> Term {
    let last = fs.pop().expect("non-empty clause");
    fs.into_iter().rev().fold(last, |acc, f| or(f, acc))
}

/// Unsatisfiable clauses, written as hypotheses `¬C`.
fn pigeonhole(n: usize) -> Sequent {
    let p = |i: usize, j: usize| atom(&format!("p_{i}_{j}"));
    let mut hyps = Vec::new();
    for i in 0..=n {
        hyps.push(disj((0..n).map(|j| p(i, j)).collect()));
    }
    for j in 0..n {
        for i in 0..=n {
            for k in i + 1..=n {
                hyps.push(or(not(p(i, j)), not(p(k, j))));
            }
        }
    }
    hyps.into_iter().map(not).collect()
}

fn iterated_definition(n: usize) -> Sequent {
    let x = |i: usize| atom(&format!("x{i}"));
    let y = |i: usize| atom(&format!("y{i}"));
    let mut fs = vec![not(x(0)), x(n)];
    for i in 1..=n {
        fs.push(not(implies(x(i - 1), or(x(i), y(i)))));
        fs.push(not(implies(x(i - 1), or(x(i), not(y(i))))));
    }
    Sequent::trusted(fs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    /// `None` when the node budget was exhausted.
    pub size: Option<usize>,
    pub expansions: usize,
}

/// Minimal proof sizes of the family's instances in `calc`.
pub fn run(family: Family, sizes: &[usize], calc: &Calculus, max_nodes: usize) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&n| {
            let budget = SearchBudget { cut_pool: CutPool::Atoms, ..SearchBudget::nodes(max_nodes) };
            let mut p = Prover::new(calc.clone(), budget);
            let size = p.prove(&family.instance(n)).ok().map(|d| d.step_count());
            BenchRow { n, size, expansions: p.expansions }
        })
        .collect()
}

pub fn render(family: Family, calc: &Calculus, rows: &[BenchRow]) -> String {
    let mut out = format!("family={} calculus={calc}\n", family.name());
    out.push_str("n\tmin-size\texpansions\n");
    for r in rows {
        let size = r.size.map_or("unknown".to_string(), |s| s.to_string());
        let _ = writeln!(out, "{}\t{size}\t{}", r.n, r.expansions);
    }
    out
}
