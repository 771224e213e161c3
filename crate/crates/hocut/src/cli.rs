//! The `hocut` command line. Output is plain `key=value` lines; exit codes
//! are 0 for success, 1 for a failed check or an unproved goal, 2 for usage
//! and parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bench::{self, Family};
use crate::calculus::{check_derivation, Calculus, Derivation, RuleKind, Sequent};
use crate::kernel::sugar::{as_leibniz, as_not, not};
use crate::kernel::{Signature, Term};
use crate::prover::{Prover, SearchBudget};
use crate::schemas::{schema_by_name, CutStrongSchema, SchemaKind};
use crate::syntax::{
    parse_formula_declaring, parse_problem, parse_sequent_declaring, print_problem, print_sequent, NamedDerivation,
    SourceProblem,
};
use crate::transform::{eliminate_cut_a, simulate_cut_rule};

pub const OK: i32 = 0;
pub const FAILED: i32 = 1;
pub const USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hocut", version, about = "Check, transform and search sequent derivations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check every derivation of a problem file.
    Check {
        file: PathBuf,
        /// Overrides the calculus named in each block.
        #[arg(long)]
        calculus: Option<String>,
    },
    /// Build the cut-simulating derivation of a cut-strong formula.
    Schema(SchemaArgs),
    /// Turn cuts into realizer steps and eliminate them.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        realizer: String,
        /// Also print the resulting cut-free derivation.
        #[arg(long)]
        emit: bool,
    },
    /// Search for a derivation of a named sequent.
    Prove {
        file: PathBuf,
        #[arg(long)]
        goal: String,
        #[arg(long, default_value = "Gb")]
        calculus: String,
        #[arg(long, default_value_t = 12)]
        max_nodes: usize,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Minimal proof sizes over a family of goals.
    Bench {
        family: String,
        #[arg(long, default_value = "Gb")]
        calculus: String,
        #[arg(long, conflicts_with = "without_cut")]
        with_cut: bool,
        #[arg(long)]
        without_cut: bool,
        /// Comma-separated instance parameters.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 60)]
        max_nodes: usize,
    },
}

#[derive(Debug, Args)]
struct SchemaArgs {
    /// e.g. `leibniz@o`, `funcext@i,o`, `boolext`, `description@i`.
    name: String,
    #[arg(long)]
    context: String,
    #[arg(long)]
    cutformula: String,
    /// Problem file whose first derivation concludes `Δ*C`.
    #[arg(long, requires = "right")]
    left: Option<PathBuf>,
    /// Problem file whose first derivation concludes `Δ*¬C`.
    #[arg(long, requires = "left")]
    right: Option<PathBuf>,
}

/// A failure that ends the command with `code` after printing `msg`.
struct Exit {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit { code: USAGE, msg: msg.into() }
}

fn failed(msg: impl Into<String>) -> Exit {
    Exit { code: FAILED, msg: msg.into() }
}

type CmdResult = Result<i32, Exit>;

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let text = e.render().to_string();
            let _ = if code == OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.cmd {
        Cmd::Check { file, calculus } => check(&file, calculus.as_deref(), out),
        Cmd::Schema(a) => schema(&a, out),
        Cmd::Simulate { file, realizer, emit } => simulate(&file, &realizer, emit, out),
        Cmd::Prove { file, goal, calculus, max_nodes, max_depth } => {
            prove(&file, &goal, &calculus, max_nodes, max_depth, out)
        }
        Cmd::Bench { family, calculus, with_cut, without_cut: _, sizes, max_nodes } => {
            bench_cmd(&family, &calculus, with_cut, sizes, max_nodes, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(Exit { code, msg }) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load(path: &Path) -> Result<SourceProblem, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn calculus_arg(id: &str) -> Result<Calculus, Exit> {
    Calculus::from_id(id).ok_or_else(|| {
        usage(format!(
            "unknown calculus `{id}` (Gb, GbCut, GbE, GbECut, GbFbMinus, GbFb, GbFbCut; \
             GbCutA needs a realizer and is only available inside files)"
        ))
    })
}

/// A problem file holding just `d`, so the output can be fed back to `check`.
fn as_problem(name: &str, d: &Derivation, calc: &Calculus, sig: &Signature) -> String {
    let p = SourceProblem {
        signature: sig.clone(),
        sequents: Vec::new(),
        derivations: vec![NamedDerivation { name: name.into(), calculus: Some(calc.clone()), derivation: d.clone() }],
    };
    print_problem(&p)
}

fn check(file: &Path, calc: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let problem = load(file)?;
    if problem.derivations.is_empty() {
        return Err(usage(format!("{}: no derivations to check", file.display())));
    }
    let forced = calc.map(calculus_arg).transpose()?;
    let mut code = OK;
    for nd in &problem.derivations {
        let calc = forced.clone().or_else(|| nd.calculus.clone()).unwrap_or(Calculus::Gb);
        match check_derivation(&nd.derivation, &calc) {
            Ok(()) => {
                let _ = writeln!(out, "{}: ok steps={} calculus={calc}", nd.name, nd.derivation.step_count());
            }
            Err(e) => {
                code = FAILED;
                let _ = writeln!(
                    out,
                    "{}: FAIL {} {} ({})",
                    nd.name,
                    crate::calculus::render_path(&e.path),
                    e.reason,
                    e.detail
                );
            }
        }
    }
    Ok(code)
}

fn first_derivation(path: &Path) -> Result<Derivation, Exit> {
    let p = load(path)?;
    p.derivations
        .into_iter()
        .next()
        .map(|d| d.derivation)
        .ok_or_else(|| usage(format!("{}: no derivation", path.display())))
}

fn schema(a: &SchemaArgs, out: &mut dyn Write) -> CmdResult {
    let s = schema_by_name(&a.name).ok_or_else(|| usage(format!("unknown schema `{}`", a.name)))?;
    let mut sig = s.signature();
    let delta = parse_sequent_declaring(&a.context, &mut sig).map_err(|e| usage(format!("--context: {e}")))?;
    let c = parse_formula_declaring(&a.cutformula, &mut sig).map_err(|e| usage(format!("--cutformula: {e}")))?;
    let c = crate::kernel::beta_normalize(&c);
    let s = instantiate_equation(s, &delta);
    let (left, right) = match (&a.left, &a.right) {
        (Some(l), Some(r)) => (first_derivation(l)?, first_derivation(r)?),
        _ => (default_premise(delta.with(c.clone())), default_premise(delta.with(not(c.clone())))),
    };
    let premises_ok = check_derivation(&left, &Calculus::Gb).is_ok() && check_derivation(&right, &Calculus::Gb).is_ok();
    let d = s.realize(&delta, &c, &left, &right).map_err(|e| failed(e.to_string()))?;
    let extra = d.step_count() - left.step_count() - right.step_count();
    let _ = write!(out, "{}", as_problem("schema", &d, &Calculus::Gb, &sig));
    let _ = writeln!(
        out,
        "# schema={} k={} extra={extra} steps={} premises-check={premises_ok}",
        s.name,
        s.budget,
        d.step_count()
    );
    Ok(OK)
}

/// The one-node premise for `goal`; it only checks when `goal` is an axiom.
fn default_premise(goal: Sequent) -> Derivation {
    Derivation::leaf(crate::calculus::Rule::Init, goal)
}

/// For equation schemas, use the sides of a matching `¬(M ≐ N)` in `delta`
/// instead of the default `a`, `b`.
fn instantiate_equation(s: CutStrongSchema, delta: &Sequent) -> CutStrongSchema {
    let (ty, andrews) = match &s.kind {
        SchemaKind::Leibniz { ty, .. } => (ty.clone(), false),
        SchemaKind::Andrews { ty, .. } => (ty.clone(), true),
        _ => return s,
    };
    if delta.contains(&not(s.realizer.clone())) {
        return s;
    }
    for f in delta.iter() {
        let Some(inner) = as_not(f) else { continue };
        let candidate = if andrews {
            andrews_sides(inner)
        } else {
            as_leibniz(inner).filter(|(_, _, t)| *t == ty).map(|(m, n, _)| (m, n))
        };
        if let Some((lhs, rhs)) = candidate {
            let kind = if andrews {
                SchemaKind::Andrews { lhs, rhs, ty: ty.clone() }
            } else {
                SchemaKind::Leibniz { lhs, rhs, ty: ty.clone() }
            };
            let cand = CutStrongSchema::new(kind);
            if cand.realizer == *inner {
                return cand;
            }
        }
    }
    s
}

/// `(M, N)` if `t` is `Π Q. ¬Π(λZ. Q Z Z) ∨ Q M N`.
fn andrews_sides(t: &Term) -> Option<(Term, Term)> {
    use crate::kernel::sugar::{as_or, as_pi};
    let (_, f) = as_pi(t)?;
    let Term::Lam(_, _, body) = f else { return None };
    let (_, rhs) = as_or(body)?;
    let (head, args) = rhs.head_args();
    if !matches!(head, Term::Bound(0)) || args.len() != 2 {
        return None;
    }
    if args.iter().any(|a| a.has_loose_from(0)) {
        return None;
    }
    Some((args[0].shift(-1, 0), args[1].shift(-1, 0)))
}

fn simulate(file: &Path, realizer: &str, emit: bool, out: &mut dyn Write) -> CmdResult {
    let problem = load(file)?;
    if problem.derivations.is_empty() {
        return Err(usage(format!("{}: no derivations", file.display())));
    }
    let base = schema_by_name(realizer).ok_or_else(|| usage(format!("unknown schema `{realizer}`")))?;
    let mut code = OK;
    for nd in &problem.derivations {
        if let Err(e) = check_derivation(&nd.derivation, &Calculus::GbCut) {
            let _ = writeln!(out, "{}: FAIL input does not check in GbCut: {e}", nd.name);
            code = FAILED;
            continue;
        }
        let s = instantiate_equation(base.clone(), &nd.derivation.conclusion);
        let d = nd.derivation.step_count();
        let n = nd.derivation.count_rule(RuleKind::Cut);
        let result = simulate_cut_rule(&nd.derivation, &s).and_then(|sim| eliminate_cut_a(&sim, &s));
        let outd = match result {
            Ok(o) => o,
            Err(e) => {
                let _ = writeln!(out, "{}: FAIL {e}", nd.name);
                code = FAILED;
                continue;
            }
        };
        let checks = check_derivation(&outd, &Calculus::Gb).is_ok();
        let size = outd.step_count();
        let bound_ok = checks && size <= d + n * s.budget;
        let lead = if emit { "# " } else { "" };
        let _ = writeln!(out, "{lead}{}: d={d} n={n} k={} out={size} bound-ok={bound_ok}", nd.name, s.budget);
        if emit {
            let _ = write!(out, "{}", as_problem(&nd.name, &outd, &Calculus::Gb, &problem.signature));
        }
        if !bound_ok {
            code = FAILED;
        }
    }
    Ok(code)
}

fn prove(
    file: &Path,
    goal: &str,
    calc: &str,
    max_nodes: usize,
    max_depth: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    let problem = load(file)?;
    let calc = calculus_arg(calc)?;
    let seq = problem.sequent(goal).ok_or_else(|| usage(format!("no sequent named `{goal}`")))?;
    let mut budget = SearchBudget::nodes(max_nodes);
    if let Some(d) = max_depth {
        budget = budget.with_depth(d);
    }
    match Prover::new(calc.clone(), budget).prove(seq) {
        Ok(d) => {
            let _ = write!(out, "{}", as_problem(goal, &d, &calc, &problem.signature));
            let _ = writeln!(out, "# proved goal={goal} calculus={calc} steps={}", d.step_count());
            Ok(OK)
        }
        Err(e) => {
            let _ = writeln!(
                out,
                "NotFound goal={goal} calculus={calc} max-nodes={} sequent={}",
                e.max_nodes,
                print_sequent(seq)
            );
            Ok(FAILED)
        }
    }
}

fn bench_cmd(
    family: &str,
    calc: &str,
    with_cut: bool,
    sizes: Option<Vec<usize>>,
    max_nodes: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let family: Family = family.parse().map_err(usage)?;
    let mut calc = calculus_arg(calc)?;
    if with_cut {
        calc = calc.with_cut();
        if !calc.contains(RuleKind::Cut) {
            return Err(usage(format!("{calc} has no variant with cut")));
        }
    }
    let sizes = sizes.unwrap_or_else(|| family.default_sizes());
    let rows = bench::run(family, &sizes, &calc, max_nodes);
    let _ = write!(out, "{}", bench::render(family, &calc, &rows));
    Ok(OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hocut").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn schema_leibniz_extra_3() {
        let (code, out, _) = run_str(&["schema", "leibniz@o", "--context", "{~ (a == b @ o)}", "--cutformula", "c"]);
        assert_eq!(code, 0);
        assert!(out.contains("extra=3"), "{out}");
    }

    #[test]
    fn unknown_schema_is_usage() {
        let (code, _, _) = run_str(&["schema", "nope", "--context", "{}", "--cutformula", "c"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn bad_flags_are_usage() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
