use std::collections::BTreeSet;
use std::fmt::Write;

use crate::calculus::{Derivation, Rule, Sequent};
use crate::kernel::sugar::{as_leibniz, as_not, as_or, as_pi};
use crate::kernel::{Const, Signature, Term};

use super::lexer::is_ident_char;
use super::{NamedDerivation, SourceProblem};

// precedence levels, loosest first
const TOP: u8 = 0;
const OR: u8 = 2;
const AND: u8 = 3;
const EQ: u8 = 4;
const UNARY: u8 = 5;
const APP: u8 = 6;
const ATOM: u8 = 7;

struct Printer {
    /// Names that binders must not shadow.
    taken: BTreeSet<String>,
    scope: Vec<String>,
}

impl Printer {
    fn for_terms<'a>(ts: impl IntoIterator<Item = &'a Term>) -> Self {
        let mut taken = BTreeSet::new();
        for t in ts {
            t.walk(&mut |s| match s {
                Term::Const(Const::Param(n, _)) | Term::Var(n, _) => {
                    taken.insert(n.to_string());
                }
                _ => {}
            });
        }
        Printer { taken, scope: Vec::new() }
    }

    fn binder_name(&self, hint: &str) -> String {
        let ok = !hint.is_empty()
            && hint.chars().all(is_ident_char)
            && !hint.starts_with('\'')
            && hint != "o"
            && hint != "i";
        let base = if ok { hint.to_string() } else { "x".to_string() };
        let free = |c: &String| !self.taken.contains(c) && !self.scope.contains(c);
        let mut cand = base.clone();
        let mut k = 1;
        while !free(&cand) {
            cand = format!("{base}{k}");
            k += 1;
        }
        cand
    }

    fn paren(s: String, level: u8, ctx: u8) -> String {
        if ctx > level {
            format!("({s})")
        } else {
            s
        }
    }

    fn binder(&mut self, sym: &str, hint: &str, ty: &crate::kernel::Type, body: &Term, ctx: u8) -> String {
        let x = self.binder_name(hint);
        self.scope.push(x.clone());
        let b = self.term(body, TOP);
        self.scope.pop();
        Self::paren(format!("{sym}{x}:{ty}. {b}"), TOP, ctx.min(1))
    }

    fn term(&mut self, t: &Term, ctx: u8) -> String {
        if let Some((a, b, ty)) = as_leibniz(t) {
            let s = format!("{} == {} @ {ty}", self.term(&a, UNARY), self.term(&b, UNARY));
            return Self::paren(s, EQ, ctx);
        }
        if let Some((ty, Term::Lam(h, _, body))) = as_pi(t) {
            return self.binder("!", &h.0, ty, body, ctx);
        }
        if let Some(a) = as_not(t) {
            let s = format!("~{}", self.term(a, UNARY));
            return Self::paren(s, UNARY, ctx);
        }
        if let Some((a, b)) = as_or(t) {
            let s = format!("{} | {}", self.term(a, OR), self.term(b, AND));
            return Self::paren(s, OR, ctx);
        }
        match t {
            Term::Var(n, _) | Term::Const(Const::Param(n, _)) => n.to_string(),
            Term::Bound(i) => {
                let n = self.scope.len();
                match n.checked_sub(1 + *i as usize) {
                    Some(k) => self.scope[k].clone(),
                    None => format!("#{i}"),
                }
            }
            Term::Const(Const::Not) => "$not".into(),
            Term::Const(Const::Or) => "$or".into(),
            Term::Const(Const::Pi(ty)) => format!("$pi[{ty}]"),
            Term::App(f, a) => {
                let s = format!("{} {}", self.term(f, APP), self.term(a, ATOM));
                Self::paren(s, APP, ctx)
            }
            Term::Lam(h, ty, body) => self.binder("\\", &h.0, ty, body, ctx),
        }
    }
}

/// Prints with `!x:T.` for `Π` over a λ and `== @ T` for Leibniz shapes.
pub fn print_term(t: &Term) -> String {
    Printer::for_terms([t]).term(t, TOP)
}

pub fn print_sequent(s: &Sequent) -> String {
    let fs: Vec<String> = s.iter().map(print_term).collect();
    format!("{{{}}}", fs.join(", "))
}

fn node(d: &Derivation, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let _ = write!(out, "{pad}({}", d.rule.kind());
    match &d.rule {
        Rule::PiL { witness } => {
            let _ = write!(out, " :w {}", print_term(witness));
        }
        Rule::PiR { eigen } => {
            let _ = write!(out, " :c {}", print_term(eigen));
        }
        Rule::Cut { formula } | Rule::CutA { formula } => {
            let _ = write!(out, " :f {}", print_term(formula));
        }
        Rule::Dec { arity } => {
            let _ = write!(out, " :n {arity}");
        }
        Rule::ExtFAx { dom, cod } => {
            let _ = write!(out, " :a {dom} :b {cod}");
        }
        _ => {}
    }
    let _ = write!(out, " :concl {}", print_sequent(&d.conclusion));
    for p in &d.premises {
        out.push('\n');
        node(p, indent + 1, out);
    }
    out.push(')');
}

pub fn print_derivation(d: &Derivation) -> String {
    let mut out = String::new();
    node(d, 0, &mut out);
    out
}

pub fn print_signature(sig: &Signature) -> String {
    sig.iter().map(|(n, t)| format!("const {n} : {t}.\n")).collect()
}

/// A problem file declaring every parameter the derivations mention.
pub fn print_problem(p: &SourceProblem) -> String {
    let mut sig = p.signature.clone();
    for (_, s) in &p.sequents {
        for f in s.iter() {
            sig.absorb(f);
        }
    }
    for nd in &p.derivations {
        for (n, t) in nd.derivation.params() {
            if sig.get(&n).is_none() {
                sig.declare(&n, t);
            }
        }
        if let Some(a) = nd.calculus.as_ref().and_then(|c| c.realizer()) {
            sig.absorb(a);
        }
    }
    let mut out = print_signature(&sig);
    for (n, s) in &p.sequents {
        let _ = writeln!(out, "seq {n} {}", print_sequent(s));
    }
    for nd in &p.derivations {
        out.push_str(&print_named(nd));
    }
    out
}

fn print_named(nd: &NamedDerivation) -> String {
    let calc = match &nd.calculus {
        None => String::new(),
        Some(c) => match c.realizer() {
            Some(a) => format!(" in {c} realizer {}", print_term(a)),
            None => format!(" in {c}"),
        },
    };
    format!("deriv {}{calc} :=\n{}\n", nd.name, print_derivation(&nd.derivation))
}
