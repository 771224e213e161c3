//! Concrete syntax: types, terms, sequents, derivations and problem files.
//!
//! ```text
//! const a, b : o.
//! const q, r1 : o -> o.
//! seq ex { ~a, ~b, ~(q a), q b }
//! deriv refl in Gb :=
//! (piR :c r1 :concl {a == a @ o}
//!   (orR :concl {~r1 a | r1 a}
//!     (init :concl {~r1 a, r1 a})))
//! ```

mod lexer;
mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

use crate::calculus::{Calculus, Derivation, Sequent};
use crate::kernel::{Signature, Term, Type};

use parser::Parser;
pub use printer::{print_derivation, print_problem, print_sequent, print_signature, print_term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Lexical,
    Syntactic,
    Typing,
    Scoping,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Lexical => "lexical",
            Category::Syntactic => "syntactic",
            Category::Typing => "typing",
            Category::Scoping => "scoping",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}:{}: {category} error: {message}", .pos.line, .pos.col)]
pub struct ParseError {
    pub category: Category,
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(category: Category, pos: Pos, message: impl Into<String>) -> Self {
        ParseError { category, pos, message: message.into() }
    }
}

/// A derivation block of a problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDerivation {
    pub name: String,
    /// `None` when the block names no calculus.
    pub calculus: Option<Calculus>,
    pub derivation: Derivation,
}

/// Declarations, named sequents and named derivations of one file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceProblem {
    pub signature: Signature,
    pub sequents: Vec<(String, Sequent)>,
    pub derivations: Vec<NamedDerivation>,
}

impl SourceProblem {
    pub fn sequent(&self, name: &str) -> Option<&Sequent> {
        self.sequents.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn derivation(&self, name: &str) -> Option<&NamedDerivation> {
        self.derivations.iter().find(|d| d.name == name)
    }
}

pub fn parse_type(text: &str) -> Result<Type, ParseError> {
    let mut sig = Signature::new();
    let mut p = Parser::new(text, &mut sig, false)?;
    let t = p.ty()?;
    p.expect_eof()?;
    Ok(t)
}

/// Parses a term over `sig`; every name must be bound or declared.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    let mut sig = sig.clone();
    let mut p = Parser::new(text, &mut sig, false)?;
    let t = p.term(false)?;
    p.expect_eof()?;
    Ok(t)
}

/// Parses a formula, declaring undeclared names in `sig` with inferred
/// types (unconstrained ones default to `i`).
pub fn parse_formula_declaring(text: &str, sig: &mut Signature) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, sig, true)?;
    let t = p.term(true)?;
    p.expect_eof()?;
    Ok(t)
}

/// Parses `{F1, ..., Fn}`, β-normalizing each member.
pub fn parse_sequent(text: &str, sig: &Signature) -> Result<Sequent, ParseError> {
    let mut sig = sig.clone();
    let mut p = Parser::new(text, &mut sig, false)?;
    let s = p.sequent()?;
    p.expect_eof()?;
    Ok(s)
}

/// Like [`parse_sequent`], declaring unknown names as [`parse_formula_declaring`] does.
pub fn parse_sequent_declaring(text: &str, sig: &mut Signature) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(text, sig, true)?;
    let s = p.sequent()?;
    p.expect_eof()?;
    Ok(s)
}

/// Parses one S-expression derivation node.
pub fn parse_derivation(text: &str, sig: &Signature) -> Result<Derivation, ParseError> {
    let mut sig = sig.clone();
    let mut p = Parser::new(text, &mut sig, false)?;
    let d = p.node()?;
    p.expect_eof()?;
    Ok(d)
}

pub fn parse_problem(text: &str) -> Result<SourceProblem, ParseError> {
    let mut sig = Signature::new();
    Parser::new(text, &mut sig, false)?.problem()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::sugar::{leibniz, not, or, pi};
    use crate::kernel::Term;

    fn sig() -> Signature {
        let mut s = Signature::new();
        for n in ["a", "b", "c"] {
            s.declare(n, Type::O);
        }
        s.declare("q", Type::O.pred());
        s.declare("p", Type::I.pred());
        s.declare("k", Type::I);
        s
    }

    #[test]
    fn types_are_right_associative() {
        assert_eq!(parse_type("o -> o -> o").unwrap(), Type::fun(Type::O, Type::fun(Type::O, Type::O)));
        assert_eq!(parse_type("(i -> o) -> o").unwrap(), Type::fun(Type::I.pred(), Type::O));
    }

    #[test]
    fn binder_sugar() {
        let t = parse_term("!p:o. p", &Signature::new()).unwrap();
        assert_eq!(t, pi(Type::O, Term::lam("p", Type::O, &Term::var("p", Type::O))));
    }

    #[test]
    fn leibniz_sugar() {
        let s = sig();
        let t = parse_term("a == b @ o", &s).unwrap();
        assert_eq!(t, leibniz(s.param("a").unwrap(), s.param("b").unwrap(), Type::O));
        assert_eq!(print_term(&t), "a == b @ o");
    }

    #[test]
    fn precedence() {
        let s = sig();
        let t = parse_term("~a | b", &s).unwrap();
        assert_eq!(t, or(not(s.param("a").unwrap()), s.param("b").unwrap()));
        let u = parse_term("a | b | c", &s).unwrap();
        let v = parse_term("(a | b) | c", &s).unwrap();
        assert_eq!(u, v);
        let w = parse_term("~q a", &s).unwrap();
        assert_eq!(w, not(Term::app(s.param("q").unwrap(), s.param("a").unwrap())));
    }

    #[test]
    fn print_round_trips() {
        let s = sig();
        for src in [
            "~a | b",
            "a | (b | c)",
            "!x:i. p x | ~(!y:o. q y)",
            "\\x:i. \\a:o. q a",
            "$pi[i] p",
            "$or a",
            "q (a == b @ o)",
            "~(!x:i. p x) | (a == b @ o)",
            "?x:i. p x & a => b <=> c",
        ] {
            let t = parse_term(src, &s).unwrap();
            let back = parse_term(&print_term(&t), &s).unwrap();
            assert_eq!(t, back, "{src} printed as {}", print_term(&t));
        }
    }

    #[test]
    fn binder_names_avoid_parameters() {
        let s = sig();
        let a = s.param("a").unwrap();
        let t = Term::Lam(crate::kernel::Hint("a".into()), Type::O, or(a, Term::Bound(0)).into());
        let printed = print_term(&t);
        assert_eq!(printed, "\\a1:o. a | a1");
        assert_eq!(parse_term(&printed, &s).unwrap(), t);
    }

    #[test]
    fn error_categories() {
        let s = sig();
        assert_eq!(parse_term("q k", &s).unwrap_err().category, Category::Typing);
        assert_eq!(parse_term("zz", &s).unwrap_err().category, Category::Scoping);
        assert_eq!(parse_term("a |", &s).unwrap_err().category, Category::Syntactic);
        assert_eq!(parse_term("a % b", &s).unwrap_err().category, Category::Lexical);
        assert_eq!(parse_sequent("{k}", &s).unwrap_err().category, Category::Typing);
        let e = parse_term("a\n | q k", &s).unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (2, 6));
    }

    #[test]
    fn sequents_are_normalized() {
        let s = sig();
        let seq = parse_sequent("{(\\x:o. x) a, a}", &s).unwrap();
        assert_eq!(seq.len(), 1);
    }

    #[test]
    fn declaring_mode_infers_types() {
        let mut s = Signature::new();
        let t = parse_formula_declaring("~ (a == b @ o) | r x", &mut s).unwrap();
        assert_eq!(s.get("a"), Some(&Type::O));
        assert_eq!(s.get("r"), Some(&Type::I.pred()));
        assert_eq!(t.type_of().unwrap(), Type::O);
    }

    #[test]
    fn problem_file() {
        let src = "# example\nconst a, b : o.\nconst q : o -> o.\nseq g { ~a, ~b, ~(q a), q b }\n\
                   deriv d in Gb := (init :concl {a, ~a})\n";
        let p = parse_problem(src).unwrap();
        assert_eq!(p.sequent("g").unwrap().len(), 4);
        let d = p.derivation("d").unwrap();
        assert_eq!(d.calculus, Some(Calculus::Gb));
        let again = parse_problem(&print_problem(&p)).unwrap();
        assert_eq!(again, p);
    }
}
