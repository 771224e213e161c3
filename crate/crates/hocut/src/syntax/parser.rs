use std::collections::BTreeMap;
use std::sync::Arc;

use crate::calculus::{Calculus, Derivation, Rule, RuleKind, Sequent};
use crate::kernel::sugar::{and, andrews, iff, implies, leibniz, not, or, pi};
use crate::kernel::{beta_normalize, Const, Hint, Signature, Term, Type};

use super::lexer::{tokenize, Tok, Token};
use super::{Category, NamedDerivation, ParseError, Pos, SourceProblem};

#[derive(Debug, Clone)]
enum RawKind {
    Ident(String),
    App(Box<Raw>, Box<Raw>),
    Lam(String, Type, Box<Raw>),
    All(String, Type, Box<Raw>),
    Ex(String, Type, Box<Raw>),
    Not(Box<Raw>),
    Bin(Conn, Box<Raw>, Box<Raw>),
    Eq(bool, Box<Raw>, Box<Raw>, Type),
    NotC,
    OrC,
    PiC(Type),
}

#[derive(Debug, Clone, Copy)]
enum Conn {
    Or,
    And,
    Imp,
    Iff,
}

#[derive(Debug, Clone)]
struct Raw {
    kind: RawKind,
    pos: Pos,
}

/// Types with unification variables, for declaring unknown names.
#[derive(Debug, Clone, PartialEq)]
enum ITy {
    O,
    I,
    Fun(Box<ITy>, Box<ITy>),
    Meta(usize),
}

impl ITy {
    fn from(t: &Type) -> ITy {
        match t {
            Type::O => ITy::O,
            Type::I => ITy::I,
            Type::Fun(a, b) => ITy::Fun(Box::new(ITy::from(a)), Box::new(ITy::from(b))),
        }
    }
}

pub(crate) struct Parser<'s> {
    toks: Vec<Token>,
    at: usize,
    sig: &'s mut Signature,
    /// Undeclared names get inferred types and are declared.
    auto: bool,
    metas: Vec<Option<ITy>>,
    pending: BTreeMap<String, ITy>,
}

type PResult<T> = Result<T, ParseError>;

impl<'s> Parser<'s> {
    pub(crate) fn new(src: &str, sig: &'s mut Signature, auto: bool) -> PResult<Self> {
        Ok(Parser { toks: tokenize(src)?, at: 0, sig, auto, metas: Vec::new(), pending: BTreeMap::new() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(Category::Syntactic, self.pos(), msg))
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.syntax(format!("expected {}, found {}", t.describe(), self.peek().describe()))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => self.syntax(format!("expected identifier, found {}", t.describe())),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            t => self.syntax(format!("expected `{kw}`, found {}", t.describe())),
        }
    }

    pub(crate) fn expect_eof(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => self.syntax(format!("unexpected {} after end of input", t.describe())),
        }
    }

    // ---- types

    pub(crate) fn ty(&mut self) -> PResult<Type> {
        let a = self.ty_atom()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let b = self.ty()?;
            Ok(Type::fun(a, b))
        } else {
            Ok(a)
        }
    }

    fn ty_atom(&mut self) -> PResult<Type> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "o" => {
                self.bump();
                Ok(Type::O)
            }
            Tok::Ident(s) if s == "i" => {
                self.bump();
                Ok(Type::I)
            }
            Tok::LParen => {
                self.bump();
                let t = self.ty()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            t => self.syntax(format!("expected a type, found {}", t.describe())),
        }
    }

    // ---- raw terms, loosest level first

    fn raw(&mut self) -> PResult<Raw> {
        self.raw_iff()
    }

    fn raw_iff(&mut self) -> PResult<Raw> {
        let l = self.raw_imp()?;
        if *self.peek() == Tok::Iff {
            let pos = self.bump().pos;
            let r = self.raw_iff()?;
            return Ok(Raw { kind: RawKind::Bin(Conn::Iff, Box::new(l), Box::new(r)), pos });
        }
        Ok(l)
    }

    fn raw_imp(&mut self) -> PResult<Raw> {
        let l = self.raw_or()?;
        if *self.peek() == Tok::Imp {
            let pos = self.bump().pos;
            let r = self.raw_imp()?;
            return Ok(Raw { kind: RawKind::Bin(Conn::Imp, Box::new(l), Box::new(r)), pos });
        }
        Ok(l)
    }

    fn raw_or(&mut self) -> PResult<Raw> {
        let mut l = self.raw_and()?;
        while *self.peek() == Tok::Bar {
            let pos = self.bump().pos;
            let r = self.raw_and()?;
            l = Raw { kind: RawKind::Bin(Conn::Or, Box::new(l), Box::new(r)), pos };
        }
        Ok(l)
    }

    fn raw_and(&mut self) -> PResult<Raw> {
        let mut l = self.raw_eq()?;
        while *self.peek() == Tok::Amp {
            let pos = self.bump().pos;
            let r = self.raw_eq()?;
            l = Raw { kind: RawKind::Bin(Conn::And, Box::new(l), Box::new(r)), pos };
        }
        Ok(l)
    }

    fn raw_eq(&mut self) -> PResult<Raw> {
        let l = self.raw_unary()?;
        let andrews = match self.peek() {
            Tok::Eq2 => false,
            Tok::Eq3 => true,
            _ => return Ok(l),
        };
        let pos = self.bump().pos;
        let r = self.raw_unary()?;
        self.expect(Tok::At)?;
        let t = self.ty()?;
        if matches!(self.peek(), Tok::Eq2 | Tok::Eq3) {
            return self.syntax("equations do not associate; add parentheses");
        }
        Ok(Raw { kind: RawKind::Eq(andrews, Box::new(l), Box::new(r), t), pos })
    }

    fn raw_unary(&mut self) -> PResult<Raw> {
        if *self.peek() == Tok::Tilde {
            let pos = self.bump().pos;
            let a = self.raw_unary()?;
            return Ok(Raw { kind: RawKind::Not(Box::new(a)), pos });
        }
        self.raw_app()
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Builtin(_) | Tok::LParen | Tok::Lambda | Tok::Bang | Tok::Quest)
    }

    fn raw_app(&mut self) -> PResult<Raw> {
        let mut f = self.raw_atom()?;
        while self.starts_atom() {
            let binder = matches!(self.peek(), Tok::Lambda | Tok::Bang | Tok::Quest);
            let a = self.raw_atom()?;
            let pos = f.pos;
            f = Raw { kind: RawKind::App(Box::new(f), Box::new(a)), pos };
            if binder {
                break;
            }
        }
        Ok(f)
    }

    fn raw_atom(&mut self) -> PResult<Raw> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(Raw { kind: RawKind::Ident(s), pos })
            }
            Tok::Builtin(b) => {
                self.bump();
                let kind = match b.as_str() {
                    "not" => RawKind::NotC,
                    "or" => RawKind::OrC,
                    _ => {
                        self.expect(Tok::LBrack)?;
                        let t = self.ty()?;
                        self.expect(Tok::RBrack)?;
                        RawKind::PiC(t)
                    }
                };
                Ok(Raw { kind, pos })
            }
            Tok::LParen => {
                self.bump();
                let t = self.raw()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Lambda | Tok::Bang | Tok::Quest => {
                let b = self.bump().tok;
                let x = self.ident()?;
                self.expect(Tok::Colon)?;
                let t = self.ty()?;
                self.expect(Tok::Dot)?;
                let body = Box::new(self.raw()?);
                let kind = match b {
                    Tok::Lambda => RawKind::Lam(x, t, body),
                    Tok::Bang => RawKind::All(x, t, body),
                    _ => RawKind::Ex(x, t, body),
                };
                Ok(Raw { kind, pos })
            }
            t => self.syntax(format!("expected a term, found {}", t.describe())),
        }
    }

    // ---- elaboration

    fn fresh_meta(&mut self) -> ITy {
        self.metas.push(None);
        ITy::Meta(self.metas.len() - 1)
    }

    fn resolve(&self, t: &ITy) -> ITy {
        match t {
            ITy::Meta(m) => match &self.metas[*m] {
                Some(u) => self.resolve(u),
                None => t.clone(),
            },
            ITy::Fun(a, b) => ITy::Fun(Box::new(self.resolve(a)), Box::new(self.resolve(b))),
            _ => t.clone(),
        }
    }

    fn occurs(&self, m: usize, t: &ITy) -> bool {
        match self.resolve(t) {
            ITy::Meta(n) => n == m,
            ITy::Fun(a, b) => self.occurs(m, &a) || self.occurs(m, &b),
            _ => false,
        }
    }

    fn unify(&mut self, a: &ITy, b: &ITy) -> bool {
        let (a, b) = (self.resolve(a), self.resolve(b));
        match (&a, &b) {
            (ITy::Meta(m), ITy::Meta(n)) if m == n => true,
            (ITy::Meta(m), t) | (t, ITy::Meta(m)) => {
                if self.occurs(*m, t) {
                    return false;
                }
                self.metas[*m] = Some(t.clone());
                true
            }
            (ITy::O, ITy::O) | (ITy::I, ITy::I) => true,
            (ITy::Fun(a1, b1), ITy::Fun(a2, b2)) => self.unify(a1, a2) && self.unify(b1, b2),
            _ => false,
        }
    }

    /// Unresolved variables default to `i`.
    fn ground(&self, t: &ITy) -> Type {
        match self.resolve(t) {
            ITy::O => Type::O,
            ITy::I | ITy::Meta(_) => Type::I,
            ITy::Fun(a, b) => Type::fun(self.ground(&a), self.ground(&b)),
        }
    }

    fn show(&self, t: &ITy) -> String {
        match self.resolve(t) {
            ITy::Meta(_) => "?".into(),
            ITy::O => "o".into(),
            ITy::I => "i".into(),
            ITy::Fun(a, b) => {
                let l = self.show(&a);
                let l = if matches!(*a, ITy::Fun(..)) { format!("({l})") } else { l };
                format!("{l} -> {}", self.show(&b))
            }
        }
    }

    fn want(&mut self, found: &ITy, expected: &ITy, pos: Pos, what: &str) -> PResult<()> {
        if self.unify(found, expected) {
            Ok(())
        } else {
            Err(ParseError::new(
                Category::Typing,
                pos,
                format!("{what} has type {} but {} is required", self.show(found), self.show(expected)),
            ))
        }
    }

    fn infer(&mut self, r: &Raw, scope: &mut Vec<(String, ITy)>) -> PResult<ITy> {
        use RawKind::*;
        Ok(match &r.kind {
            Ident(x) => {
                if let Some((_, t)) = scope.iter().rev().find(|(n, _)| n == x) {
                    t.clone()
                } else if let Some(t) = self.sig.get(x) {
                    ITy::from(t)
                } else if let Some(t) = self.pending.get(x) {
                    t.clone()
                } else if self.auto {
                    let m = self.fresh_meta();
                    self.pending.insert(x.clone(), m.clone());
                    m
                } else {
                    return Err(ParseError::new(Category::Scoping, r.pos, format!("undeclared name `{x}`")));
                }
            }
            App(f, a) => {
                let tf = self.infer(f, scope)?;
                let ta = self.infer(a, scope)?;
                let res = self.fresh_meta();
                let want = ITy::Fun(Box::new(ta.clone()), Box::new(res.clone()));
                if !self.unify(&tf, &want) {
                    let msg = match self.resolve(&tf) {
                        ITy::Fun(d, _) => {
                            format!("argument has type {} but the function expects {}", self.show(&ta), self.show(&d))
                        }
                        other => format!("cannot apply a term of type {}", self.show(&other)),
                    };
                    return Err(ParseError::new(Category::Typing, a.pos, msg));
                }
                res
            }
            Lam(x, t, b) => {
                scope.push((x.clone(), ITy::from(t)));
                let tb = self.infer(b, scope);
                scope.pop();
                ITy::Fun(Box::new(ITy::from(t)), Box::new(tb?))
            }
            All(x, t, b) | Ex(x, t, b) => {
                scope.push((x.clone(), ITy::from(t)));
                let tb = self.infer(b, scope);
                scope.pop();
                self.want(&tb?, &ITy::O, b.pos, "quantifier body")?;
                ITy::O
            }
            Not(a) => {
                let ta = self.infer(a, scope)?;
                self.want(&ta, &ITy::O, a.pos, "negated term")?;
                ITy::O
            }
            Bin(_, a, b) => {
                for s in [a, b] {
                    let t = self.infer(s, scope)?;
                    self.want(&t, &ITy::O, s.pos, "connective argument")?;
                }
                ITy::O
            }
            Eq(_, a, b, t) => {
                for s in [a, b] {
                    let ts = self.infer(s, scope)?;
                    self.want(&ts, &ITy::from(t), s.pos, "side of the equation")?;
                }
                ITy::O
            }
            NotC => ITy::from(&Type::fun(Type::O, Type::O)),
            OrC => ITy::from(&Type::curried(&[Type::O, Type::O], Type::O)),
            PiC(t) => ITy::from(&Type::fun(t.clone().pred(), Type::O)),
        })
    }

    fn constant(&self, x: &str) -> Term {
        let ty = match self.sig.get(x) {
            Some(t) => t.clone(),
            None => self.ground(&self.pending[x]),
        };
        Term::param(x, ty)
    }

    fn build(&self, r: &Raw, scope: &mut Vec<String>) -> Term {
        use RawKind::*;
        let under = |this: &Self, x: &str, t: &Type, b: &Raw, scope: &mut Vec<String>, f: &dyn Fn(Term) -> Term| {
            scope.push(x.to_string());
            let body = f(this.build(b, scope));
            scope.pop();
            Term::Lam(Hint(Arc::from(x)), t.clone(), Arc::new(body))
        };
        match &r.kind {
            Ident(x) => match scope.iter().rev().position(|n| n == x) {
                Some(i) => Term::Bound(i as u32),
                None => self.constant(x),
            },
            App(f, a) => Term::app(self.build(f, scope), self.build(a, scope)),
            Lam(x, t, b) => under(self, x, t, b, scope, &|b| b),
            All(x, t, b) => pi(t.clone(), under(self, x, t, b, scope, &|b| b)),
            Ex(x, t, b) => not(pi(t.clone(), under(self, x, t, b, scope, &not))),
            Not(a) => not(self.build(a, scope)),
            Bin(c, a, b) => {
                let (a, b) = (self.build(a, scope), self.build(b, scope));
                match c {
                    Conn::Or => or(a, b),
                    Conn::And => and(a, b),
                    Conn::Imp => implies(a, b),
                    Conn::Iff => iff(a, b),
                }
            }
            Eq(andr, a, b, t) => {
                let (a, b) = (self.build(a, scope), self.build(b, scope));
                if *andr {
                    andrews(a, b, t.clone())
                } else {
                    leibniz(a, b, t.clone())
                }
            }
            NotC => Term::Const(Const::Not),
            OrC => Term::Const(Const::Or),
            PiC(t) => Term::Const(Const::Pi(t.clone())),
        }
    }

    /// Declares names whose types were inferred.
    fn commit(&mut self) {
        let pending = std::mem::take(&mut self.pending);
        for (x, t) in pending {
            let g = self.ground(&t);
            self.sig.declare(&x, g);
        }
    }

    /// Parses a term; `formula` requires type `o`.
    pub(crate) fn term(&mut self, formula: bool) -> PResult<Term> {
        let raw = self.raw()?;
        let t = self.infer(&raw, &mut Vec::new())?;
        if formula {
            self.want(&t, &ITy::O, raw.pos, "formula")?;
        }
        let out = self.build(&raw, &mut Vec::new());
        self.commit();
        Ok(out)
    }

    fn sentence(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let t = beta_normalize(&self.term(true)?);
        if !t.is_closed() {
            return Err(ParseError::new(Category::Scoping, pos, "sequent formulas must be closed"));
        }
        Ok(t)
    }

    pub(crate) fn sequent(&mut self) -> PResult<Sequent> {
        self.expect(Tok::LBrace)?;
        let mut fs = Vec::new();
        if *self.peek() != Tok::RBrace {
            fs.push(self.sentence()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                fs.push(self.sentence()?);
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(Sequent::trusted(fs))
    }

    // ---- derivations

    fn param_key(&mut self) -> PResult<Option<String>> {
        if *self.peek() == Tok::Colon {
            if let Tok::Ident(k) = self.peek_at(1).clone() {
                self.bump();
                self.bump();
                return Ok(Some(k));
            }
            self.bump();
            return self.syntax("expected a parameter name after `:`");
        }
        Ok(None)
    }

    pub(crate) fn node(&mut self) -> PResult<Derivation> {
        self.expect(Tok::LParen)?;
        let rpos = self.pos();
        let rname = self.ident()?;
        let kind: RuleKind = rname.parse().map_err(|e| ParseError::new(Category::Syntactic, rpos, e))?;
        let mut params: BTreeMap<String, (Pos, ParamVal)> = BTreeMap::new();
        let conclusion = loop {
            let pos = self.pos();
            let Some(key) = self.param_key()? else {
                return self.syntax("expected `:concl`");
            };
            if key == "concl" {
                break self.sequent()?;
            }
            let val = match (kind, key.as_str()) {
                (RuleKind::PiL, "w") => ParamVal::Term(self.term(false)?),
                (RuleKind::Cut | RuleKind::CutA, "f") => ParamVal::Term(beta_normalize(&self.term(true)?)),
                (RuleKind::PiR, "c") => {
                    let cpos = self.pos();
                    let c = self.ident()?;
                    match self.sig.param(&c) {
                        Some(t) => ParamVal::Term(t),
                        None => {
                            return Err(ParseError::new(
                                Category::Scoping,
                                cpos,
                                format!("eigen-parameter `{c}` is not declared"),
                            ))
                        }
                    }
                }
                (RuleKind::Dec, "n") => {
                    let npos = self.pos();
                    let n = self.ident()?;
                    let n = n
                        .parse::<usize>()
                        .map_err(|_| ParseError::new(Category::Syntactic, npos, format!("`{n}` is not a count")))?;
                    ParamVal::Count(n)
                }
                (RuleKind::ExtFAx, "a" | "b") => ParamVal::Type(self.ty()?),
                _ => return Err(ParseError::new(Category::Syntactic, pos, format!("rule {kind} takes no `:{key}`"))),
            };
            params.insert(key, (pos, val));
        };
        let mut premises = Vec::new();
        while *self.peek() == Tok::LParen {
            premises.push(self.node()?);
        }
        self.expect(Tok::RParen)?;
        let mut take = |k: &str| -> PResult<ParamVal> {
            params
                .remove(k)
                .map(|(_, v)| v)
                .ok_or_else(|| ParseError::new(Category::Syntactic, rpos, format!("rule {kind} needs `:{k}`")))
        };
        let rule = match kind {
            RuleKind::Init => Rule::Init,
            RuleKind::Neg => Rule::Neg,
            RuleKind::NegInv => Rule::NegInv,
            RuleKind::Weak => Rule::Weak,
            RuleKind::OrL => Rule::OrL,
            RuleKind::OrR => Rule::OrR,
            RuleKind::PiL => Rule::PiL { witness: take("w")?.term() },
            RuleKind::PiR => Rule::PiR { eigen: take("c")?.term() },
            RuleKind::Cut => Rule::Cut { formula: take("f")?.term() },
            RuleKind::CutA => Rule::CutA { formula: take("f")?.term() },
            RuleKind::ExtFAx => Rule::ExtFAx { dom: take("a")?.ty(), cod: take("b")?.ty() },
            RuleKind::ExtBAx => Rule::ExtBAx,
            RuleKind::PropF => Rule::PropF,
            RuleKind::PropB => Rule::PropB,
            RuleKind::InitLeib => Rule::InitLeib,
            RuleKind::Dec => Rule::Dec { arity: take("n")?.count() },
        };
        Ok(Derivation::new(rule, conclusion, premises))
    }

    // ---- problem files

    fn calculus(&mut self) -> PResult<Calculus> {
        let pos = self.pos();
        let id = self.ident()?;
        if id == "GbCutA" {
            self.keyword("realizer")?;
            let a = beta_normalize(&self.term(true)?);
            return Ok(Calculus::GbCutA(a));
        }
        Calculus::from_id(&id)
            .ok_or_else(|| ParseError::new(Category::Syntactic, pos, format!("unknown calculus `{id}`")))
    }

    pub(crate) fn problem(&mut self) -> PResult<SourceProblem> {
        let mut sequents = Vec::new();
        let mut derivations = Vec::new();
        loop {
            let pos = self.pos();
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(kw) if kw == "const" => {
                    self.bump();
                    let npos = self.pos();
                    let mut names = vec![self.ident()?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        names.push(self.ident()?);
                    }
                    self.expect(Tok::Colon)?;
                    let t = self.ty()?;
                    self.expect(Tok::Dot)?;
                    for n in names {
                        if self.sig.get(&n).is_some() {
                            return Err(ParseError::new(Category::Scoping, npos, format!("`{n}` declared twice")));
                        }
                        self.sig.declare(&n, t.clone());
                    }
                }
                Tok::Ident(kw) if kw == "seq" => {
                    self.bump();
                    let n = self.ident()?;
                    let s = self.sequent()?;
                    sequents.push((n, s));
                }
                Tok::Ident(kw) if kw == "deriv" => {
                    self.bump();
                    let n = self.ident()?;
                    let calculus = if matches!(self.peek(), Tok::Ident(k) if k == "in") {
                        self.bump();
                        Some(self.calculus()?)
                    } else {
                        None
                    };
                    self.expect(Tok::Define)?;
                    let derivation = self.node()?;
                    derivations.push(NamedDerivation { name: n, calculus, derivation });
                }
                t => {
                    return Err(ParseError::new(
                        Category::Syntactic,
                        pos,
                        format!("expected `const`, `seq` or `deriv`, found {}", t.describe()),
                    ))
                }
            }
        }
        Ok(SourceProblem { signature: self.sig.clone(), sequents, derivations })
    }
}

enum ParamVal {
    Term(Term),
    Type(Type),
    Count(usize),
}

impl ParamVal {
    fn term(self) -> Term {
        match self {
            ParamVal::Term(t) => t,
            _ => unreachable!("parameter kinds are fixed per key"),
        }
    }
    fn ty(self) -> Type {
        match self {
            ParamVal::Type(t) => t,
            _ => unreachable!("parameter kinds are fixed per key"),
        }
    }
    fn count(self) -> usize {
        match self {
            ParamVal::Count(n) => n,
            _ => unreachable!("parameter kinds are fixed per key"),
        }
    }
}
