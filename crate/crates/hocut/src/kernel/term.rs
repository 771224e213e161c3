use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use super::types::Type;

pub type Name = Arc<str>;

pub fn name(s: &str) -> Name {
    Arc::from(s)
}

/// Constants: the logical ones and declared parameters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Const {
    Not,
    Or,
    /// `Π^α : (α -> o) -> o`
    Pi(Type),
    Param(Name, Type),
}

impl Const {
    pub fn ty(&self) -> Type {
        match self {
            Const::Not => Type::fun(Type::O, Type::O),
            Const::Or => Type::fun(Type::O, Type::fun(Type::O, Type::O)),
            Const::Pi(a) => Type::fun(a.clone().pred(), Type::O),
            Const::Param(_, t) => t.clone(),
        }
    }

    pub fn is_logical(&self) -> bool {
        !matches!(self, Const::Param(..))
    }
}

/// Display name of a bound variable. It never takes part in comparisons,
/// so the derived equality on [`Term`] is α-equivalence.
#[derive(Clone)]
pub struct Hint(pub Name);

impl PartialEq for Hint {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for Hint {}
impl PartialOrd for Hint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Hint {
    fn cmp(&self, _: &Self) -> Ordering {
        Ordering::Equal
    }
}
impl Hash for Hint {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

/// Locally nameless λ-terms: free variables are named, bound ones are
/// de Bruijn indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Name, Type),
    Bound(u32),
    Const(Const),
    App(Arc<Term>, Arc<Term>),
    Lam(Hint, Type, Arc<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type mismatch: expected {expected}, found {found}")]
    Mismatch { expected: Type, found: Type },
    #[error("applying a term of non-function type {0}")]
    NotAFunction(Type),
    #[error("dangling bound variable #{0}")]
    LooseBound(u32),
}

impl Term {
    pub fn param(n: &str, ty: Type) -> Term {
        Term::Const(Const::Param(name(n), ty))
    }

    pub fn var(n: &str, ty: Type) -> Term {
        Term::Var(name(n), ty)
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Arc::new(f), Arc::new(a))
    }

    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    /// `λx:ty. body`, binding the free variable `x` of `body`.
    pub fn lam(x: &str, ty: Type, body: &Term) -> Term {
        let b = body.close_var(x, &ty, 0);
        Term::Lam(Hint(name(x)), ty, Arc::new(b))
    }

    /// `λ_:ty. body` for a body that does not mention the binder.
    pub fn vacuous(hint: &str, ty: Type, body: &Term) -> Term {
        Term::Lam(Hint(name(hint)), ty, Arc::new(body.shift(1, 0)))
    }

    pub fn type_of(&self) -> Result<Type, TypeError> {
        self.type_in(&mut Vec::new())
    }

    fn type_in(&self, ctx: &mut Vec<Type>) -> Result<Type, TypeError> {
        match self {
            Term::Var(_, t) => Ok(t.clone()),
            Term::Bound(i) => {
                let n = ctx.len();
                if (*i as usize) < n {
                    Ok(ctx[n - 1 - *i as usize].clone())
                } else {
                    Err(TypeError::LooseBound(*i))
                }
            }
            Term::Const(c) => Ok(c.ty()),
            Term::App(f, a) => {
                let tf = f.type_in(ctx)?;
                let ta = a.type_in(ctx)?;
                match tf {
                    Type::Fun(d, c) => {
                        if *d == ta {
                            Ok((*c).clone())
                        } else {
                            Err(TypeError::Mismatch { expected: (*d).clone(), found: ta })
                        }
                    }
                    other => Err(TypeError::NotAFunction(other)),
                }
            }
            Term::Lam(_, t, b) => {
                ctx.push(t.clone());
                let r = b.type_in(ctx);
                ctx.pop();
                Ok(Type::fun(t.clone(), r?))
            }
        }
    }

    /// Adds `d` to every bound index `>= cutoff`.
    pub fn shift(&self, d: i64, cutoff: u32) -> Term {
        if d == 0 || !self.has_loose_from(cutoff) {
            return self.clone();
        }
        match self {
            Term::Bound(i) if *i >= cutoff => Term::Bound((*i as i64 + d) as u32),
            Term::App(f, a) => Term::app(f.shift(d, cutoff), a.shift(d, cutoff)),
            Term::Lam(h, t, b) => Term::Lam(h.clone(), t.clone(), Arc::new(b.shift(d, cutoff + 1))),
            _ => self.clone(),
        }
    }

    /// Whether some bound index `>= k` is loose at this level.
    pub fn has_loose_from(&self, k: u32) -> bool {
        match self {
            Term::Bound(i) => *i >= k,
            Term::App(f, a) => f.has_loose_from(k) || a.has_loose_from(k),
            Term::Lam(_, _, b) => b.has_loose_from(k + 1),
            _ => false,
        }
    }

    /// Whether the bound index `k` occurs loose.
    pub fn mentions_bound(&self, k: u32) -> bool {
        match self {
            Term::Bound(i) => *i == k,
            Term::App(f, a) => f.mentions_bound(k) || a.mentions_bound(k),
            Term::Lam(_, _, b) => b.mentions_bound(k + 1),
            _ => false,
        }
    }

    /// The body of a binder with index 0 replaced by `arg`.
    pub fn instantiate(&self, arg: &Term) -> Term {
        self.inst_at(0, arg)
    }

    fn inst_at(&self, k: u32, arg: &Term) -> Term {
        match self {
            Term::Bound(i) => match (*i).cmp(&k) {
                Ordering::Equal => arg.shift(k as i64, 0),
                Ordering::Greater => Term::Bound(i - 1),
                Ordering::Less => self.clone(),
            },
            Term::App(f, a) => Term::app(f.inst_at(k, arg), a.inst_at(k, arg)),
            Term::Lam(h, t, b) => Term::Lam(h.clone(), t.clone(), Arc::new(b.inst_at(k + 1, arg))),
            _ => self.clone(),
        }
    }

    fn close_var(&self, x: &str, ty: &Type, k: u32) -> Term {
        match self {
            Term::Var(n, t) if &**n == x && t == ty => Term::Bound(k),
            Term::Bound(i) if *i >= k => Term::Bound(i + 1),
            Term::App(f, a) => Term::app(f.close_var(x, ty, k), a.close_var(x, ty, k)),
            Term::Lam(h, t, b) => Term::Lam(h.clone(), t.clone(), Arc::new(b.close_var(x, ty, k + 1))),
            _ => self.clone(),
        }
    }

    /// Capture-avoiding `[a/x]self` for the free variable `x:ty`.
    pub fn substitute(&self, x: &str, ty: &Type, a: &Term) -> Result<Term, TypeError> {
        let ta = a.type_of()?;
        if ta != *ty {
            return Err(TypeError::Mismatch { expected: ty.clone(), found: ta });
        }
        Ok(self.subst_var(x, ty, a, 0))
    }

    fn subst_var(&self, x: &str, ty: &Type, a: &Term, k: u32) -> Term {
        match self {
            Term::Var(n, t) if &**n == x && t == ty => a.shift(k as i64, 0),
            Term::App(f, b) => Term::app(f.subst_var(x, ty, a, k), b.subst_var(x, ty, a, k)),
            Term::Lam(h, t, b) => Term::Lam(h.clone(), t.clone(), Arc::new(b.subst_var(x, ty, a, k + 1))),
            _ => self.clone(),
        }
    }

    /// Renames parameters by name; unmapped parameters stay.
    pub fn rename_params(&self, theta: &BTreeMap<Name, Name>) -> Term {
        if theta.is_empty() {
            return self.clone();
        }
        match self {
            Term::Const(Const::Param(n, t)) => match theta.get(n) {
                Some(m) => Term::Const(Const::Param(m.clone(), t.clone())),
                None => self.clone(),
            },
            Term::App(f, a) => Term::app(f.rename_params(theta), a.rename_params(theta)),
            Term::Lam(h, t, b) => Term::Lam(h.clone(), t.clone(), Arc::new(b.rename_params(theta))),
            _ => self.clone(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<(Name, Type)> {
        let mut out = BTreeSet::new();
        self.walk(&mut |t| {
            if let Term::Var(n, ty) = t {
                out.insert((n.clone(), ty.clone()));
            }
        });
        out
    }

    pub fn params(&self) -> BTreeMap<Name, Type> {
        let mut out = BTreeMap::new();
        self.collect_params(&mut out);
        out
    }

    pub fn collect_params(&self, out: &mut BTreeMap<Name, Type>) {
        self.walk(&mut |t| {
            if let Term::Const(Const::Param(n, ty)) = t {
                out.insert(n.clone(), ty.clone());
            }
        });
    }

    pub fn mentions_param(&self, p: &str) -> bool {
        match self {
            Term::Const(Const::Param(n, _)) => &**n == p,
            Term::App(f, a) => f.mentions_param(p) || a.mentions_param(p),
            Term::Lam(_, _, b) => b.mentions_param(p),
            _ => false,
        }
    }

    pub fn walk(&self, f: &mut impl FnMut(&Term)) {
        f(self);
        match self {
            Term::App(g, a) => {
                g.walk(f);
                a.walk(f);
            }
            Term::Lam(_, _, b) => b.walk(f),
            _ => {}
        }
    }

    /// No free variables and no dangling indices.
    pub fn is_closed(&self) -> bool {
        !self.has_loose_from(0) && self.free_vars().is_empty()
    }

    pub fn head_args(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut t = self;
        while let Term::App(f, a) = t {
            args.push(&**a);
            t = f;
        }
        args.reverse();
        (t, args)
    }

    pub fn is_beta_normal(&self) -> bool {
        match self {
            Term::App(f, a) => !matches!(**f, Term::Lam(..)) && f.is_beta_normal() && a.is_beta_normal(),
            Term::Lam(_, _, b) => b.is_beta_normal(),
            _ => true,
        }
    }

    /// A formula is atomic unless its head is a logical constant.
    pub fn is_atomic(&self) -> bool {
        !matches!(self.head_args().0, Term::Const(c) if c.is_logical())
    }

    pub fn size(&self) -> usize {
        match self {
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Lam(_, _, b) => 1 + b.size(),
            _ => 1,
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print_term(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print_term(self))
    }
}
