//! Connectives defined from `¬`, `∨` and `Π`, Leibniz and Andrews
//! equality, the extensionality axioms, and matchers for the core shapes.
//!
//! Builders assume well-typed arguments; wrap the result in [`checked`]
//! when the input is untrusted.

use std::sync::Arc;

use super::term::{Const, Hint, Term, TypeError};
use super::types::Type;

pub fn not(a: Term) -> Term {
    Term::app(Term::Const(Const::Not), a)
}

pub fn or(a: Term, b: Term) -> Term {
    Term::apps(Term::Const(Const::Or), [a, b])
}

/// `¬(¬a ∨ ¬b)`
pub fn and(a: Term, b: Term) -> Term {
    not(or(not(a), not(b)))
}

/// `¬a ∨ b`
pub fn implies(a: Term, b: Term) -> Term {
    or(not(a), b)
}

/// `(a ⇒ b) ∧ (b ⇒ a)`, left-to-right conjunct first.
pub fn iff(a: Term, b: Term) -> Term {
    and(implies(a.clone(), b.clone()), implies(b, a))
}

/// `Π^α f` for `f : α -> o`.
pub fn pi(ty: Type, f: Term) -> Term {
    Term::app(Term::Const(Const::Pi(ty)), f)
}

/// `∀x:α. body`, binding the free variable `x` of `body`.
pub fn forall(x: &str, ty: Type, body: &Term) -> Term {
    pi(ty.clone(), Term::lam(x, ty, body))
}

/// `¬∀x:α. ¬body`
pub fn exists(x: &str, ty: Type, body: &Term) -> Term {
    not(forall(x, ty, &not(body.clone())))
}

/// `Π^{α→o}(λP. ¬(P a) ∨ P b)`
pub fn leibniz(a: Term, b: Term, ty: Type) -> Term {
    let p = Term::Bound(0);
    let body = or(not(Term::app(p.clone(), a.shift(1, 0))), Term::app(p, b.shift(1, 0)));
    pi(ty.clone().pred(), Term::Lam(Hint("P".into()), ty.pred(), Arc::new(body)))
}

/// Andrews equality in β-normal form: `Π(λQ. ¬Π(λZ. Q Z Z) ∨ Q a b)`.
pub fn andrews(a: Term, b: Term, ty: Type) -> Term {
    let qty = Type::curried(&[ty.clone(), ty.clone()], Type::O);
    let refl = pi(
        ty.clone(),
        Term::Lam(Hint("Z".into()), ty, Arc::new(Term::apps(Term::Bound(1), [Term::Bound(0), Term::Bound(0)]))),
    );
    let body = or(not(refl), Term::apps(Term::Bound(0), [a.shift(1, 0), b.shift(1, 0)]));
    pi(qty.clone(), Term::Lam(Hint("Q".into()), qty, Arc::new(body)))
}

/// Checked variant of [`leibniz`].
pub fn leibniz_eq(a: Term, b: Term, ty: Type) -> Result<Term, TypeError> {
    checked(leibniz(a, b, ty))
}

/// Returns `t` if it is a well-typed formula.
pub fn checked(t: Term) -> Result<Term, TypeError> {
    let ty = t.type_of()?;
    if ty != Type::O {
        return Err(TypeError::Mismatch { expected: Type::O, found: ty });
    }
    Ok(t)
}

/// Boolean extensionality: `∀A ∀B. (A ⇔ B) ⇒ A ≐^o B`.
pub fn bool_ext_axiom() -> Term {
    let a = Term::var("A", Type::O);
    let b = Term::var("B", Type::O);
    let body = implies(iff(a.clone(), b.clone()), leibniz(a, b, Type::O));
    forall("A", Type::O, &forall("B", Type::O, &body))
}

/// Functional extensionality at `α -> β`:
/// `∀F ∀G. (∀X. F X ≐^β G X) ⇒ F ≐^{α→β} G`.
pub fn func_ext_axiom(dom: &Type, cod: &Type) -> Term {
    let fty = Type::fun(dom.clone(), cod.clone());
    let f = Term::var("F", fty.clone());
    let g = Term::var("G", fty.clone());
    let x = Term::var("X", dom.clone());
    let pointwise =
        forall("X", dom.clone(), &leibniz(Term::app(f.clone(), x.clone()), Term::app(g.clone(), x), cod.clone()));
    let body = implies(pointwise, leibniz(f, g, fty.clone()));
    forall("F", fty.clone(), &forall("G", fty, &body))
}

pub fn as_not(t: &Term) -> Option<&Term> {
    match t {
        Term::App(f, a) if matches!(**f, Term::Const(Const::Not)) => Some(a),
        _ => None,
    }
}

pub fn as_or(t: &Term) -> Option<(&Term, &Term)> {
    match t {
        Term::App(f, b) => match &**f {
            Term::App(g, a) if matches!(**g, Term::Const(Const::Or)) => Some((a, b)),
            _ => None,
        },
        _ => None,
    }
}

/// `Π^α f` as `(α, f)`.
pub fn as_pi(t: &Term) -> Option<(&Type, &Term)> {
    match t {
        Term::App(f, a) => match &**f {
            Term::Const(Const::Pi(ty)) => Some((ty, a)),
            _ => None,
        },
        _ => None,
    }
}

/// Recognizes exactly the shape produced by [`leibniz`].
pub fn as_leibniz(t: &Term) -> Option<(Term, Term, Type)> {
    let (pty, f) = as_pi(t)?;
    let (dom, cod) = pty.as_fun()?;
    if *cod != Type::O {
        return None;
    }
    let Term::Lam(_, _, body) = f else { return None };
    let (l, r) = as_or(body)?;
    let l = as_not(l)?;
    let side = |s: &Term| -> Option<Term> {
        match s {
            Term::App(p, x) if **p == Term::Bound(0) && !x.mentions_bound(0) => Some(x.shift(-1, 0)),
            _ => None,
        }
    };
    Some((side(l)?, side(r)?, dom.clone()))
}
