use std::sync::Arc;

use super::term::Term;

/// β-normal form. Terminates on well-typed input.
pub fn beta_normalize(t: &Term) -> Term {
    match t {
        Term::App(f, a) => {
            let f = beta_normalize(f);
            let a = beta_normalize(a);
            match &f {
                Term::Lam(_, _, body) => beta_normalize(&body.instantiate(&a)),
                _ => Term::app(f, a),
            }
        }
        Term::Lam(h, ty, b) => Term::Lam(h.clone(), ty.clone(), Arc::new(beta_normalize(b))),
        _ => t.clone(),
    }
}

/// βη-normal form: β first, then η-contraction bottom-up.
pub fn beta_eta_normalize(t: &Term) -> Term {
    eta_reduce(&beta_normalize(t))
}

fn eta_reduce(t: &Term) -> Term {
    match t {
        Term::App(f, a) => Term::app(eta_reduce(f), eta_reduce(a)),
        Term::Lam(h, ty, b) => {
            let b = eta_reduce(b);
            if let Term::App(f, a) = &b {
                if **a == Term::Bound(0) && !f.mentions_bound(0) {
                    return f.shift(-1, 0);
                }
            }
            Term::Lam(h.clone(), ty.clone(), Arc::new(b))
        }
        _ => t.clone(),
    }
}

/// Redex selection for single-step reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Contract the leftmost-outermost redex.
    Normal,
    /// Contract a redex containing no other redex, rightmost first.
    Innermost,
}

/// One β-step under `strategy`, or `None` if `t` is normal.
pub fn beta_step(t: &Term, strategy: Strategy) -> Option<Term> {
    match strategy {
        Strategy::Normal => step_outer(t),
        Strategy::Innermost => step_inner(t),
    }
}

fn step_outer(t: &Term) -> Option<Term> {
    match t {
        Term::App(f, a) => {
            if let Term::Lam(_, _, body) = &**f {
                return Some(body.instantiate(a));
            }
            if let Some(f2) = step_outer(f) {
                return Some(Term::App(Arc::new(f2), a.clone()));
            }
            step_outer(a).map(|a2| Term::App(f.clone(), Arc::new(a2)))
        }
        Term::Lam(h, ty, b) => step_outer(b).map(|b2| Term::Lam(h.clone(), ty.clone(), Arc::new(b2))),
        _ => None,
    }
}

fn step_inner(t: &Term) -> Option<Term> {
    match t {
        Term::App(f, a) => {
            if let Some(a2) = step_inner(a) {
                return Some(Term::App(f.clone(), Arc::new(a2)));
            }
            if let Some(f2) = step_inner(f) {
                return Some(Term::App(Arc::new(f2), a.clone()));
            }
            match &**f {
                Term::Lam(_, _, body) => Some(body.instantiate(a)),
                _ => None,
            }
        }
        Term::Lam(h, ty, b) => step_inner(b).map(|b2| Term::Lam(h.clone(), ty.clone(), Arc::new(b2))),
        _ => None,
    }
}

/// Iterates [`beta_step`] to a normal form.
pub fn normalize_with(t: &Term, strategy: Strategy) -> Term {
    let mut cur = t.clone();
    while let Some(next) = beta_step(&cur, strategy) {
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Type;

    #[test]
    fn beta_examples() {
        let i = Type::I;
        let f = Term::param("f", Type::curried(&[i.clone(), i.clone()], i.clone()));
        let a = Term::param("a", i.clone());
        let x = Term::var("x", i.clone());
        let lam = Term::lam("x", i.clone(), &Term::apps(f.clone(), [x.clone(), x]));
        let t = Term::app(lam, a.clone());
        assert_eq!(beta_normalize(&t), Term::apps(f, [a.clone(), a]));
    }

    #[test]
    fn eta_examples() {
        let i = Type::I;
        let f = Term::param("f", Type::fun(i.clone(), i.clone()));
        let g = Term::param("g", Type::fun(i.clone(), i.clone()));
        let x = Term::var("x", i.clone());
        let y = Term::var("y", i.clone());
        let t = Term::lam("x", i.clone(), &Term::app(f.clone(), x.clone()));
        assert_eq!(beta_eta_normalize(&t), f);
        let inner = Term::lam("y", i.clone(), &Term::app(g.clone(), y));
        let t2 = Term::lam("x", i.clone(), &Term::app(inner, x));
        assert_eq!(beta_eta_normalize(&t2), g);
        let fa = Term::app(f.clone(), Term::param("a", i));
        assert_eq!(beta_eta_normalize(&fa), fa);
    }

    #[test]
    fn eta_keeps_binder_when_variable_occurs_in_head() {
        let i = Type::I;
        let h = Term::param("h", Type::curried(&[i.clone(), i.clone()], i.clone()));
        let x = Term::var("x", i.clone());
        let t = Term::lam("x", i, &Term::apps(h, [x.clone(), x]));
        assert_eq!(beta_eta_normalize(&t), t);
    }

    #[test]
    fn strategies_agree_on_a_duplicating_redex() {
        let i = Type::I;
        let f = Term::param("f", Type::curried(&[i.clone(), i.clone()], i.clone()));
        let g = Term::param("g", Type::fun(i.clone(), i.clone()));
        let x = Term::var("x", i.clone());
        let y = Term::var("y", i.clone());
        let dup = Term::lam("x", i.clone(), &Term::apps(f, [x.clone(), x]));
        let id = Term::lam("y", i.clone(), &y);
        let arg = Term::app(id, Term::app(g, Term::param("a", i)));
        let t = Term::app(dup, arg);
        let n = normalize_with(&t, Strategy::Normal);
        assert_eq!(n, normalize_with(&t, Strategy::Innermost));
        assert_eq!(n, beta_normalize(&t));
    }
}
