//! Cut-strong formulas. For each realizer `A` there is a constructor that,
//! given derivations of `Δ*C` and `Δ*¬C`, derives `Δ*¬A` with a fixed
//! number `k` of additional nodes and without cut.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::calculus::{check_sentence, Derivation, Rule, SentenceError, Sequent};
use crate::kernel::sugar::{and, andrews, exists, forall, iff, implies, leibniz, not, or};
use crate::kernel::{beta_normalize, fresh_param, Name, Signature, Term, Type, TypeError};
use crate::transform::{weaken, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("premise concludes {found} but {expected} is required")]
    ShapeMismatch { expected: Sequent, found: Sequent },
    #[error("{0} is not an atomic sentence")]
    NotAtomic(Term),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Sentence(#[from] SentenceError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

fn node(rule: Rule, conclusion: Sequent, premises: Vec<Derivation>) -> Derivation {
    Derivation::new(rule, conclusion, premises)
}

fn pil(witness: Term, conclusion: Sequent, premise: Derivation) -> Derivation {
    node(Rule::PiL { witness }, conclusion, vec![premise])
}

fn pir(eigen: Term, conclusion: Sequent, premise: Derivation) -> Derivation {
    node(Rule::PiR { eigen }, conclusion, vec![premise])
}

fn expect(d: &Derivation, expected: &Sequent) -> Result<(), SchemaError> {
    if d.conclusion == *expected {
        Ok(())
    } else {
        Err(SchemaError::ShapeMismatch { expected: expected.clone(), found: d.conclusion.clone() })
    }
}

fn names_of(terms: &[&Term], seqs: &[&Sequent], ders: &[&Derivation]) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    for t in terms {
        out.extend(t.params().into_keys());
    }
    for s in seqs {
        out.extend(s.params().into_keys());
    }
    for d in ders {
        out.extend(d.params().into_keys());
    }
    out
}

/// `Δ*iff(A,A)` in 7 nodes: orL, then neg, orR, init on each side.
pub fn build_iff_refl(delta: &Sequent, a: &Term) -> Result<Derivation, SchemaError> {
    check_sentence(a)?;
    if !a.is_atomic() {
        return Err(SchemaError::NotAtomic(a.clone()));
    }
    let imp = implies(a.clone(), a.clone());
    let half = || {
        let init = Derivation::leaf(Rule::Init, delta.with_all([not(a.clone()), a.clone()]));
        let or_r = node(Rule::OrR, delta.with(imp.clone()), vec![init]);
        node(Rule::Neg, delta.with(not(not(imp.clone()))), vec![or_r])
    };
    Ok(node(Rule::OrL, delta.with(iff(a.clone(), a.clone())), vec![half(), half()]))
}

/// `Δ*(B ≐^α B)` in 3 nodes: piR with a fresh `p`, orR, init on `p B`.
pub fn build_leib_refl(delta: &Sequent, b: &Term, ty: &Type) -> Result<Derivation, SchemaError> {
    let b = beta_normalize(b);
    let found = b.type_of()?;
    if found != *ty {
        return Err(TypeError::Mismatch { expected: ty.clone(), found }.into());
    }
    let mut avoid = names_of(&[&b], &[delta], &[]);
    Ok(leib_refl_avoiding(delta, &b, ty, &mut avoid))
}

fn leib_refl_avoiding(delta: &Sequent, b: &Term, ty: &Type, avoid: &mut BTreeSet<Name>) -> Derivation {
    let p = fresh_param(&ty.clone().pred(), avoid);
    let pb = Term::app(p.clone(), b.clone());
    let init = Derivation::leaf(Rule::Init, delta.with_all([not(pb.clone()), pb.clone()]));
    let or_r = node(Rule::OrR, delta.with(or(not(pb.clone()), pb)), vec![init]);
    pir(p, delta.with(leibniz(b.clone(), b.clone(), ty.clone())), or_r)
}

/// `{¬(M ≐ N), M ≐ N}` over `ctx` in 7 nodes.
fn leib_identity(ctx: &Sequent, m: &Term, n: &Term, ty: &Type, avoid: &mut BTreeSet<Name>) -> Derivation {
    let eq = leibniz(m.clone(), n.clone(), ty.clone());
    let p = fresh_param(&ty.clone().pred(), avoid);
    let pm = Term::app(p.clone(), m.clone());
    let pn = Term::app(p.clone(), n.clone());
    let imp = or(not(pm.clone()), pn.clone());
    let base = ctx.with_all([not(pm.clone()), pn.clone()]);
    let left = node(Rule::Neg, base.with(not(not(pm.clone()))), vec![Derivation::leaf(Rule::Init, base.with(pm))]);
    let right = Derivation::leaf(Rule::Init, base.with(not(pn)));
    let or_l = node(Rule::OrL, base.with(not(imp.clone())), vec![left, right]);
    let pi_l = pil(p.clone(), base.with(not(eq.clone())), or_l);
    let or_r = node(Rule::OrR, ctx.with_all([not(eq.clone()), imp]), vec![pi_l]);
    pir(p, ctx.with_all([not(eq.clone()), eq]), or_r)
}

/// `ctx*¬C'` closed from `ctx*C` and `ctx*¬C` by an orL over `¬(¬C ∨ C)`,
/// where the caller has produced `¬(¬C ∨ C)` as `Δ*principal`.
fn excluded_middle(ctx: &Sequent, c: &Term, d_c: Derivation, d_not_c: Derivation) -> Derivation {
    let nn = node(Rule::Neg, ctx.with(not(not(c.clone()))), vec![d_c]);
    node(Rule::OrL, ctx.with(not(or(not(c.clone()), c.clone()))), vec![nn, d_not_c])
}

/// `ctx*¬(M ≐^α N)` in 3 extra nodes, instantiating `P := λX. C`.
fn leibniz_cut(
    ctx: &Sequent,
    m: &Term,
    n: &Term,
    ty: &Type,
    c: &Term,
    d_c: Derivation,
    d_not_c: Derivation,
) -> Derivation {
    let w = Term::vacuous("X", ty.clone(), c);
    let target = not(leibniz(m.clone(), n.clone(), ty.clone()));
    pil(w, ctx.with(target), excluded_middle(ctx, c, d_c, d_not_c))
}

/// Which cut-strong formula, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaKind {
    Trivial,
    Tautology,
    Leibniz {
        lhs: Term,
        rhs: Term,
        ty: Type,
    },
    ComprehensionI,
    BoolExt,
    FuncExt {
        dom: Type,
        cod: Type,
    },
    Andrews {
        lhs: Term,
        rhs: Term,
        ty: Type,
    },
    Induction,
    /// The choice function has type `(α → o) → α`.
    Choice {
        ty: Type,
    },
    Description {
        ty: Type,
    },
}

/// A realizer formula with its budget `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutStrongSchema {
    pub name: String,
    pub kind: SchemaKind,
    pub realizer: Term,
    pub budget: usize,
}

fn zero() -> Term {
    Term::param("0", Type::I)
}

fn succ() -> Term {
    Term::param("s", Type::fun(Type::I, Type::I))
}

/// `∃P:ι→o. ∀X:ι. P X ⇔ X ≐^ι X`
fn comprehension_formula() -> Term {
    let pty = Type::I.pred();
    let p = Term::var("P", pty.clone());
    let x = Term::var("X", Type::I);
    let body = iff(Term::app(p, x.clone()), leibniz(x.clone(), x, Type::I));
    exists("P", pty, &forall("X", Type::I, &body))
}

/// `∀P:ι→o. (P 0 ∧ ∀X. P X ⇒ P (s X)) ⇒ ∀X. P X`
fn induction_formula() -> Term {
    let pty = Type::I.pred();
    let p = Term::var("P", pty.clone());
    let x = Term::var("X", Type::I);
    let px = Term::app(p.clone(), x.clone());
    let step = forall("X", Type::I, &implies(px.clone(), Term::app(p.clone(), Term::app(succ(), x))));
    let body = implies(and(Term::app(p, zero()), step), forall("X", Type::I, &px));
    forall("P", pty, &body)
}

fn choice_ty(ty: &Type) -> Type {
    Type::fun(ty.clone().pred(), ty.clone())
}

/// `∃I. ∀Q. (∃X. Q X) ⇒ Q (I Q)`
fn choice_formula(ty: &Type) -> Term {
    let ity = choice_ty(ty);
    let i = Term::var("I", ity.clone());
    let q = Term::var("Q", ty.clone().pred());
    let x = Term::var("X", ty.clone());
    let body = implies(exists("X", ty.clone(), &Term::app(q.clone(), x)), Term::app(q.clone(), Term::app(i, q)));
    exists("I", ity, &forall("Q", ty.clone().pred(), &body))
}

/// `∃Y. Q Y ∧ ∀Z. Q Z ⇒ Y ≐ Z` with `q` possibly open.
fn unique(q: &Term, ty: &Type) -> Term {
    let y = Term::var("Y", ty.clone());
    let z = Term::var("Z", ty.clone());
    let all = forall("Z", ty.clone(), &implies(Term::app(q.clone(), z.clone()), leibniz(y.clone(), z, ty.clone())));
    exists("Y", ty.clone(), &and(Term::app(q.clone(), y), all))
}

/// `∃I. ∀Q. (∃₁Y. Q Y) ⇒ Q (I Q)`
fn description_formula(ty: &Type) -> Term {
    let ity = choice_ty(ty);
    let i = Term::var("I", ity.clone());
    let q = Term::var("Q", ty.clone().pred());
    let body = implies(unique(&q, ty), Term::app(q.clone(), Term::app(i, q)));
    exists("I", ity, &forall("Q", ty.clone().pred(), &body))
}

impl CutStrongSchema {
    pub fn new(kind: SchemaKind) -> Self {
        use crate::kernel::sugar::{bool_ext_axiom, func_ext_axiom};
        let (name, realizer, budget) = match &kind {
            SchemaKind::Trivial => ("trivial".to_string(), forall("P", Type::O, &Term::var("P", Type::O)), 3),
            SchemaKind::Tautology => {
                let p = Term::var("P", Type::O);
                ("tautology".to_string(), forall("P", Type::O, &implies(p.clone(), p)), 3)
            }
            SchemaKind::Leibniz { lhs, rhs, ty } => {
                (format!("leibniz@{}", ty.code()), leibniz(lhs.clone(), rhs.clone(), ty.clone()), 3)
            }
            SchemaKind::ComprehensionI => ("comprehension".to_string(), comprehension_formula(), 16),
            SchemaKind::BoolExt => ("boolext".to_string(), bool_ext_axiom(), 14),
            SchemaKind::FuncExt { dom, cod } => {
                (format!("funcext@{},{}", dom.code(), cod.code()), func_ext_axiom(dom, cod), 11)
            }
            SchemaKind::Andrews { lhs, rhs, ty } => {
                (format!("andrews@{}", ty.code()), andrews(lhs.clone(), rhs.clone(), ty.clone()), 4)
            }
            SchemaKind::Induction => ("induction".to_string(), induction_formula(), 18),
            SchemaKind::Choice { ty } => (format!("choice@{}", ty.code()), choice_formula(ty), 7),
            SchemaKind::Description { ty } => (format!("description@{}", ty.code()), description_formula(ty), 25),
        };
        let realizer = beta_normalize(&realizer);
        CutStrongSchema { name, kind, realizer, budget }
    }

    pub fn leibniz(lhs: Term, rhs: Term, ty: Type) -> Self {
        Self::new(SchemaKind::Leibniz { lhs, rhs, ty })
    }

    /// Parameters the realizer mentions, e.g. `0` and `s` for induction.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new();
        sig.absorb(&self.realizer);
        sig
    }

    /// Derives `Δ*¬A` from derivations of `Δ*C` and `Δ*¬C`, adding exactly
    /// `budget` nodes.
    pub fn realize(
        &self,
        delta: &Sequent,
        c: &Term,
        d_c: &Derivation,
        d_not_c: &Derivation,
    ) -> Result<Derivation, SchemaError> {
        check_sentence(c)?;
        expect(d_c, &delta.with(c.clone()))?;
        expect(d_not_c, &delta.with(not(c.clone())))?;
        let mut avoid = names_of(&[c, &self.realizer], &[delta], &[d_c, d_not_c]);
        let (dc, dnc) = (d_c.clone(), d_not_c.clone());
        let goal = delta.with(not(self.realizer.clone()));
        let s = |fs: Vec<Term>| delta.with_all(fs);
        let nc = not(c.clone());
        Ok(match &self.kind {
            SchemaKind::Trivial => {
                let w = or(nc.clone(), c.clone());
                pil(w, goal, excluded_middle(delta, c, dc, dnc))
            }
            SchemaKind::Tautology => pil(c.clone(), goal, excluded_middle(delta, c, dc, dnc)),
            SchemaKind::Leibniz { lhs, rhs, ty } => leibniz_cut(delta, lhs, rhs, ty, c, dc, dnc),
            SchemaKind::Andrews { ty, .. } => {
                let w = Term::vacuous("X", ty.clone(), &Term::vacuous("Y", ty.clone(), c));
                let all_c = crate::kernel::sugar::pi(ty.clone(), Term::vacuous("Z", ty.clone(), c));
                let z = fresh_param(ty, &mut avoid);
                let pi_r = pir(z, s(vec![all_c.clone()]), dc);
                let nn = node(Rule::Neg, s(vec![not(not(all_c.clone()))]), vec![pi_r]);
                let or_l = node(Rule::OrL, s(vec![not(or(not(all_c), c.clone()))]), vec![nn, dnc]);
                pil(w, goal, or_l)
            }
            SchemaKind::Choice { ty } => {
                // ¬A = ¬¬Π(λI. ¬Π(λQ. ¬¬Π(λX. ¬Q X) ∨ Q (I Q)))
                let inner = as_not_ref(&self.realizer).clone();
                let i = fresh_param(&choice_ty(ty), &mut avoid);
                let e = fresh_param(ty, &mut avoid);
                let after_i = instantiate_pi(&inner, &i);
                let w = Term::vacuous("X", ty.clone(), c);
                let all_not_c = crate::kernel::sugar::pi(ty.clone(), Term::vacuous("X", ty.clone(), &nc));
                let ex = not(all_not_c.clone());
                let n3 = node(Rule::Neg, s(vec![not(not(c.clone()))]), vec![dc]);
                let pi_l_e = pil(e, s(vec![ex.clone()]), n3);
                let n2 = node(Rule::Neg, s(vec![not(not(ex.clone()))]), vec![pi_l_e]);
                let or_l = node(Rule::OrL, s(vec![not(or(not(ex), c.clone()))]), vec![n2, dnc]);
                let pi_l_q = pil(w, s(vec![after_i.clone()]), or_l);
                let pi_r = pir(i, s(vec![inner]), pi_l_q);
                node(Rule::Neg, goal, vec![pi_r])
            }
            SchemaKind::BoolExt => {
                let a = fresh_param(&Type::O, &mut avoid);
                let ax = &self.realizer;
                let step1 = not(instantiate_pi(ax, &a));
                let step2 = not(instantiate_pi(&instantiate_pi(ax, &a), &a));
                let refl = build_iff_refl(delta, &a)?;
                let iff_aa = iff(a.clone(), a.clone());
                let n = node(Rule::Neg, s(vec![not(not(iff_aa))]), vec![refl]);
                let cut = leibniz_cut(delta, &a, &a, &Type::O, c, dc, dnc);
                let or_l = node(Rule::OrL, s(vec![step2]), vec![n, cut]);
                let p2 = pil(a.clone(), s(vec![step1]), or_l);
                pil(a, goal, p2)
            }
            SchemaKind::FuncExt { dom, cod } => {
                let fty = Type::fun(dom.clone(), cod.clone());
                let f = fresh_param(&fty, &mut avoid);
                let ax = &self.realizer;
                let step1 = not(instantiate_pi(ax, &f));
                let step2 = not(instantiate_pi(&instantiate_pi(ax, &f), &f));
                let x = Term::Bound(0);
                let fx = Term::app(f.clone(), x);
                let pointwise = crate::kernel::sugar::pi(
                    dom.clone(),
                    Term::Lam(
                        crate::kernel::Hint("X".into()),
                        dom.clone(),
                        leibniz(fx.clone(), fx, cod.clone()).into(),
                    ),
                );
                avoid.extend(pointwise.params().into_keys());
                let a = fresh_param(dom, &mut avoid);
                let fa = Term::app(f.clone(), a.clone());
                let refl = leib_refl_avoiding(delta, &fa, cod, &mut avoid);
                let pi_r = pir(a, s(vec![pointwise.clone()]), refl);
                let n = node(Rule::Neg, s(vec![not(not(pointwise))]), vec![pi_r]);
                let cut = leibniz_cut(delta, &f, &f, &fty, c, dc, dnc);
                let or_l = node(Rule::OrL, s(vec![step2]), vec![n, cut]);
                let p2 = pil(f.clone(), s(vec![step1]), or_l);
                pil(f, goal, p2)
            }
            SchemaKind::ComprehensionI => {
                let inner = as_not_ref(&self.realizer).clone();
                let p = fresh_param(&Type::I.pred(), &mut avoid);
                let a = fresh_param(&Type::I, &mut avoid);
                let after_p = instantiate_pi(&inner, &p);
                let inst = not(instantiate_pi(as_not_ref(&after_p), &a));
                let pa = Term::app(p.clone(), a.clone());
                let eq = leibniz(a.clone(), a.clone(), Type::I);
                let x1 = not(or(not(pa.clone()), eq.clone()));
                let x2 = not(or(not(eq.clone()), pa.clone()));
                // branch ¬¬(a ≐ a)
                let refl = leib_refl_avoiding(&delta.with(x1.clone()), &a, &Type::I, &mut avoid);
                let b1 = node(Rule::Neg, s(vec![x1.clone(), not(not(eq.clone()))]), vec![refl]);
                // branch ¬(p a): split X1
                let init = Derivation::leaf(Rule::Init, s(vec![not(pa.clone()), pa.clone()]));
                let nn = node(Rule::Neg, s(vec![not(pa.clone()), not(not(pa.clone()))]), vec![init]);
                let cut = weaken(&leibniz_cut(delta, &a, &a, &Type::I, c, dc, dnc), &[not(pa.clone())])?;
                let b2 = node(Rule::OrL, s(vec![x1.clone(), not(pa.clone())]), vec![nn, cut]);
                let or_l = node(Rule::OrL, s(vec![x1.clone(), x2.clone()]), vec![b1, b2]);
                let or_r = node(Rule::OrR, s(vec![or(x1, x2)]), vec![or_l]);
                let n2 = node(Rule::Neg, s(vec![inst]), vec![or_r]);
                let pi_l = pil(a, s(vec![after_p.clone()]), n2);
                let pi_r = pir(p, s(vec![inner]), pi_l);
                node(Rule::Neg, goal, vec![pi_r])
            }
            SchemaKind::Induction => {
                let a = fresh_param(&Type::O, &mut avoid);
                let e = leibniz(a.clone(), a.clone(), Type::O);
                let w = Term::vacuous("X", Type::I, &e);
                let step =
                    crate::kernel::sugar::pi(Type::I, Term::vacuous("X", Type::I, &or(not(e.clone()), e.clone())));
                let concl_all = crate::kernel::sugar::pi(Type::I, Term::vacuous("X", Type::I, &e));
                let conj = and(e.clone(), step.clone());
                // base and step
                let refl1 = leib_refl_avoiding(delta, &a, &Type::O, &mut avoid);
                let nb = node(Rule::Neg, s(vec![not(not(e.clone()))]), vec![refl1]);
                let x = fresh_param(&Type::I, &mut avoid);
                let refl2 = leib_refl_avoiding(&delta.with(not(e.clone())), &a, &Type::O, &mut avoid);
                let or_r = node(Rule::OrR, s(vec![or(not(e.clone()), e.clone())]), vec![refl2]);
                let pi_r = pir(x, s(vec![step.clone()]), or_r);
                let ns = node(Rule::Neg, s(vec![not(not(step))]), vec![pi_r]);
                let split = node(Rule::OrL, s(vec![conj.clone()]), vec![nb, ns]);
                let left = node(Rule::Neg, s(vec![not(not(conj.clone()))]), vec![split]);
                // conclusion instance at 0
                let cut = leibniz_cut(delta, &a, &a, &Type::O, c, dc, dnc);
                let right = pil(zero(), s(vec![not(concl_all.clone())]), cut);
                let or_l = node(Rule::OrL, s(vec![not(or(not(conj), concl_all))]), vec![left, right]);
                pil(w, goal, or_l)
            }
            SchemaKind::Description { ty } => {
                let inner = as_not_ref(&self.realizer).clone();
                let i = fresh_param(&choice_ty(ty), &mut avoid);
                let a = fresh_param(ty, &mut avoid);
                let after_i = instantiate_pi(&inner, &i);
                let xv = Term::var("X", ty.clone());
                let q = Term::lam("X", ty.clone(), &leibniz(a.clone(), xv, ty.clone()));
                let q_iq = beta_normalize(&Term::app(q.clone(), Term::app(i.clone(), q.clone())));
                let e1 = beta_normalize(&unique(&q, ty));
                // E1 = ¬Π(λY. ¬(Q Y ∧ ∀Z. Q Z ⇒ Y ≐ Z))
                let all_y = as_not_ref(&e1).clone();
                let inst_y = not(instantiate_pi(&all_y, &a));
                let conj = as_double_neg(&inst_y);
                let eq_aa = leibniz(a.clone(), a.clone(), ty.clone());
                let z = Term::var("Z", ty.clone());
                let all_z = forall(
                    "Z",
                    ty.clone(),
                    &implies(leibniz(a.clone(), z.clone(), ty.clone()), leibniz(a.clone(), z, ty.clone())),
                );
                // left: a ≐ a
                let refl = leib_refl_avoiding(delta, &a, ty, &mut avoid);
                let l = node(Rule::Neg, s(vec![not(not(eq_aa))]), vec![refl]);
                // right: ∀Z. a ≐ Z ⇒ a ≐ Z
                avoid.extend(all_z.params().into_keys());
                let zc = fresh_param(ty, &mut avoid);
                let eq_az = leibniz(a.clone(), zc.clone(), ty.clone());
                let ident = leib_identity(delta, &a, &zc, ty, &mut avoid);
                let imp_az = or(not(eq_az.clone()), eq_az);
                let or_r = node(Rule::OrR, s(vec![imp_az]), vec![ident]);
                let pi_r_z = pir(zc, s(vec![all_z.clone()]), or_r);
                let r = node(Rule::Neg, s(vec![not(not(all_z))]), vec![pi_r_z]);
                let split = node(Rule::OrL, s(vec![conj.clone()]), vec![l, r]);
                let n_conj = node(Rule::Neg, s(vec![inst_y.clone()]), vec![split]);
                let pi_l_y = pil(a.clone(), s(vec![e1.clone()]), n_conj);
                let branch_a = node(Rule::Neg, s(vec![not(not(e1.clone()))]), vec![pi_l_y]);
                let app_i = Term::app(i.clone(), q.clone());
                let branch_b = leibniz_cut(delta, &a, &app_i, ty, c, dc, dnc);
                let or_l = node(Rule::OrL, s(vec![not(or(not(e1), q_iq))]), vec![branch_a, branch_b]);
                let pi_l_q = pil(q, s(vec![after_i.clone()]), or_l);
                let pi_r = pir(i, s(vec![inner]), pi_l_q);
                node(Rule::Neg, goal, vec![pi_r])
            }
        })
    }
}

/// `A` for `¬¬A`; builders call it only on shapes they constructed.
fn as_double_neg(t: &Term) -> Term {
    use crate::kernel::sugar::as_not;
    as_not(t).and_then(as_not).expect("double negation").clone()
}

fn as_not_ref(t: &Term) -> &Term {
    crate::kernel::sugar::as_not(t).expect("negation")
}

/// `βnf(F w)` for `Π F`, or `¬βnf(F w)` for `¬Π F`: the matrix a
/// quantifier rule produces, keeping the outer negation.
fn instantiate_pi(t: &Term, w: &Term) -> Term {
    use crate::kernel::sugar::{as_not, as_pi};
    if let Some((_, f)) = as_pi(t) {
        return beta_normalize(&Term::app(f.clone(), w.clone()));
    }
    let inner = as_not(t).expect("quantifier");
    let (_, f) = as_pi(inner).expect("quantifier");
    not(beta_normalize(&Term::app(f.clone(), w.clone())))
}

/// The ten schemas with default parameters: equations between `a` and `b`
/// at type `i`, functional extensionality at `i -> i`, choice and
/// description at `i`.
pub fn builtin_schemas() -> Vec<CutStrongSchema> {
    let (a, b) = (Term::param("a", Type::I), Term::param("b", Type::I));
    vec![
        CutStrongSchema::new(SchemaKind::Trivial),
        CutStrongSchema::new(SchemaKind::Tautology),
        CutStrongSchema::new(SchemaKind::Leibniz { lhs: a.clone(), rhs: b.clone(), ty: Type::I }),
        CutStrongSchema::new(SchemaKind::ComprehensionI),
        CutStrongSchema::new(SchemaKind::BoolExt),
        CutStrongSchema::new(SchemaKind::FuncExt { dom: Type::I, cod: Type::I }),
        CutStrongSchema::new(SchemaKind::Andrews { lhs: a, rhs: b, ty: Type::I }),
        CutStrongSchema::new(SchemaKind::Induction),
        CutStrongSchema::new(SchemaKind::Choice { ty: Type::I }),
        CutStrongSchema::new(SchemaKind::Description { ty: Type::I }),
    ]
}

/// Looks up `name[@TYPE[,TYPE]]`, e.g. `leibniz@o`, `funcext@i,o`,
/// `choice@(i -> o)`. Equations default to sides `a` and `b`.
pub fn schema_by_name(spec: &str) -> Option<CutStrongSchema> {
    let (base, args) = match spec.split_once('@') {
        Some((b, a)) => (b.trim(), Some(a.trim())),
        None => (spec.trim(), None),
    };
    let tys: Vec<Type> = match args {
        None => vec![],
        Some(a) => split_types(a)?.iter().map(|s| crate::syntax::parse_type(s).ok()).collect::<Option<_>>()?,
    };
    let one = |tys: &[Type]| -> Option<Type> {
        match tys {
            [] => Some(Type::I),
            [t] => Some(t.clone()),
            _ => None,
        }
    };
    let kind = match base.to_ascii_lowercase().as_str() {
        "trivial" if tys.is_empty() => SchemaKind::Trivial,
        "tautology" if tys.is_empty() => SchemaKind::Tautology,
        "comprehension" | "comprehensioni" if tys.is_empty() => SchemaKind::ComprehensionI,
        "boolext" if tys.is_empty() => SchemaKind::BoolExt,
        "induction" if tys.is_empty() => SchemaKind::Induction,
        "leibniz" | "andrews" => {
            let ty = one(&tys)?;
            let (lhs, rhs) = (Term::param("a", ty.clone()), Term::param("b", ty.clone()));
            if base.eq_ignore_ascii_case("leibniz") {
                SchemaKind::Leibniz { lhs, rhs, ty }
            } else {
                SchemaKind::Andrews { lhs, rhs, ty }
            }
        }
        "funcext" => match tys.as_slice() {
            [] => SchemaKind::FuncExt { dom: Type::I, cod: Type::I },
            [d, c] => SchemaKind::FuncExt { dom: d.clone(), cod: c.clone() },
            _ => return None,
        },
        "choice" => SchemaKind::Choice { ty: one(&tys)? },
        "description" => SchemaKind::Description { ty: one(&tys)? },
        _ => return None,
    };
    Some(CutStrongSchema::new(kind))
}

fn split_types(s: &str) -> Option<Vec<String>> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut()?.push(ch);
    }
    Some(out)
}
