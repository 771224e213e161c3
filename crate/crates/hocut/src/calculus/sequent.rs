use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::kernel::{beta_normalize, Name, Term, Type, TypeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SentenceError {
    #[error("formula {0} is not closed")]
    Open(Term),
    #[error("formula {0} is not beta-normal")]
    NotBetaNormal(Term),
    #[error("term {0} has type {1}, not o")]
    NotFormula(Term, Type),
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// Checks that `t` is a closed β-normal formula.
pub fn check_sentence(t: &Term) -> Result<(), SentenceError> {
    let ty = t.type_of()?;
    if ty != Type::O {
        return Err(SentenceError::NotFormula(t.clone(), ty));
    }
    if !t.is_closed() {
        return Err(SentenceError::Open(t.clone()));
    }
    if !t.is_beta_normal() {
        return Err(SentenceError::NotBetaNormal(t.clone()));
    }
    Ok(())
}

/// A finite set of β-normal sentences, read disjunctively.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent(BTreeSet<Term>);

impl Sequent {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates every member.
    pub fn new(fs: impl IntoIterator<Item = Term>) -> Result<Self, SentenceError> {
        let set: BTreeSet<Term> = fs.into_iter().collect();
        for f in &set {
            check_sentence(f)?;
        }
        Ok(Sequent(set))
    }

    /// β-normalizes, then validates.
    pub fn normalized(fs: impl IntoIterator<Item = Term>) -> Result<Self, SentenceError> {
        Self::new(fs.into_iter().map(|f| beta_normalize(&f)))
    }

    /// For members already known to be sentences.
    pub fn trusted(fs: impl IntoIterator<Item = Term>) -> Self {
        let s = Sequent(fs.into_iter().collect());
        debug_assert!(s.0.iter().all(|f| check_sentence(f).is_ok()), "invalid sequent {s}");
        s
    }

    /// `Δ*A`
    pub fn with(&self, f: Term) -> Self {
        let mut s = self.clone();
        s.0.insert(f);
        s
    }

    pub fn with_all(&self, fs: impl IntoIterator<Item = Term>) -> Self {
        let mut s = self.clone();
        s.0.extend(fs);
        s
    }

    pub fn without(&self, f: &Term) -> Self {
        let mut s = self.clone();
        s.0.remove(f);
        s
    }

    pub fn union(&self, other: &Sequent) -> Self {
        self.with_all(other.0.iter().cloned())
    }

    pub fn contains(&self, f: &Term) -> bool {
        self.0.contains(f)
    }

    pub fn is_subset(&self, other: &Sequent) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Term> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn formulas(&self) -> &BTreeSet<Term> {
        &self.0
    }

    pub fn params(&self) -> BTreeMap<Name, Type> {
        let mut out = BTreeMap::new();
        for f in &self.0 {
            f.collect_params(&mut out);
        }
        out
    }

    pub fn mentions_param(&self, p: &str) -> bool {
        self.0.iter().any(|f| f.mentions_param(p))
    }
}

impl FromIterator<Term> for Sequent {
    fn from_iter<I: IntoIterator<Item = Term>>(iter: I) -> Self {
        Sequent::trusted(iter)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print_sequent(self))
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::sugar::not;

    #[test]
    fn insertion_is_idempotent() {
        let a = Term::param("a", Type::O);
        let s = Sequent::trusted([a.clone(), not(a.clone())]);
        assert_eq!(s.with(a), s);
    }

    #[test]
    fn rejects_open_and_non_normal_members() {
        let x = Term::var("x", Type::O);
        assert!(matches!(Sequent::new([x]), Err(SentenceError::Open(_))));
        let a = Term::param("a", Type::O);
        let redex = Term::app(Term::lam("x", Type::O, &Term::var("x", Type::O)), a.clone());
        assert!(matches!(Sequent::new([redex.clone()]), Err(SentenceError::NotBetaNormal(_))));
        assert_eq!(Sequent::normalized([redex]).unwrap(), Sequent::trusted([a]));
        assert!(matches!(Sequent::new([Term::param("c", Type::I)]), Err(SentenceError::NotFormula(..))));
    }
}
