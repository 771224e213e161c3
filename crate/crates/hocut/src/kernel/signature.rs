use std::collections::{BTreeMap, BTreeSet};

use super::term::{name, Name, Term};
use super::types::Type;

/// Declared parameters. Logical constants are built in and need no entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    params: BTreeMap<Name, Type>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `n : ty`, replacing any earlier declaration.
    pub fn declare(&mut self, n: &str, ty: Type) {
        self.params.insert(name(n), ty);
    }

    pub fn get(&self, n: &str) -> Option<&Type> {
        self.params.get(n)
    }

    pub fn param(&self, n: &str) -> Option<Term> {
        self.get(n).map(|t| Term::param(n, t.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, &Type)> {
        self.params.iter()
    }

    pub fn names(&self) -> BTreeSet<Name> {
        self.params.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Declares every parameter of `t` not yet declared.
    pub fn absorb(&mut self, t: &Term) {
        for (n, ty) in t.params() {
            self.params.entry(n).or_insert(ty);
        }
    }
}

fn prefix(ty: &Type) -> String {
    let io = Type::I.pred();
    let oo = Type::O.pred();
    let ii = Type::fun(Type::I, Type::I);
    match ty {
        Type::O => "b".into(),
        Type::I => "c".into(),
        t if *t == io => "q".into(),
        t if *t == oo => "r".into(),
        t if *t == ii => "f".into(),
        t => format!("k_{}_", t.code()),
    }
}

/// The lowest name of the fixed enumeration for `ty` outside `avoid`.
/// Different types never share a candidate name.
pub fn fresh_name(ty: &Type, avoid: &BTreeSet<Name>) -> Name {
    let p = prefix(ty);
    (1..).map(|i| format!("{p}{i}")).find(|c| !avoid.contains(c.as_str())).map(|c| name(&c)).expect("unbounded supply")
}

/// A fresh parameter of type `ty`; its name is added to `avoid`.
pub fn fresh_param(ty: &Type, avoid: &mut BTreeSet<Name>) -> Term {
    let n = fresh_name(ty, avoid);
    avoid.insert(n.clone());
    Term::param(&n, ty.clone())
}
