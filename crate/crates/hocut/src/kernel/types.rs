use std::fmt;
use std::sync::Arc;

/// Simple types over `o` (propositions) and `i` (individuals).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Type {
    O,
    I,
    Fun(Arc<Type>, Arc<Type>),
}

impl Type {
    pub fn fun(dom: Type, cod: Type) -> Type {
        Type::Fun(Arc::new(dom), Arc::new(cod))
    }

    /// `a1 -> ... -> an -> cod`
    pub fn curried(args: &[Type], cod: Type) -> Type {
        args.iter().rev().fold(cod, |acc, a| Type::fun(a.clone(), acc))
    }

    /// `self -> o`
    pub fn pred(self) -> Type {
        Type::fun(self, Type::O)
    }

    pub fn is_base(&self) -> bool {
        matches!(self, Type::O | Type::I)
    }

    pub fn as_fun(&self) -> Option<(&Type, &Type)> {
        match self {
            Type::Fun(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Splits `a1 -> ... -> an -> b` with `b` a base type.
    pub fn uncurry(&self) -> (Vec<Type>, Type) {
        let mut args = Vec::new();
        let mut t = self;
        while let Type::Fun(a, b) = t {
            args.push((**a).clone());
            t = b;
        }
        (args, t.clone())
    }

    /// Prefix code used by the fresh-name supply, injective on types.
    pub fn code(&self) -> String {
        match self {
            Type::O => "o".into(),
            Type::I => "i".into(),
            Type::Fun(a, b) => format!("F{}{}", a.code(), b.code()),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, arg: bool) -> fmt::Result {
        match self {
            Type::O => write!(f, "o"),
            Type::I => write!(f, "i"),
            Type::Fun(a, b) => {
                if arg {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, true)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, false)?;
                if arg {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, false)
    }
}

impl fmt::Debug for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
