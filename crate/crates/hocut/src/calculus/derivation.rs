use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::kernel::{Name, Term, Type};

use super::sequent::Sequent;

/// Rule names without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    Init,
    Neg,
    NegInv,
    Weak,
    OrL,
    OrR,
    PiL,
    PiR,
    Cut,
    CutA,
    ExtFAx,
    ExtBAx,
    PropF,
    PropB,
    InitLeib,
    Dec,
}

impl RuleKind {
    pub const ALL: [RuleKind; 16] = [
        RuleKind::Init,
        RuleKind::Neg,
        RuleKind::NegInv,
        RuleKind::Weak,
        RuleKind::OrL,
        RuleKind::OrR,
        RuleKind::PiL,
        RuleKind::PiR,
        RuleKind::Cut,
        RuleKind::CutA,
        RuleKind::ExtFAx,
        RuleKind::ExtBAx,
        RuleKind::PropF,
        RuleKind::PropB,
        RuleKind::InitLeib,
        RuleKind::Dec,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleKind::Init => "init",
            RuleKind::Neg => "neg",
            RuleKind::NegInv => "negInv",
            RuleKind::Weak => "weak",
            RuleKind::OrL => "orL",
            RuleKind::OrR => "orR",
            RuleKind::PiL => "piL",
            RuleKind::PiR => "piR",
            RuleKind::Cut => "cut",
            RuleKind::CutA => "cutA",
            RuleKind::ExtFAx => "extFAx",
            RuleKind::ExtBAx => "extBAx",
            RuleKind::PropF => "propF",
            RuleKind::PropB => "propB",
            RuleKind::InitLeib => "initLeib",
            RuleKind::Dec => "dec",
        }
    }

    /// Admissible rules that no calculus contains.
    pub fn is_admissible_only(self) -> bool {
        matches!(self, RuleKind::NegInv | RuleKind::Weak)
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        RuleKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| format!("unknown rule {s}"))
    }
}

/// A rule together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Init,
    Neg,
    NegInv,
    Weak,
    OrL,
    OrR,
    PiL {
        witness: Term,
    },
    /// The eigen-parameter, a `Term::Const(Const::Param(..))`.
    PiR {
        eigen: Term,
    },
    Cut {
        formula: Term,
    },
    CutA {
        formula: Term,
    },
    ExtFAx {
        dom: Type,
        cod: Type,
    },
    ExtBAx,
    PropF,
    PropB,
    InitLeib,
    Dec {
        arity: usize,
    },
}

impl Rule {
    pub fn kind(&self) -> RuleKind {
        match self {
            Rule::Init => RuleKind::Init,
            Rule::Neg => RuleKind::Neg,
            Rule::NegInv => RuleKind::NegInv,
            Rule::Weak => RuleKind::Weak,
            Rule::OrL => RuleKind::OrL,
            Rule::OrR => RuleKind::OrR,
            Rule::PiL { .. } => RuleKind::PiL,
            Rule::PiR { .. } => RuleKind::PiR,
            Rule::Cut { .. } => RuleKind::Cut,
            Rule::CutA { .. } => RuleKind::CutA,
            Rule::ExtFAx { .. } => RuleKind::ExtFAx,
            Rule::ExtBAx => RuleKind::ExtBAx,
            Rule::PropF => RuleKind::PropF,
            Rule::PropB => RuleKind::PropB,
            Rule::InitLeib => RuleKind::InitLeib,
            Rule::Dec { .. } => RuleKind::Dec,
        }
    }

    pub fn rename_params(&self, theta: &BTreeMap<Name, Name>) -> Rule {
        match self {
            Rule::PiL { witness } => Rule::PiL { witness: witness.rename_params(theta) },
            Rule::PiR { eigen } => Rule::PiR { eigen: eigen.rename_params(theta) },
            Rule::Cut { formula } => Rule::Cut { formula: formula.rename_params(theta) },
            Rule::CutA { formula } => Rule::CutA { formula: formula.rename_params(theta) },
            r => r.clone(),
        }
    }

    /// Terms carried as parameters of the rule.
    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Rule::PiL { witness } => vec![witness],
            Rule::PiR { eigen } => vec![eigen],
            Rule::Cut { formula } | Rule::CutA { formula } => vec![formula],
            _ => vec![],
        }
    }
}

/// A proof tree; every node records the sequent it concludes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub rule: Rule,
    pub conclusion: Sequent,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(rule: Rule, conclusion: Sequent, premises: Vec<Derivation>) -> Self {
        Derivation { rule, conclusion, premises }
    }

    pub fn leaf(rule: Rule, conclusion: Sequent) -> Self {
        Derivation { rule, conclusion, premises: Vec::new() }
    }

    /// Number of nodes.
    pub fn step_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::step_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(Derivation::depth).max().unwrap_or(0)
    }

    pub fn count_rule(&self, k: RuleKind) -> usize {
        usize::from(self.rule.kind() == k) + self.premises.iter().map(|p| p.count_rule(k)).sum::<usize>()
    }

    /// Parameters occurring anywhere in the tree.
    pub fn params(&self) -> BTreeMap<Name, Type> {
        let mut out = BTreeMap::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeMap<Name, Type>) {
        for f in self.conclusion.iter() {
            f.collect_params(out);
        }
        for t in self.rule.terms() {
            t.collect_params(out);
        }
        for p in &self.premises {
            p.collect_params(out);
        }
    }

    /// Visits nodes in pre-order with their paths.
    pub fn visit(&self, f: &mut impl FnMut(&[usize], &Derivation)) {
        fn go(d: &Derivation, path: &mut Vec<usize>, f: &mut impl FnMut(&[usize], &Derivation)) {
            f(path, d);
            for (i, p) in d.premises.iter().enumerate() {
                path.push(i);
                go(p, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print_derivation(self))
    }
}

/// The calculi, each a fixed rule set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Calculus {
    Gb,
    GbCut,
    /// `Gb` plus `cutA` for the given realizer `A`.
    GbCutA(Term),
    GbE,
    /// `GbE` plus `cut`; the input of cut elimination in `GbE`.
    GbECut,
    GbFbMinus,
    GbFb,
    /// `GbFb` plus `cut`, for size comparisons only.
    GbFbCut,
}

impl Calculus {
    pub fn rules(&self) -> Vec<RuleKind> {
        use RuleKind::*;
        let mut rs = vec![Init, Neg, OrL, OrR, PiL, PiR];
        match self {
            Calculus::Gb => {}
            Calculus::GbCut => rs.push(Cut),
            Calculus::GbCutA(_) => rs.push(CutA),
            Calculus::GbE => rs.extend([ExtFAx, ExtBAx]),
            Calculus::GbECut => rs.extend([ExtFAx, ExtBAx, Cut]),
            Calculus::GbFbMinus => rs.extend([PropF, PropB]),
            Calculus::GbFb => rs.extend([PropF, PropB, InitLeib, Dec]),
            Calculus::GbFbCut => rs.extend([PropF, PropB, InitLeib, Dec, Cut]),
        }
        rs
    }

    pub fn contains(&self, k: RuleKind) -> bool {
        self.rules().contains(&k)
    }

    pub fn realizer(&self) -> Option<&Term> {
        match self {
            Calculus::GbCutA(a) => Some(a),
            _ => None,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            Calculus::Gb => "Gb",
            Calculus::GbCut => "GbCut",
            Calculus::GbCutA(_) => "GbCutA",
            Calculus::GbE => "GbE",
            Calculus::GbECut => "GbECut",
            Calculus::GbFbMinus => "GbFbMinus",
            Calculus::GbFb => "GbFb",
            Calculus::GbFbCut => "GbFbCut",
        }
    }

    /// Parses an identifier other than `GbCutA`, which needs a realizer.
    pub fn from_id(s: &str) -> Option<Calculus> {
        Some(match s {
            "Gb" => Calculus::Gb,
            "GbCut" => Calculus::GbCut,
            "GbE" => Calculus::GbE,
            "GbECut" => Calculus::GbECut,
            "GbFbMinus" => Calculus::GbFbMinus,
            "GbFb" => Calculus::GbFb,
            "GbFbCut" => Calculus::GbFbCut,
            _ => return None,
        })
    }

    /// Same calculus with `cut` added where that makes sense.
    pub fn with_cut(&self) -> Calculus {
        match self {
            Calculus::Gb | Calculus::GbCut => Calculus::GbCut,
            Calculus::GbE | Calculus::GbECut => Calculus::GbECut,
            Calculus::GbFb | Calculus::GbFbCut => Calculus::GbFbCut,
            other => other.clone(),
        }
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}
