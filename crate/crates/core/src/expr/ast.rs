use std::fmt;
use std::str::FromStr;

use crate::cantor::Address;
use crate::error::Error;

/// Names usable as `name(args)` atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenName {
    X,
    Pi,
    PiBar,
    C,
    A,
    Bhat,
    B,
    Baker,
    LowerA,
    LowerB,
    LowerC,
    P,
    Q,
    /// The transposition disjoint from `c` used by the two-generator scheme.
    T,
    LowerX,
    LowerY,
    /// A transposition rebuilt from a, b, c by the weight induction.
    Rebuild,
}

impl GenName {
    pub const ALL: [GenName; 17] = [
        GenName::X,
        GenName::Pi,
        GenName::PiBar,
        GenName::C,
        GenName::A,
        GenName::Bhat,
        GenName::B,
        GenName::Baker,
        GenName::LowerA,
        GenName::LowerB,
        GenName::LowerC,
        GenName::P,
        GenName::Q,
        GenName::T,
        GenName::LowerX,
        GenName::LowerY,
        GenName::Rebuild,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GenName::X => "X",
            GenName::Pi => "pi",
            GenName::PiBar => "pibar",
            GenName::C => "C",
            GenName::A => "A",
            GenName::Bhat => "Bhat",
            GenName::B => "B",
            GenName::Baker => "baker",
            GenName::LowerA => "a",
            GenName::LowerB => "b",
            GenName::LowerC => "c",
            GenName::P => "p",
            GenName::Q => "q",
            GenName::T => "t",
            GenName::LowerX => "x",
            GenName::LowerY => "y",
            GenName::Rebuild => "rt",
        }
    }
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GenName::ALL
            .iter()
            .copied()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown generator name {s:?}") })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arg {
    Int(i64),
    Addr(Address),
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Int(k) => write!(f, "{k}"),
            Arg::Addr(a) => write!(f, "{a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NamedGen {
    pub name: GenName,
    pub args: Vec<Arg>,
}

/// A word over the generator alphabet.
///
/// `Product` lists factors in application order (maps act on the right).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenExpr {
    Id,
    Transposition(Address, Address),
    Named(NamedGen),
    Product(Vec<GenExpr>),
    Inverse(Box<GenExpr>),
    /// `base^by = by⁻¹ base by`.
    Conjugate(Box<GenExpr>, Box<GenExpr>),
    /// `[g,h] = g⁻¹ h⁻¹ g h`.
    Commutator(Box<GenExpr>, Box<GenExpr>),
    Power(Box<GenExpr>, i64),
    /// δ.e: prefix δ inserted into every transposition of e.
    Localize(Address, Box<GenExpr>),
}

impl GenExpr {
    pub fn t(a: &Address, b: &Address) -> GenExpr {
        GenExpr::Transposition(a.clone(), b.clone())
    }

    pub fn named(name: GenName, args: Vec<Arg>) -> GenExpr {
        GenExpr::Named(NamedGen { name, args })
    }

    pub fn nullary(name: GenName) -> GenExpr {
        GenExpr::named(name, Vec::new())
    }

    pub fn ints(name: GenName, ks: &[i64]) -> GenExpr {
        GenExpr::named(name, ks.iter().map(|&k| Arg::Int(k)).collect())
    }

    pub fn product(factors: Vec<GenExpr>) -> GenExpr {
        GenExpr::Product(factors)
    }

    pub fn inv(self) -> GenExpr {
        GenExpr::Inverse(Box::new(self))
    }

    pub fn conj(self, by: GenExpr) -> GenExpr {
        GenExpr::Conjugate(Box::new(self), Box::new(by))
    }

    pub fn comm(self, h: GenExpr) -> GenExpr {
        GenExpr::Commutator(Box::new(self), Box::new(h))
    }

    pub fn pow(self, k: i64) -> GenExpr {
        GenExpr::Power(Box::new(self), k)
    }

    pub fn localize(self, delta: &Address) -> GenExpr {
        GenExpr::Localize(delta.clone(), Box::new(self))
    }

    /// The arity of the first address literal, if any.
    pub fn arity(&self) -> Option<usize> {
        match self {
            GenExpr::Id => None,
            GenExpr::Transposition(a, _) => Some(a.arity()),
            GenExpr::Named(g) => g.args.iter().find_map(|a| match a {
                Arg::Addr(x) => Some(x.arity()),
                Arg::Int(_) => None,
            }),
            GenExpr::Product(fs) => fs.iter().find_map(GenExpr::arity),
            GenExpr::Inverse(e) | GenExpr::Power(e, _) => e.arity(),
            GenExpr::Conjugate(g, h) | GenExpr::Commutator(g, h) => g.arity().or_else(|| h.arity()),
            GenExpr::Localize(d, _) => Some(d.arity()),
        }
    }

    /// Atoms print without surrounding parentheses in any position.
    fn is_atom(&self) -> bool {
        matches!(
            self,
            GenExpr::Id
                | GenExpr::Transposition(..)
                | GenExpr::Named(_)
                | GenExpr::Commutator(..)
                | GenExpr::Localize(..)
        )
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }

    /// Product factors print bare unless they are themselves products.
    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenExpr::Product(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenExpr::Id => f.write_str("id"),
            GenExpr::Transposition(a, b) => write!(f, "t[{a}|{b}]"),
            GenExpr::Named(g) => {
                write!(f, "{}(", g.name)?;
                for (i, a) in g.args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            GenExpr::Product(fs) => {
                if fs.len() < 2 {
                    // Degenerate products have no exact surface form.
                    return match fs.first() {
                        None => f.write_str("id"),
                        Some(e) => e.fmt_factor(f),
                    };
                }
                for (i, e) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    e.fmt_factor(f)?;
                }
                Ok(())
            }
            GenExpr::Inverse(e) => {
                e.fmt_atom(f)?;
                f.write_str("^-1")
            }
            GenExpr::Conjugate(g, h) => {
                g.fmt_atom(f)?;
                f.write_str("^")?;
                h.fmt_atom(f)
            }
            GenExpr::Commutator(g, h) => write!(f, "[{g}, {h}]"),
            GenExpr::Power(e, k) => {
                e.fmt_atom(f)?;
                write!(f, "^{k}")
            }
            GenExpr::Localize(d, e) => write!(f, "pre({d}, {e})"),
        }
    }
}
