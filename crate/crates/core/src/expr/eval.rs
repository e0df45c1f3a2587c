use std::sync::Arc;

use std::hash::{Hash, Hasher};

use hashbrown::{Equivalent, HashMap};

use super::ast::{Arg, GenExpr, GenName, NamedGen};
use crate::cantor::{check_arity, Address};
use crate::element::{baker_direct, build_a, build_b, build_bhat, build_bhat_with_witness, hm_generator, Element, HmKind};
use crate::error::{Error, Result};
use crate::presentations::{rebuild_transposition, special_elements, SpecialElements, WitnessPolicy};

/// Products larger than this are passed through `reduce` before reuse.
const REDUCE_ABOVE: usize = 48;
const TRANSPOSITION_CACHE_LIMIT: usize = 1 << 18;
const NAMED_CACHE_LIMIT: usize = 1 << 14;

/// Borrowed form of a transposition cache key; hashes like the owned tuple.
struct PairRef<'a>(&'a Address, &'a Address);

impl Hash for PairRef<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
        self.1.hash(state);
    }
}

impl Equivalent<(Address, Address)> for PairRef<'_> {
    fn equivalent(&self, key: &(Address, Address)) -> bool {
        self.0 == &key.0 && self.1 == &key.1
    }
}

/// Evaluates expressions into elements, caching generators and transpositions.
pub struct Evaluator {
    n: usize,
    transpositions: HashMap<(Address, Address), Arc<Element>>,
    named: HashMap<NamedGen, Arc<Element>>,
    special: Option<Arc<SpecialElements>>,
}

impl Evaluator {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "arity must be at least 2");
        Evaluator { n, transpositions: HashMap::new(), named: HashMap::new(), special: None }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn special(&mut self) -> Arc<SpecialElements> {
        self.special.get_or_insert_with(|| special_elements(self.n)).clone()
    }

    pub fn evaluate(&mut self, e: &GenExpr) -> Result<Element> {
        let g = self.eval(e)?;
        let g = Arc::try_unwrap(g).unwrap_or_else(|g| (*g).clone());
        Ok(if g.len() > REDUCE_ABOVE { g.reduce() } else { g })
    }

    /// Like `evaluate`, but shares cached results instead of copying them.
    pub(crate) fn evaluate_shared(&mut self, e: &GenExpr) -> Result<Arc<Element>> {
        self.eval(e)
    }

    fn eval(&mut self, e: &GenExpr) -> Result<Arc<Element>> {
        match e {
            GenExpr::Id => Ok(Arc::new(Element::identity(self.n))),
            GenExpr::Transposition(a, b) => self.cached_transposition(a, b).map_err(|err| at(e, err)),
            GenExpr::Named(g) => self.named(g).map_err(|err| at(e, err)),
            GenExpr::Product(fs) => {
                let mut acc: Option<Arc<Element>> = None;
                for (i, f) in fs.iter().enumerate() {
                    let x = self.eval(f).map_err(|err| nest(&format!("factor {i}"), err))?;
                    acc = Some(match acc {
                        None => x,
                        Some(a) => shrink(a.compose_unchecked(&x)),
                    });
                }
                Ok(acc.unwrap_or_else(|| Arc::new(Element::identity(self.n))))
            }
            GenExpr::Inverse(x) => Ok(Arc::new(self.eval(x)?.invert())),
            GenExpr::Conjugate(g, h) => {
                let g = self.eval(g).map_err(|err| nest("conjugate base", err))?;
                let h = self.eval(h).map_err(|err| nest("conjugate exponent", err))?;
                Ok(shrink(g.conjugate_unchecked(&h)))
            }
            GenExpr::Commutator(g, h) => {
                let g = self.eval(g).map_err(|err| nest("commutator left", err))?;
                let h = self.eval(h).map_err(|err| nest("commutator right", err))?;
                let gi_hi = g.invert().compose_unchecked(&h.invert());
                Ok(shrink(gi_hi.compose_unchecked(&g).compose_unchecked(&h)))
            }
            GenExpr::Power(x, k) => Ok(shrink(self.eval(x)?.pow(*k))),
            GenExpr::Localize(d, x) => {
                check_arity(self.n, d.arity()).map_err(|err| at(e, err))?;
                let inner = self.eval(x).map_err(|err| nest(&format!("pre({d}, ..)"), err))?;
                Ok(Arc::new(inner.localize(d)?))
            }
        }
    }

    /// ⟨α|β⟩, cached.
    pub fn transposition(&mut self, a: &Address, b: &Address) -> Result<Element> {
        self.cached_transposition(a, b).map(|g| (*g).clone())
    }

    fn cached_transposition(&mut self, a: &Address, b: &Address) -> Result<Arc<Element>> {
        check_arity(self.n, a.arity())?;
        if let Some(g) = self.transpositions.get(&PairRef(a, b)) {
            return Ok(g.clone());
        }
        let g = Arc::new(Element::transposition(a, b)?);
        if self.transpositions.len() >= TRANSPOSITION_CACHE_LIMIT {
            self.transpositions.clear();
        }
        self.transpositions.insert((a.clone(), b.clone()), g.clone());
        Ok(g)
    }

    fn named(&mut self, g: &NamedGen) -> Result<Arc<Element>> {
        if let Some(x) = self.named.get(g) {
            return Ok(x.clone());
        }
        let x = Arc::new(self.build_named(g)?);
        if self.named.len() >= NAMED_CACHE_LIMIT {
            self.named.clear();
        }
        self.named.insert(g.clone(), x.clone());
        Ok(x)
    }

    fn build_named(&mut self, g: &NamedGen) -> Result<Element> {
        let n = self.n;
        for a in &g.args {
            if let Arg::Addr(x) = a {
                check_arity(n, x.arity())?;
            }
        }
        let sig = signature(&g.args);
        let bad = || Error::BadParameters(format!("{}({}) has the wrong argument types", g.name, sig));
        let int = |i: usize| -> Result<usize> {
            match g.args.get(i) {
                Some(Arg::Int(k)) if *k >= 0 => Ok(*k as usize),
                _ => Err(bad()),
            }
        };
        let addr = |i: usize| -> Result<&Address> {
            match g.args.get(i) {
                Some(Arg::Addr(a)) => Ok(a),
                _ => Err(bad()),
            }
        };
        let arity_is = |k: usize| if g.args.len() == k { Ok(()) } else { Err(bad()) };
        match g.name {
            GenName::X | GenName::C => {
                arity_is(2)?;
                let kind = if g.name == GenName::X { HmKind::X } else { HmKind::C };
                hm_generator(kind, int(0)?, int(1)?, n)
            }
            GenName::Pi | GenName::PiBar => {
                arity_is(1)?;
                let kind = if g.name == GenName::Pi { HmKind::Pi } else { HmKind::PiBar };
                hm_generator(kind, int(0)?, 1, n)
            }
            GenName::A => {
                arity_is(3)?;
                build_a(int(0)?, addr(1)?, addr(2)?)
            }
            GenName::Bhat => match g.args.len() {
                2 => build_bhat(int(0)?, addr(1)?),
                3 => build_bhat_with_witness(int(0)?, addr(1)?, addr(2)?),
                _ => Err(bad()),
            },
            GenName::B => {
                arity_is(2)?;
                build_b(int(0)?, addr(1)?)
            }
            GenName::Baker => {
                arity_is(2)?;
                baker_direct(int(0)?, addr(1)?)
            }
            GenName::Rebuild => {
                arity_is(2)?;
                let s = self.special();
                rebuild_transposition(&s, addr(0)?, addr(1)?, WitnessPolicy::First)
            }
            GenName::Q => {
                arity_is(1)?;
                let d = int(0)?;
                if !(1..=n).contains(&d) {
                    return Err(Error::BadDimension { d, n });
                }
                Ok(self.special().q[d - 1].clone())
            }
            name => {
                arity_is(0)?;
                let s = self.special();
                Ok(match name {
                    GenName::LowerA | GenName::LowerX => s.a.clone(),
                    GenName::LowerB => s.b.clone(),
                    GenName::LowerC => s.c.clone(),
                    GenName::P => s.p.clone(),
                    GenName::T => s.t.clone(),
                    GenName::LowerY => s.y.clone(),
                    _ => unreachable!("handled above"),
                })
            }
        }
    }
}

fn signature(args: &[Arg]) -> String {
    args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

fn shrink(g: Element) -> Arc<Element> {
    Arc::new(if g.len() > REDUCE_ABOVE { g.reduce() } else { g })
}

fn at(e: &GenExpr, err: Error) -> Error {
    match err {
        Error::Eval { .. } => err,
        other => Error::Eval { path: e.to_string(), msg: other.to_string() },
    }
}

fn nest(segment: &str, err: Error) -> Error {
    match err {
        Error::Eval { path, msg } => Error::Eval { path: format!("{segment} / {path}"), msg },
        other => Error::Eval { path: segment.to_string(), msg: other.to_string() },
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str(text: &str, n: usize) -> Result<Element> {
    let e = super::parse(text, n)?;
    Evaluator::new(n).evaluate(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn evaluates_examples() {
        assert!(evaluate_str("id", 2).unwrap().is_identity());
        let s = Element::transposition(&a("(0,-)"), &a("(1,-)")).unwrap();
        assert!(evaluate_str("pibar(0)", 2).unwrap().equals(&s));
        assert!(evaluate_str("t[(0,-)|(1,-)]^2", 2).unwrap().is_identity());
        assert!(evaluate_str("t[(00,-)|(10,-)] * t[(01,-)|(11,-)]", 2).unwrap().equals(&s));
        let conj = evaluate_str("t[(0,-)|(10,-)]^t[(0,-)|(11,-)]", 2).unwrap();
        assert!(conj.equals(&Element::transposition(&a("(11,-)"), &a("(10,-)")).unwrap()));
    }

    #[test]
    fn errors_carry_paths() {
        let err = evaluate_str("id * C(0,1)", 2).unwrap_err();
        match err {
            Error::Eval { path, .. } => assert!(path.starts_with("factor 1"), "{path}"),
            e => panic!("{e:?}"),
        }
        assert!(evaluate_str("t[(0,-)|(01,-)]", 2).is_err());
        assert!(evaluate_str("X(0)", 2).is_err());
    }
}
