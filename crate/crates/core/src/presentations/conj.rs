//! Configurations of a conjugacy relation ⟨α|β⟩^⟨γ|δ⟩ = ⟨α•|β•⟩.

use std::fmt;

use serde::Serialize;

use crate::cantor::Address;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConjCase {
    /// All four addresses pairwise incomparable: a commutation.
    A,
    /// One entry lies under γ or δ, the other is clear of both.
    B,
    /// One entry lies under γ and the other under δ.
    C,
    /// Both entries lie under the same one of γ, δ.
    D,
    /// {α, β} = {γ, δ}: the relation is ⟨γ|δ⟩^⟨γ|δ⟩ = ⟨δ|γ⟩.
    Excluded,
}

impl ConjCase {
    pub fn as_str(self) -> &'static str {
        match self {
            ConjCase::A => "A",
            ConjCase::B => "B",
            ConjCase::C => "C",
            ConjCase::D => "D",
            ConjCase::Excluded => "Excluded",
        }
    }
}

impl fmt::Display for ConjCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Place {
    Clear,
    UnderGamma,
    UnderDelta,
}

pub(crate) fn place(x: &Address, g: &Address, d: &Address) -> Option<Place> {
    if g.prefix_of(x) {
        Some(Place::UnderGamma)
    } else if d.prefix_of(x) {
        Some(Place::UnderDelta)
    } else if x.disjoint_from(g) && x.disjoint_from(d) {
        Some(Place::Clear)
    } else {
        None
    }
}

/// Case of a conjugacy instance, or None when a bullet action is undefined.
pub fn classify_conj(alpha: &Address, beta: &Address, gamma: &Address, delta: &Address) -> Option<ConjCase> {
    let pa = place(alpha, gamma, delta)?;
    let pb = place(beta, gamma, delta)?;
    if (alpha == gamma && beta == delta) || (alpha == delta && beta == gamma) {
        return Some(ConjCase::Excluded);
    }
    Some(match (pa, pb) {
        (Place::Clear, Place::Clear) => ConjCase::A,
        (Place::Clear, _) | (_, Place::Clear) => ConjCase::B,
        (x, y) if x == y => ConjCase::D,
        _ => ConjCase::C,
    })
}

/// The case conditions tested literally under the four symmetries
/// α↔β and γ↔δ. Returns every case whose condition holds.
pub fn conj_cases_brute_force(alpha: &Address, beta: &Address, gamma: &Address, delta: &Address) -> Vec<ConjCase> {
    let inc = |x: &Address, y: &Address| x.disjoint_from(y);
    let pre = |x: &Address, y: &Address| x.prefix_of(y);
    let strict = |x: &Address, y: &Address| x.prefix_of(y) && x != y;
    let mut out = Vec::new();
    if (alpha == gamma && beta == delta) || (alpha == delta && beta == gamma) {
        out.push(ConjCase::Excluded);
    }
    let all_inc = |xs: &[&Address]| xs.iter().enumerate().all(|(i, x)| xs[i + 1..].iter().all(|y| inc(x, y)));
    if all_inc(&[alpha, beta, gamma, delta]) {
        out.push(ConjCase::A);
    }
    let mut b = false;
    let mut c = false;
    let mut d = false;
    for (a1, b1) in [(alpha, beta), (beta, alpha)] {
        for (g1, d1) in [(gamma, delta), (delta, gamma)] {
            b |= pre(g1, a1) && all_inc(&[b1, g1, d1]);
            c |= strict(g1, a1) && pre(d1, b1) && inc(g1, d1);
            d |= strict(g1, a1) && strict(g1, b1) && inc(g1, d1);
        }
    }
    for (flag, case) in [(b, ConjCase::B), (c, ConjCase::C), (d, ConjCase::D)] {
        if flag {
            out.push(case);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let (g, d) = (a("(0,-)"), a("(1,-)"));
        assert_eq!(classify_conj(&a("(-,0)"), &a("(-,1)"), &g, &d), None);
        assert_eq!(classify_conj(&a("(00,-)"), &a("(10,-)"), &g, &d), Some(ConjCase::C));
        assert_eq!(classify_conj(&a("(00,-)"), &a("(01,-)"), &g, &d), Some(ConjCase::D));
        assert_eq!(classify_conj(&g, &d, &g, &d), Some(ConjCase::Excluded));
        let (g, d) = (a("(00,-)"), a("(01,-)"));
        assert_eq!(classify_conj(&a("(10,-)"), &a("(11,-)"), &g, &d), Some(ConjCase::A));
        assert_eq!(classify_conj(&a("(001,-)"), &a("(1,-)"), &g, &d), Some(ConjCase::B));
    }
}
