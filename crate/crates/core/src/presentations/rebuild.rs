//! Transpositions rebuilt from Sym(Δ) and powers of c by induction on weight.

use super::perm::{perm_to_element, Perm};
use super::special::SpecialElements;
use crate::cantor::{delta_index, Address, Weight};
use crate::element::Element;
use crate::error::{Error, Result};

/// Which of several valid choices the construction makes.
///
/// Every choice must give the same element; comparing the two policies tests that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessPolicy {
    /// Lowest-index witnesses and coordinates.
    First,
    /// Highest-index witnesses and coordinates.
    Last,
}

/// ⟨α|β⟩ built using only permutations of Δ, powers of c, products and conjugation.
pub fn rebuild_transposition(s: &SpecialElements, alpha: &Address, beta: &Address, policy: WitnessPolicy) -> Result<Element> {
    if alpha.arity() != s.n || beta.arity() != s.n {
        return Err(Error::ArityMismatch { left: s.n, right: if alpha.arity() != s.n { alpha.arity() } else { beta.arity() } });
    }
    if !alpha.disjoint_from(beta) {
        return Err(Error::NotIncomparable(alpha.to_string(), beta.to_string()));
    }
    Rebuilder { s, policy }.swap(alpha, beta)
}

struct Rebuilder<'a> {
    s: &'a SpecialElements,
    policy: WitnessPolicy,
}

fn conj(g: &Element, h: &Element) -> Element {
    h.invert().compose_unchecked(g).compose_unchecked(h)
}

impl Rebuilder<'_> {
    fn n(&self) -> usize {
        self.s.n
    }

    fn swap(&self, alpha: &Address, beta: &Address) -> Result<Element> {
        // Short coordinates: split both entries and multiply the halves.
        if let Some(d) = (1..=self.n()).find(|&d| alpha.coord(d).len().min(beta.coord(d).len()) < 2) {
            let lo = self.swap(&alpha.child(d, false), &beta.child(d, false))?;
            let hi = self.swap(&alpha.child(d, true), &beta.child(d, true))?;
            return Ok(lo.compose_unchecked(&hi).reduce());
        }
        match (delta_index(alpha), delta_index(beta)) {
            (Some(i), Some(j)) => self.delta_swap(i, j),
            (None, Some(j)) => self.stage1(alpha, j),
            (Some(i), None) => self.stage1(beta, i),
            (None, None) => {
                let z = self.witness(&[alpha, beta]);
                let az = self.swap(alpha, &self.s.delta[z])?;
                let bz = self.swap(beta, &self.s.delta[z])?;
                Ok(conj(&az, &bz).reduce())
            }
        }
    }

    fn delta_swap(&self, i: usize, j: usize) -> Result<Element> {
        perm_to_element(&Perm::swap(self.s.delta_size(), i, j)?, self.n())
    }

    /// A Δ index incomparable with each of `avoid`.
    fn witness(&self, avoid: &[&Address]) -> usize {
        let ok = |z: &usize| avoid.iter().all(|a| self.s.delta[*z].disjoint_from(a));
        let mut range = 0..self.s.delta_size();
        match self.policy {
            WitnessPolicy::First => range.find(ok),
            WitnessPolicy::Last => range.rev().find(ok),
        }
        .expect("Δ has more than two cells")
    }

    /// ⟨α|δ^(j)⟩ with α of weight at least (3,1).
    fn stage1(&self, alpha: &Address, j: usize) -> Result<Element> {
        let n = self.n();
        let w = alpha.weight();
        let longest: Vec<usize> = (1..=n).filter(|&d| alpha.coord(d).len() == w.m).collect();
        let d = match self.policy {
            WitnessPolicy::First => longest[0],
            WitnessPolicy::Last => *longest.last().expect("nonempty"),
        };
        let x = alpha.coord(d).last().expect("nonempty");
        let hat = alpha.parent_in(d).expect("nonempty");
        if w == (Weight { m: 3, k: 1 }) {
            // ⟨δ^(d).x_d|δ^(n+1)⟩ = ⟨δ^(0)|δ^(n+1)⟩^{c^{2d+x-1}}, moved into place by σ.
            let base = self.delta_swap(0, n + 1)?;
            let k = 2 * d as i64 + x as i64 - 1;
            let placed = conj(&base, &self.s.c.pow(k));
            let hat_i = delta_index(&hat).expect("weight (3,1) minus its long bit lies in Δ");
            let sigma = Perm::completing(
                self.s.delta_size(),
                &[(d, hat_i), (n + 1, j)],
                self.policy == WitnessPolicy::Last,
            )?;
            return Ok(conj(&placed, &perm_to_element(&sigma, n)?).reduce());
        }
        // ⟨α̂.x_d|β⟩ = ⟨ζ.x_d|β⟩^{⟨ζ|α̂⟩} with ζ ∈ Δ clear of α̂ and β.
        let beta = &self.s.delta[j];
        let z = self.witness(&[&hat, beta]);
        let zeta = &self.s.delta[z];
        let lifted = self.stage1(&zeta.child(d, x), j)?;
        let mover = match delta_index(&hat) {
            Some(h) => self.delta_swap(z, h)?,
            None => self.stage1(&hat, z)?,
        };
        Ok(conj(&lifted, &mover).reduce())
    }
}

#[cfg(test)]
mod tests {
    use super::super::special::special_elements;
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn rebuild_examples() {
        let s = special_elements(2);
        let d = &s.delta;
        for (x, y) in [
            (d[0].clone(), d[5].clone()),
            (d[1].child(1, false), d[3].clone()),
            (a("(0,-)"), a("(1,-)")),
            (a("(010,11)"), a("(1101,0)")),
            (a("(0,0)"), a("(-,1)")),
        ] {
            let t = Element::transposition(&x, &y).unwrap();
            for policy in [WitnessPolicy::First, WitnessPolicy::Last] {
                let r = rebuild_transposition(&s, &x, &y, policy).unwrap();
                assert!(r.equals(&t), "{x} {y} {policy:?}");
            }
        }
        assert!(rebuild_transposition(&s, &a("(0,-)"), &a("(01,-)"), WitnessPolicy::First).is_err());
    }
}
