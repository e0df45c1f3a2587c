use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::perm::{perm_to_element, Perm};
use crate::cantor::{enumerate_delta, Address};
use crate::element::{Element, ORDER_CAP_DEFAULT};
use crate::expr::{GenExpr, GenName};

/// The concrete generators of the finite presentation and the permutations
/// used by its relations.
#[derive(Debug, Clone)]
pub struct SpecialElements {
    pub n: usize,
    /// Δ in enumeration order; `delta[i]` is δ^(i).
    pub delta: Vec<Address>,
    pub a_perm: Perm,
    pub b_perm: Perm,
    pub p_perm: Perm,
    /// `q_perms[d-1]` is q_d.
    pub q_perms: Vec<Perm>,
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub p: Element,
    pub q: Vec<Element>,
    /// Δ indices of the two cells swapped by `t`.
    pub t_pair: (usize, usize),
    pub t: Element,
    pub x: Element,
    pub y: Element,
}

impl SpecialElements {
    pub fn delta_size(&self) -> usize {
        self.delta.len()
    }

    /// δ^(i).
    pub fn d(&self, i: usize) -> &Address {
        &self.delta[i]
    }

    /// The 2n transposition factors of c, in product order.
    pub fn c_factors(&self) -> Vec<(Address, Address)> {
        c_factors(&self.delta, self.n)
    }
}

fn c_factors(delta: &[Address], n: usize) -> Vec<(Address, Address)> {
    let mut out = Vec::with_capacity(2 * n);
    for d in 1..=n {
        for x in [false, true] {
            out.push((delta[0].clone(), delta[d].child(d, x)));
        }
    }
    out
}

fn build(n: usize) -> SpecialElements {
    let delta = enumerate_delta(n);
    let size = delta.len();
    let a_perm = Perm::cycle(size, &(0..size).collect::<Vec<_>>()).expect("valid cycle");
    let b_perm = Perm::swap(size, 0, 1).expect("valid swap");
    let p_perm = Perm::cycle(size, &((n + 1)..size).collect::<Vec<_>>()).expect("valid cycle");
    let q_perms: Vec<Perm> = (1..=n)
        .map(|d| {
            let pts: Vec<usize> = (0..size).filter(|&i| i != d && i != n + 1).collect();
            Perm::cycle(size, &pts).expect("valid cycle")
        })
        .collect();
    let to_el = |p: &Perm| perm_to_element(p, n).expect("Δ-sized permutation");
    let c_ts: Vec<Element> = c_factors(&delta, n)
        .iter()
        .map(|(x, y)| Element::transposition(x, y).expect("incomparable factors"))
        .collect();
    let c = Element::product(n, &c_ts).expect("uniform arity").reduce();
    let t_pair = first_pair_clear_of_c(&delta, n);
    let t = Element::transposition(&delta[t_pair.0], &delta[t_pair.1]).expect("distinct Δ cells");
    let y = c.compose(&t).expect("uniform arity");
    let a = to_el(&a_perm);
    SpecialElements {
        n,
        a: a.clone(),
        b: to_el(&b_perm),
        c,
        p: to_el(&p_perm),
        q: q_perms.iter().map(to_el).collect(),
        a_perm,
        b_perm,
        p_perm,
        q_perms,
        t_pair,
        t,
        x: a,
        y,
        delta,
    }
}

/// First pair of Δ cells, in enumeration order, incomparable with every entry of c.
fn first_pair_clear_of_c(delta: &[Address], n: usize) -> (usize, usize) {
    let entries: Vec<Address> = c_factors(delta, n).into_iter().flat_map(|(x, y)| [x, y]).collect();
    let clear: Vec<usize> =
        (0..delta.len()).filter(|&i| entries.iter().all(|e| delta[i].disjoint_from(e))).take(2).collect();
    (clear[0], clear[1])
}

/// The special elements for arity n, built once per process and shared.
pub fn special_elements(n: usize) -> Arc<SpecialElements> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SpecialElements>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("cache lock").get(&n) {
        return s.clone();
    }
    let s = Arc::new(build(n));
    cache.lock().expect("cache lock").entry(n).or_insert(s).clone()
}

/// Whether `b` swaps two points that are consecutive on the single cycle `a`.
///
/// An N-cycle together with such a transposition generates Sym(N).
pub fn generates_symmetric_group(a: &Perm, b: &Perm) -> bool {
    let size = a.size();
    let mut i = 0;
    for k in 1..=size {
        i = a.apply(i);
        if i == 0 && k < size {
            return false;
        }
    }
    if i != 0 {
        return false;
    }
    let moved: Vec<usize> = (0..size).filter(|&j| b.apply(j) != j).collect();
    moved.len() == 2
        && b.apply(moved[0]) == moved[1]
        && (a.apply(moved[0]) == moved[1] || a.apply(moved[1]) == moved[0])
}

/// Two-generator data: x, y and words over them for a, b, c, t.
#[derive(Debug, Clone)]
pub struct TwoGeneratorScheme {
    pub x: Element,
    pub y: Element,
    /// Order of c; None if it exceeded the cap.
    pub order_c: Option<u64>,
    /// Words in x() and y() for each of a, b, c, t.
    pub witnesses: Vec<(GenName, GenExpr)>,
}

pub fn two_generator_scheme(n: usize) -> TwoGeneratorScheme {
    let s = special_elements(n);
    let order_c = s.c.order_of(ORDER_CAP_DEFAULT);
    let mut witnesses = vec![(GenName::LowerA, GenExpr::nullary(GenName::LowerX))];
    if let Some(o) = order_c {
        let o = o as i64;
        let y = || GenExpr::nullary(GenName::LowerY);
        let t_word = y().pow(o);
        // t = ⟨δ^(i)|δ^(j)⟩ conjugated by a^k moves it onto ⟨δ^(0)|δ^(1)⟩.
        let size = s.delta_size();
        let k = (size - s.t_pair.0) % size;
        let b_word = t_word.clone().conj(GenExpr::nullary(GenName::LowerX).pow(k as i64));
        witnesses.push((GenName::LowerB, b_word));
        witnesses.push((GenName::LowerC, y().pow(o + 1)));
        witnesses.push((GenName::T, t_word));
    }
    TwoGeneratorScheme { x: s.x.clone(), y: s.y.clone(), order_c, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_elements_shape() {
        for n in [2, 3] {
            let s = special_elements(n);
            assert_eq!(s.delta_size(), 1 << (2 * n));
            assert_eq!(s.p_perm.support_len(), (1 << (2 * n)) - n - 1);
            assert_eq!(s.c_factors().len(), 2 * n);
            assert_eq!(s.t_pair, (n + 1, n + 2));
            assert!(generates_symmetric_group(&s.a_perm, &s.b_perm));
            let o = s.c.order_of(100).unwrap();
            assert_eq!(o, 2 * n as u64 + 1);
        }
        assert_eq!(special_elements(2).p_perm.support_len(), 13);
    }

    #[test]
    fn symmetric_group_check_rejects_bad_pairs() {
        let a = Perm::cycle(6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(!generates_symmetric_group(&a, &Perm::swap(6, 0, 2).unwrap()));
        let short = Perm::cycle(6, &[0, 1, 2]).unwrap();
        assert!(!generates_symmetric_group(&short, &Perm::swap(6, 0, 1).unwrap()));
    }
}
