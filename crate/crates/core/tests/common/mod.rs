#![allow(dead_code)]

use nv_core::cantor::enumerate_addresses;
use nv_core::{Address, Element, Word};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random address with each coordinate of length at most `max_len`.
pub fn random_address<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Address {
    let coords = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            Word::from_bits((0..len).map(|_| rng.gen_bool(0.5)))
        })
        .collect();
    Address::new(coords)
}

/// Random incomparable pair.
pub fn random_pair<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> (Address, Address) {
    loop {
        let a = random_address(rng, n, max_len);
        let b = random_address(rng, n, max_len);
        if a.is_incomparable(&b).unwrap() {
            return (a, b);
        }
    }
}

/// Product of one to four random transpositions.
pub fn random_element<R: Rng>(rng: &mut R, n: usize) -> Element {
    let k = rng.gen_range(1..=4);
    let ts: Vec<Element> = (0..k)
        .map(|_| {
            let (a, b) = random_pair(rng, n, 3);
            Element::transposition(&a, &b).unwrap()
        })
        .collect();
    Element::product(n, &ts).unwrap()
}

/// A long address standing in for a point of Cantor space.
pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Address {
    let coords = (0..n).map(|_| Word::from_bits((0..24).map(|_| rng.gen_bool(0.5)))).collect();
    Address::new(coords)
}

/// Image of a point by scanning cells for the one whose domain prefixes it.
pub fn apply_point(g: &Element, p: &Address) -> Address {
    let hits: Vec<_> = g.cells().iter().filter(|c| c.dom.is_prefix_of(p).unwrap()).collect();
    assert_eq!(hits.len(), 1, "domain cells must partition");
    let c = hits[0];
    let rest = p.strip_prefix(&c.dom).unwrap();
    c.cod.concat(&rest).unwrap()
}

/// Agreement on a fixed sample of points.
pub fn agree_on_points<R: Rng>(rng: &mut R, g: &Element, h: &Element, samples: usize) -> bool {
    (0..samples).all(|_| {
        let p = random_point(rng, g.arity());
        apply_point(g, &p) == apply_point(h, &p)
    })
}

/// Some addresses of bounded total length, shuffled.
pub fn sample_addresses<R: Rng>(rng: &mut R, n: usize, max_total: usize, k: usize) -> Vec<Address> {
    let mut all = enumerate_addresses(n, max_total);
    all.shuffle(rng);
    all.truncate(k);
    all
}
