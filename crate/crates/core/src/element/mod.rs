//! Elements of nV as prefix-replacement maps and their algebra.
//!
//! Maps are written on the right: `g.compose(&h)` applies `g` first.

mod builders;

pub use builders::{
    baker_direct, build_a, build_b, build_bhat, build_bhat_with_witness, bhat_witness, hm_generator, HmKind,
};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cantor::{check_arity, complement_cells, validate_partition, Address};
use crate::error::{Error, Result};

/// One piece of an element: Γ(dom) is carried onto Γ(cod) by `dom.w ↦ cod.w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cell {
    pub dom: Address,
    pub cod: Address,
}

impl Cell {
    pub fn new(dom: Address, cod: Address) -> Self {
        Cell { dom, cod }
    }
}

/// An element of nV given by a bijection between two partitions of Cantor^n.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct Element {
    n: usize,
    cells: Vec<Cell>,
}

impl Element {
    /// Builds an element after checking that both sides are partitions.
    pub fn new(n: usize, cells: Vec<Cell>) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadArity(n));
        }
        for c in &cells {
            check_arity(n, c.dom.arity())?;
            check_arity(n, c.cod.arity())?;
        }
        let doms: Vec<Address> = cells.iter().map(|c| c.dom.clone()).collect();
        let cods: Vec<Address> = cells.iter().map(|c| c.cod.clone()).collect();
        validate_partition(&doms)?;
        validate_partition(&cods)?;
        Ok(Element { n, cells })
    }

    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<Cell>) -> Self {
        Element { n, cells }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "arity must be at least 2");
        let root = Address::root(n);
        Element { n, cells: vec![Cell::new(root.clone(), root)] }
    }

    /// The transposition ⟨α|β⟩ swapping Γ(α) and Γ(β) by prefix replacement.
    pub fn transposition(alpha: &Address, beta: &Address) -> Result<Self> {
        check_arity(alpha.arity(), beta.arity())?;
        if !alpha.disjoint_from(beta) {
            return Err(Error::NotIncomparable(alpha.to_string(), beta.to_string()));
        }
        let n = alpha.arity();
        let mut cells = vec![Cell::new(alpha.clone(), beta.clone()), Cell::new(beta.clone(), alpha.clone())];
        let rest = complement_cells(n, &[alpha.clone(), beta.clone()])?;
        cells.extend(rest.into_iter().map(|a| Cell::new(a.clone(), a)));
        Ok(Element { n, cells })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `self` followed by `h`: the map w ↦ h(self(w)).
    ///
    /// Each codomain cell of `self` meets some domain cells of `h`; the
    /// intersections are basic open sets given by coordinate-wise meets and
    /// partition that codomain cell.
    pub fn compose(&self, h: &Element) -> Result<Element> {
        check_arity(self.n, h.n)?;
        Ok(self.compose_unchecked(h))
    }

    pub(crate) fn compose_unchecked(&self, h: &Element) -> Element {
        if h.is_identity() {
            return self.clone();
        }
        if self.is_identity() {
            return h.clone();
        }
        let mut cells = Vec::with_capacity(self.cells.len().max(h.cells.len()));
        for g in &self.cells {
            for k in &h.cells {
                if g.cod.disjoint_from(&k.dom) {
                    continue;
                }
                cells.push(Cell::new(g.dom.graft(&g.cod, &k.dom), k.cod.graft(&k.dom, &g.cod)));
            }
        }
        Element { n: self.n, cells }
    }

    /// `h⁻¹ self h` without materializing either partial product.
    pub(crate) fn conjugate_unchecked(&self, h: &Element) -> Element {
        let mut cells = Vec::with_capacity(self.cells.len().max(h.cells.len()));
        for a in &h.cells {
            for g in &self.cells {
                if a.dom.disjoint_from(&g.dom) {
                    continue;
                }
                let (dom, mid) = (a.cod.graft(&a.dom, &g.dom), g.cod.graft(&g.dom, &a.dom));
                for k in &h.cells {
                    if mid.disjoint_from(&k.dom) {
                        continue;
                    }
                    cells.push(Cell::new(dom.graft(&mid, &k.dom), k.cod.graft(&k.dom, &mid)));
                }
            }
        }
        Element { n: self.n, cells }
    }

    /// Product of a sequence of elements, applied left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(n: usize, factors: I) -> Result<Element> {
        let mut acc = Element::identity(n);
        for f in factors {
            acc = acc.compose(f)?;
        }
        Ok(acc)
    }

    pub fn invert(&self) -> Element {
        Element {
            n: self.n,
            cells: self.cells.iter().map(|c| Cell::new(c.cod.clone(), c.dom.clone())).collect(),
        }
    }

    /// `h⁻¹ self h`.
    pub fn conjugate(&self, h: &Element) -> Result<Element> {
        check_arity(self.n, h.n)?;
        Ok(self.conjugate_unchecked(h))
    }

    /// `self⁻¹ h⁻¹ self h`.
    pub fn commutator(&self, h: &Element) -> Result<Element> {
        self.invert().compose(&h.invert())?.compose(self)?.compose(h)
    }

    /// `self^k`, negative exponents through the inverse.
    pub fn pow(&self, k: i64) -> Element {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut acc = Element::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    /// A cell with dom ≠ cod moves every point of its domain.
    pub fn is_identity(&self) -> bool {
        self.cells.iter().all(|c| c.dom == c.cod)
    }

    /// Same map on Cantor^n, decided on the pairwise meets of the two domain partitions.
    pub fn equals(&self, h: &Element) -> bool {
        if self.n != h.n {
            return false;
        }
        if h.is_identity() {
            return self.is_identity();
        }
        if self.is_identity() {
            return h.is_identity();
        }
        self.cells.iter().all(|g| {
            h.cells.iter().all(|k| {
                g.dom.disjoint_from(&k.dom) || g.cod.graft_eq(&g.dom, &k.dom, &k.cod, &k.dom, &g.dom)
            })
        })
    }

    /// Splits cell `i` in coordinate `d` on both sides. The map is unchanged.
    pub fn refine_cell(&self, i: usize, d: usize) -> Result<Element> {
        if !(1..=self.n).contains(&d) {
            return Err(Error::BadDimension { d, n: self.n });
        }
        let mut cells = self.cells.clone();
        let c = cells.swap_remove(i);
        cells.push(Cell::new(c.dom.child(d, false), c.cod.child(d, false)));
        cells.push(Cell::new(c.dom.child(d, true), c.cod.child(d, true)));
        Ok(Element { n: self.n, cells })
    }

    /// Greedily merges sibling pairs (α.0_d→β.0_d, α.1_d→β.1_d) into (α→β).
    ///
    /// The result is an equal element with sorted cells. It is not claimed to
    /// be a canonical form.
    pub fn reduce(&self) -> Element {
        let mut cells: Vec<Cell> = self.cells.clone();
        loop {
            let index: HashMap<&Address, usize> = cells.iter().enumerate().map(|(i, c)| (&c.dom, i)).collect();
            let mut used = vec![false; cells.len()];
            let mut merged: Vec<Cell> = Vec::new();
            for (i, c) in cells.iter().enumerate() {
                if used[i] {
                    continue;
                }
                for d in 1..=self.n {
                    if c.dom.coord(d).last() != Some(false) || c.cod.coord(d).last() != Some(false) {
                        continue;
                    }
                    let sib_dom = sibling(&c.dom, d);
                    let Some(&j) = index.get(&sib_dom) else { continue };
                    if used[j] || cells[j].cod != sibling(&c.cod, d) {
                        continue;
                    }
                    used[i] = true;
                    used[j] = true;
                    merged.push(Cell::new(
                        c.dom.parent_in(d).expect("nonempty coordinate"),
                        c.cod.parent_in(d).expect("nonempty coordinate"),
                    ));
                    break;
                }
            }
            if merged.is_empty() {
                break;
            }
            merged.extend(cells.iter().zip(&used).filter(|(_, u)| !**u).map(|(c, _)| c.clone()));
            cells = merged;
        }
        cells.sort_by(|a, b| a.dom.cmp(&b.dom));
        Element { n: self.n, cells }
    }

    /// γ' such that the map sends γ.w to γ'.w for every w, if there is one.
    pub fn apply_address(&self, gamma: &Address) -> Option<Address> {
        if gamma.arity() != self.n {
            return None;
        }
        if let Some(c) = self.cells.iter().find(|c| c.dom.prefix_of(gamma)) {
            return Some(c.cod.graft(&c.dom, gamma));
        }
        // Γ(γ) is cut by several cells: each piece must shift by the same prefix.
        let mut image: Option<Address> = None;
        for c in self.cells.iter().filter(|c| !c.dom.disjoint_from(gamma)) {
            let meet = c.dom.graft(&c.dom, gamma);
            let moved = c.cod.graft(&c.dom, &meet);
            let mut coords = Vec::with_capacity(self.n);
            for d in 1..=self.n {
                let (m, g, w) = (meet.coord(d), gamma.coord(d), moved.coord(d));
                let extra = m.len() - g.len();
                if w.len() < extra || w.suffix_from(w.len() - extra) != m.suffix_from(g.len()) {
                    return None;
                }
                coords.push(w.prefix(w.len() - extra));
            }
            let candidate = Address::new(coords);
            match &image {
                None => image = Some(candidate),
                Some(prev) if *prev == candidate => {}
                Some(_) => return None,
            }
        }
        image
    }

    /// δ.g: acts as `g` inside Γ(δ) and as the identity elsewhere.
    pub fn localize(&self, delta: &Address) -> Result<Element> {
        check_arity(self.n, delta.arity())?;
        let mut cells: Vec<Cell> = self
            .cells
            .iter()
            .map(|c| Cell::new(delta.concat_unchecked(&c.dom), delta.concat_unchecked(&c.cod)))
            .collect();
        let rest = complement_cells(self.n, std::slice::from_ref(delta))?;
        cells.extend(rest.into_iter().map(|a| Cell::new(a.clone(), a)));
        Ok(Element { n: self.n, cells })
    }

    /// Least k ≤ cap with gᵏ = 1.
    ///
    /// Gives up early once a power grows past `ORDER_CELL_LIMIT` cells, which
    /// happens for infinite-order elements such as baker's maps.
    pub fn order_of(&self, cap: u64) -> Option<u64> {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Some(k);
            }
            if power.cells.len() > ORDER_CELL_LIMIT {
                return None;
            }
            power = power.compose_unchecked(self).reduce();
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Element> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

pub const ORDER_CAP_DEFAULT: u64 = 10_000;
pub const ORDER_CELL_LIMIT: usize = 1 << 16;

fn sibling(a: &Address, d: usize) -> Address {
    let w = a.coord(d);
    let last = w.last().expect("nonempty coordinate");
    a.with_coord(d, w.parent().expect("nonempty coordinate").pushed(!last))
}

/// γ • w: the partial prefix-substitution action folded over the letters of a transposition word.
pub fn bullet_action(gamma: &Address, word: &[(Address, Address)]) -> Option<Address> {
    let mut cur = gamma.clone();
    for (a, b) in word {
        if a.arity() != cur.arity() || b.arity() != cur.arity() {
            return None;
        }
        cur = if let Some(rest) = cur.strip_prefix(a) {
            b.concat_unchecked(&rest)
        } else if let Some(rest) = cur.strip_prefix(b) {
            a.concat_unchecked(&rest)
        } else if cur.disjoint_from(a) && cur.disjoint_from(b) {
            cur
        } else {
            return None;
        };
    }
    Some(cur)
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(n={}; ", self.n)?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}→{}", c.dom, c.cod)?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    dom: String,
    cod: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    cells: Vec<CellJson>,
}

impl From<Element> for ElementJson {
    fn from(g: Element) -> Self {
        ElementJson {
            n: g.n,
            cells: g.cells.iter().map(|c| CellJson { dom: c.dom.to_string(), cod: c.cod.to_string() }).collect(),
        }
    }
}

impl TryFrom<ElementJson> for Element {
    type Error = Error;

    fn try_from(j: ElementJson) -> Result<Element> {
        let cells = j
            .cells
            .iter()
            .map(|c| Ok(Cell::new(c.dom.parse()?, c.cod.parse()?)))
            .collect::<Result<Vec<Cell>>>()?;
        Element::new(j.n, cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn t(x: &str, y: &str) -> Element {
        Element::transposition(&a(x), &a(y)).unwrap()
    }

    fn cellset(g: &Element) -> Vec<(String, String)> {
        let mut v: Vec<_> = g.cells().iter().map(|c| (c.dom.to_string(), c.cod.to_string())).collect();
        v.sort();
        v
    }

    #[test]
    fn transposition_cells() {
        assert_eq!(cellset(&t("(0,-)", "(1,-)")), vec![("(0,-)".into(), "(1,-)".into()), ("(1,-)".into(), "(0,-)".into())]);
        let g = t("(0,-)", "(10,-)");
        assert_eq!(
            cellset(&g),
            vec![
                ("(0,-)".into(), "(10,-)".into()),
                ("(10,-)".into(), "(0,-)".into()),
                ("(11,-)".into(), "(11,-)".into())
            ]
        );
        assert!(Element::new(2, g.cells().to_vec()).is_ok());
        assert!(matches!(Element::transposition(&a("(0,-)"), &a("(0,-)")), Err(Error::NotIncomparable(..))));
        assert!(matches!(Element::transposition(&a("(0,-)"), &a("(1,-,-)")), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn compose_examples() {
        let s = t("(0,-)", "(1,-)");
        assert!(s.compose(&s).unwrap().equals(&Element::identity(2)));
        let split = t("(00,-)", "(10,-)").compose(&t("(01,-)", "(11,-)")).unwrap();
        assert!(split.equals(&s));
        assert!(s.compose(&Element::identity(2)).unwrap().equals(&s));
        assert!(!Element::identity(2).equals(&s));
        assert!(t("(0,-)", "(1,-)").equals(&t("(1,-)", "(0,-)")));
    }

    #[test]
    fn apply_and_bullet() {
        let s = t("(0,-)", "(1,-)");
        assert_eq!(s.apply_address(&a("(01,1)")), Some(a("(11,1)")));
        assert_eq!(t("(00,-)", "(10,-)").apply_address(&a("(0,-)")), None);
        assert_eq!(Element::identity(2).apply_address(&a("(01,1)")), Some(a("(01,1)")));

        assert_eq!(bullet_action(&a("(01,-)"), &[(a("(0,-)"), a("(1,-)"))]), Some(a("(11,-)")));
        assert_eq!(bullet_action(&a("(0,-)"), &[(a("(00,-)"), a("(1,-)"))]), None);
        assert_eq!(bullet_action(&a("(10,1)"), &[(a("(0,-)"), a("(11,-)"))]), Some(a("(10,1)")));
    }

    #[test]
    fn localize_examples() {
        let s = t("(0,-)", "(1,-)");
        assert!(s.localize(&a("(-,-)")).unwrap().equals(&s));
        assert!(s.localize(&a("(0,-)")).unwrap().equals(&t("(00,-)", "(01,-)")));
    }

    #[test]
    fn reduce_merges_siblings() {
        let e = Element::identity(2).refine_cell(0, 1).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.reduce().len(), 1);
        let s = t("(0,-)", "(1,-)").refine_cell(0, 2).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.reduce().len(), 2);
        assert!(s.reduce().equals(&s));
    }

    #[test]
    fn order_examples() {
        assert_eq!(Element::identity(2).order_of(10), Some(1));
        assert_eq!(t("(0,-)", "(1,-)").order_of(10), Some(2));
        let three = t("(0,-)", "(10,-)").compose(&t("(0,-)", "(11,-)")).unwrap();
        assert_eq!(three.order_of(10), Some(3));
        assert_eq!(three.order_of(2), None);
    }

    #[test]
    fn json_round_trip() {
        let g = t("(0,-)", "(10,-)");
        let s = g.to_json();
        assert!(s.contains("\"dom\":\"(0,-)\""));
        assert_eq!(Element::from_json(&s).unwrap(), g);
        assert!(Element::from_json(r#"{"n":2,"cells":[{"dom":"(0,-)","cod":"(1,-)"}]}"#).is_err());
    }
}
