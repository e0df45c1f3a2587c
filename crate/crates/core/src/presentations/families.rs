//! Relation families as streams of checkable instances.

use std::borrow::Cow;
use std::sync::Arc;

use super::conj::{classify_conj, place, Place};
use super::special::special_elements;
use crate::cantor::{enumerate_addresses, Address, Word};
use crate::element::bullet_action;
use crate::expr::{Arg, GenExpr, GenName};

/// A pair of words asserted equal in nV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: &'static str,
    pub params: Cow<'static, str>,
    pub lhs: GenExpr,
    pub rhs: GenExpr,
    /// Counted but never evaluated.
    pub opaque: bool,
}

impl RelationInstance {
    pub fn new(family: &'static str, params: impl Into<Cow<'static, str>>, lhs: GenExpr, rhs: GenExpr) -> Self {
        RelationInstance { family, params: params.into(), lhs, rhs, opaque: false }
    }
}

fn t(a: &Address, b: &Address) -> GenExpr {
    GenExpr::t(a, b)
}

fn prod(fs: Vec<GenExpr>) -> GenExpr {
    GenExpr::product(fs)
}

fn id() -> GenExpr {
    GenExpr::Id
}

fn unit(n: usize, d: usize, s: &str) -> Address {
    Address::unit(n, d, s.parse::<Word>().expect("literal word"))
}

fn cat(a: &Address, b: &Address) -> Address {
    a.concat_unchecked(b)
}

/// x • ⟨g|d⟩ for a single letter.
fn swap_prefix(x: &Address, g: &Address, d: &Address) -> Option<Address> {
    match place(x, g, d)? {
        Place::UnderGamma => Some(cat(d, &x.strip_prefix(g)?)),
        Place::UnderDelta => Some(cat(g, &x.strip_prefix(d)?)),
        Place::Clear => Some(x.clone()),
    }
}

/// Unordered incomparable pairs (i < j) of `addrs`.
fn incomparable_pairs(addrs: &[Address]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..addrs.len() {
        for j in i + 1..addrs.len() {
            if addrs[i].disjoint_from(&addrs[j]) {
                out.push((i as u32, j as u32));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Infinite presentation

/// SYMM, ORDER, CONJ and SPLIT over addresses of total length at most `max_total`.
///
/// Pairs {α,β} and {γ,δ} are unordered; CONJ keeps only instances where both
/// bullet actions are defined.
pub fn enumerate_infinite_relations(n: usize, max_total: usize) -> impl Iterator<Item = RelationInstance> {
    let addrs = Arc::new(enumerate_addresses(n, max_total));
    let pairs = Arc::new(incomparable_pairs(&addrs));

    let (a1, p1) = (addrs.clone(), pairs.clone());
    let symm = (0..p1.len()).map(move |k| {
        let (i, j) = p1[k];
        let (x, y) = (&a1[i as usize], &a1[j as usize]);
        RelationInstance::new("SYMM", "", t(x, y), t(y, x))
    });
    let (a2, p2) = (addrs.clone(), pairs.clone());
    let order = (0..p2.len()).map(move |k| {
        let (i, j) = p2[k];
        RelationInstance::new("ORDER", "", t(&a2[i as usize], &a2[j as usize]).pow(2), id())
    });
    // Whether each address has a defined bullet image under each letter.
    let defined: Arc<Vec<bool>> = Arc::new(
        addrs.iter().flat_map(|x| pairs.iter().map(|&(g, d)| place(x, &addrs[g as usize], &addrs[d as usize]).is_some())).collect(),
    );
    let (a3, p3) = (addrs.clone(), pairs.clone());
    let conj = (0..p3.len()).flat_map(move |k| {
        let (a4, p4, ok) = (a3.clone(), p3.clone(), defined.clone());
        let (i, j) = p4[k];
        let stride = p4.len();
        (0..p4.len()).filter_map(move |l| {
            if !ok[i as usize * stride + l] || !ok[j as usize * stride + l] {
                return None;
            }
            let (x, y) = (&a4[i as usize], &a4[j as usize]);
            let (gi, di) = p4[l];
            let (g, d) = (&a4[gi as usize], &a4[di as usize]);
            let case = classify_conj(x, y, g, d)?;
            let (xb, yb) = (swap_prefix(x, g, d)?, swap_prefix(y, g, d)?);
            Some(RelationInstance::new("CONJ", case.as_str(), t(x, y).conj(t(g, d)), t(&xb, &yb)))
        })
    });
    let (a5, p5) = (addrs, pairs);
    let split = (0..p5.len()).flat_map(move |k| {
        let (i, j) = p5[k];
        let (x, y) = (a5[i as usize].clone(), a5[j as usize].clone());
        (1..=n).map(move |d| {
            RelationInstance::new(
                "SPLIT",
                format!("d={d}"),
                t(&x, &y),
                prod(vec![t(&x.child(d, false), &y.child(d, false)), t(&x.child(d, true), &y.child(d, true))]),
            )
        })
    });
    symm.chain(order).chain(conj).chain(split)
}

// ---------------------------------------------------------------------------
// Hennig–Matucci families

pub const HM_FAMILIES: [&str; 18] = [
    "HM1", "HM2", "HM3", "HM4", "HM5", "HM6", "HM7", "HM8", "HM9", "HM10", "HM11", "HM12", "HM13", "HM14", "HM15",
    "HM16", "HM17", "HM18",
];

fn x_(m: usize, d: usize) -> GenExpr {
    GenExpr::ints(GenName::X, &[m as i64, d as i64])
}

fn pi(m: usize) -> GenExpr {
    GenExpr::ints(GenName::Pi, &[m as i64])
}

fn pib(m: usize) -> GenExpr {
    GenExpr::ints(GenName::PiBar, &[m as i64])
}

fn c_(m: usize, d: usize) -> GenExpr {
    GenExpr::ints(GenName::C, &[m as i64, d as i64])
}

/// The eighteen families for 0 ≤ m ≤ m_max and second index up to q_max.
pub fn enumerate_hm_relations(n: usize, m_max: usize, q_max: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let mut push = |k: usize, params: String, lhs: Vec<GenExpr>, rhs: Vec<GenExpr>| {
        out.push(RelationInstance::new(HM_FAMILIES[k - 1], params, prod(lhs), prod(rhs)));
    };
    let dims = 1..=n;
    let baker_dims = 2..=n;
    for m in 0..=m_max {
        for q in m + 1..=q_max {
            for d in dims.clone() {
                for d2 in dims.clone() {
                    push(1, format!("m={m} q={q} d={d} d'={d2}"), vec![x_(m, d), x_(q, d2)], vec![x_(q + 1, d2), x_(m, d)]);
                }
                push(2, format!("m={m} q={q} d={d}"), vec![x_(m, d), pi(q)], vec![pi(q + 1), x_(m, d)]);
                push(5, format!("m={m} q={q} d={d}"), vec![x_(m, d), pib(q)], vec![pib(q + 1), x_(m, d)]);
            }
            for d in baker_dims.clone() {
                for d2 in dims.clone() {
                    push(15, format!("m={m} q={q} d={d} d'={d2}"), vec![x_(m, d2), c_(q, d)], vec![c_(q + 1, d), x_(m, d2)]);
                }
            }
        }
        for d in dims.clone() {
            push(3, format!("m={m} d={d}"), vec![x_(m, d), pi(m)], vec![pi(m + 1), pi(m), x_(m + 1, d)]);
            for d2 in dims.clone().filter(|&d2| d2 != d) {
                push(
                    7,
                    format!("m={m} d={d} d'={d2}"),
                    vec![x_(m, d2), x_(m + 1, d2), x_(m, d)],
                    vec![pi(m + 1), x_(m, d), x_(m + 1, d), x_(m, d2)],
                );
            }
        }
        for q in m + 2..=q_max {
            for d in dims.clone() {
                push(4, format!("q={q} m={m} d={d}"), vec![x_(q, d), pi(m)], vec![pi(m), x_(q, d)]);
            }
            push(8, format!("m={m} q={q}"), vec![pi(m), pi(q)], vec![pi(q), pi(m)]);
            push(10, format!("m={m} q={q}"), vec![pi(m), pib(q)], vec![pib(q), pi(m)]);
            for d in baker_dims.clone() {
                push(17, format!("q={q} m={m} d={d}"), vec![c_(q, d), pi(m)], vec![pi(m), c_(q, d)]);
            }
        }
        push(6, format!("m={m}"), vec![x_(m, 1), pib(m)], vec![pib(m + 1), pi(m)]);
        push(9, format!("m={m}"), vec![pi(m), pi(m + 1), pi(m)], vec![pi(m + 1), pi(m), pi(m + 1)]);
        push(11, format!("m={m}"), vec![pi(m), pib(m + 1), pi(m)], vec![pib(m + 1), pi(m), pib(m + 1)]);
        push(12, format!("m={m}"), vec![pi(m), pi(m)], vec![id()]);
        push(13, format!("m={m}"), vec![pib(m), pib(m)], vec![id()]);
        for d in baker_dims.clone() {
            push(14, format!("m={m} d={d}"), vec![x_(m, d), pib(m)], vec![pib(m + 1), pi(m), c_(m + 1, d)]);
            push(16, format!("m={m} d={d}"), vec![x_(m, 1), c_(m, d)], vec![pi(m + 1), c_(m + 2, d), x_(m, d)]);
            for d2 in 2..d {
                push(
                    18,
                    format!("m={m} d={d} d'={d2}"),
                    vec![c_(m + 2, d2), x_(m, d2), c_(m, d)],
                    vec![pi(m + 1), c_(m + 2, d), x_(m, d), c_(m, d2)],
                );
            }
        }
    }
    out.sort_by_key(|r| HM_FAMILIES.iter().position(|f| *f == r.family));
    out
}

// ---------------------------------------------------------------------------
// Finite presentation

/// R1 (opaque) through R7 for the generators a, b, c.
pub fn enumerate_finite_relations(n: usize) -> Vec<RelationInstance> {
    let s = special_elements(n);
    let dl = |i: usize| s.delta[i].clone();
    let c = || GenExpr::nullary(GenName::LowerC);
    let mut out = Vec::new();
    for k in 1..=8 {
        out.push(RelationInstance {
            family: "R1",
            params: format!("symmetric-group relation {k} of 8").into(),
            lhs: id(),
            rhs: id(),
            opaque: true,
        });
    }
    out.push(RelationInstance::new("R2", "[c,p]", c().comm(GenExpr::nullary(GenName::P)), id()));
    out.push(RelationInstance::new("R2", "[c,t]", c().comm(t(&dl(n + 2), &dl(n + 3))), id()));
    for d in 1..=n {
        for x in [false, true] {
            let q = GenExpr::ints(GenName::Q, &[d as i64]);
            let lhs = q.comm(t(&dl(d).child(d, x), &dl(n + 1)));
            out.push(RelationInstance::new("R3", format!("d={d} x={}", x as u8), lhs, id()));
        }
    }
    for d in 1..=n {
        for x in [false, true] {
            let lhs = c().comm(t(&dl(n + 2).child(d, x), &dl(n + 3)));
            out.push(RelationInstance::new("R4", format!("d={d} x={}", x as u8), lhs, id()));
        }
    }
    for d in 1..=n {
        for d2 in d + 1..=n {
            for x in [false, true] {
                for y in [false, true] {
                    let lhs = t(&dl(0).child(d, x), &dl(1)).conj(t(&dl(0), &dl(2).child(d2, y)));
                    let rhs = t(&dl(0).child(d2, y), &dl(1)).conj(t(&dl(0), &dl(2).child(d, x)));
                    out.push(RelationInstance::new(
                        "R5",
                        format!("d={d} x={} d'={d2} y={}", x as u8, y as u8),
                        lhs,
                        rhs,
                    ));
                }
            }
        }
    }
    for d in 1..=n {
        let rhs = prod(vec![
            t(&dl(0).child(d, false), &dl(1).child(d, false)),
            t(&dl(0).child(d, true), &dl(1).child(d, true)),
        ]);
        out.push(RelationInstance::new("R6", format!("d={d}"), t(&dl(0), &dl(1)), rhs));
    }
    let factors = s.c_factors().iter().map(|(x, y)| t(x, y)).collect();
    out.push(RelationInstance::new("R7", "", c(), prod(factors)));
    out
}

// ---------------------------------------------------------------------------
// Lemma identities for A_d, B̂_d, B_d and C_{0,d}

fn a_(d: usize, x: &Address, y: &Address) -> GenExpr {
    GenExpr::named(GenName::A, vec![Arg::Int(d as i64), Arg::Addr(x.clone()), Arg::Addr(y.clone())])
}

fn bhat(d: usize, x: &Address) -> GenExpr {
    GenExpr::named(GenName::Bhat, vec![Arg::Int(d as i64), Arg::Addr(x.clone())])
}

fn b_(d: usize, x: &Address) -> GenExpr {
    GenExpr::named(GenName::B, vec![Arg::Int(d as i64), Arg::Addr(x.clone())])
}

pub const LEMMA_FAMILIES: [&str; 21] = [
    "LEM_A_i",
    "LEM_A_ii",
    "LEM_A_iii",
    "LEM_A_iv",
    "LEM_PREBAKER_i",
    "LEM_PREBAKER_ii",
    "LEM_PREBAKER_iii",
    "LEM_PREBAKER_iv",
    "LEM_PREBAKER_v",
    "LEM_PREBAKER_vi",
    "LEM_PREBAKER_vii",
    "LEM_BAKER_i",
    "LEM_BAKER_ii",
    "LEM_BAKER_iii",
    "LEM_BAKER_iv",
    "LEM_BAKER_v",
    "LEM_BAKER_vi",
    "LEM_FULLBAKER_i",
    "LEM_FULLBAKER_ii",
    "LEM_BAKER_CONJ",
    "LEM_BAKER_i_LOCAL",
];

fn lemma_tag(s: &str) -> &'static str {
    LEMMA_FAMILIES.iter().find(|f| **f == s).expect("known lemma family")
}

/// Every lemma part over addresses of total length at most `max_total`.
///
/// Parts stated for fixed addresses are also checked under each prefix δ from
/// the same address set, which the prefix-insertion rule makes equivalent.
pub fn enumerate_lemma_relations(n: usize, max_total: usize) -> Vec<RelationInstance> {
    let addrs = enumerate_addresses(n, max_total);
    let pairs = incomparable_pairs(&addrs);
    let baker_dims: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    let mut push = |tag: &str, params: String, lhs: GenExpr, rhs: GenExpr| {
        out.push(RelationInstance::new(lemma_tag(tag), params, lhs, rhs));
    };
    let ordered: Vec<(&Address, &Address)> = pairs
        .iter()
        .flat_map(|&(i, j)| {
            let (x, y) = (&addrs[i as usize], &addrs[j as usize]);
            [(x, y), (y, x)]
        })
        .collect();
    let u1 = |s: &str| unit(n, 1, s);

    for &d in &baker_dims {
        // A_d(α,β): conjugation, splitting in coordinate 1 and in other baker coordinates.
        for &(x, y) in &ordered {
            for &(gi, di) in &pairs {
                let (g, dd) = (&addrs[gi as usize], &addrs[di as usize]);
                let letter = [(g.clone(), dd.clone())];
                if let (Some(xb), Some(yb)) = (bullet_action(x, &letter), bullet_action(y, &letter)) {
                    push("LEM_A_i", format!("d={d}"), a_(d, x, y).conj(t(g, dd)), a_(d, &xb, &yb));
                }
            }
            let lhs = prod(vec![
                t(&cat(x, &u1("01")), &cat(x, &u1("10"))),
                a_(d, &x.child(1, false), &y.child(1, false)),
                a_(d, &x.child(1, true), &y.child(1, true)),
                t(&cat(y, &u1("01")), &cat(y, &u1("10"))),
            ]);
            push("LEM_A_iii", format!("d={d}"), a_(d, x, y), lhs);
            for &d2 in baker_dims.iter().filter(|&&d2| d2 != d) {
                let rhs = prod(vec![
                    a_(d, &x.child(d2, false), &y.child(d2, false)),
                    a_(d, &x.child(d2, true), &y.child(d2, true)),
                ]);
                push("LEM_A_iv", format!("d={d} d'={d2}"), a_(d, x, y), rhs);
            }
        }
        // Pairwise-incomparable quadruples; A(β,α) = A(α,β)⁻¹ so unordered pairs suffice.
        for (k, &(i, j)) in pairs.iter().enumerate() {
            for &(gi, di) in &pairs[k + 1..] {
                let quad = [i, j, gi, di].map(|z| &addrs[z as usize]);
                if quad.iter().enumerate().all(|(p, q)| quad[p + 1..].iter().all(|r| q.disjoint_from(r))) {
                    let lhs = a_(d, quad[0], quad[1]).comm(a_(d, quad[2], quad[3]));
                    push("LEM_A_ii", format!("d={d}"), lhs, id());
                }
            }
        }

        // B̂_d.
        for alpha in addrs.iter().filter(|a| !a.coord(1).is_empty() && !a.coord(d).is_empty()) {
            for &(zi, ei) in &pairs {
                let (z, e) = (&addrs[zi as usize], &addrs[ei as usize]);
                if alpha.disjoint_from(z) && alpha.disjoint_from(e) {
                    push("LEM_PREBAKER_i", format!("d={d}"), bhat(d, alpha).comm(t(z, e)), id());
                }
            }
            let base = alpha.parent_in(d).expect("nonempty");
            let y = alpha.coord(d).last().expect("nonempty");
            let x = base.coord(1).last().expect("nonempty");
            let delta = base.parent_in(1).expect("nonempty");
            let local = Address::unit(n, 1, Word::from_bits([x])).with_coord(d, Word::from_bits([y]));
            for gamma in addrs.iter() {
                if gamma.coord(1).is_empty() || gamma.coord(d).is_empty() || !gamma.disjoint_from(&base) {
                    continue;
                }
                let rhs = prod(vec![
                    a_(d, &base, gamma),
                    t(&cat(&base, &unit(n, d, "01")), &cat(&base, &unit(n, d, "10"))),
                    a_(d, gamma, &base.child(d, !y)),
                ]);
                push("LEM_PREBAKER_ii", format!("d={d} gamma={gamma}"), bhat(d, &local).localize(&delta), rhs);
            }
        }
        for delta in &addrs {
            let pre = |e: GenExpr| e.localize(delta);
            let p = format!("d={d} prefix={delta}");
            for y in ["0", "1"] {
                let yd = unit(n, d, y);
                let at = |s: &str| cat(&u1(s), &yd);
                push("LEM_PREBAKER_iii", p.clone(), pre(bhat(d, &at("0")).conj(t(&u1("0"), &u1("1")))), pre(bhat(d, &at("1"))));
                push("LEM_PREBAKER_iv", p.clone(), pre(bhat(d, &at("0")).conj(t(&u1("0"), &u1("10")))), pre(bhat(d, &at("10"))));
                push("LEM_PREBAKER_iv", p.clone(), pre(bhat(d, &at("0")).conj(t(&u1("0"), &u1("11")))), pre(bhat(d, &at("11"))));
            }
            for x in ["0", "1"] {
                let l = cat(&u1(&format!("{x}0")), &unit(n, d, "1"));
                let r = cat(&u1(&format!("{x}1")), &unit(n, d, "0"));
                push("LEM_PREBAKER_v", p.clone(), pre(bhat(d, &l).comm(bhat(d, &r))), id());
                for y in ["0", "1"] {
                    let yd = unit(n, d, y);
                    let at = |s: &str| cat(&u1(s), &yd);
                    let rhs = prod(vec![
                        t(&at(&format!("{x}01")), &at(&format!("{x}10"))),
                        bhat(d, &at(&format!("{x}0"))),
                        bhat(d, &at(&format!("{x}1"))),
                    ]);
                    push("LEM_PREBAKER_vi", p.clone(), pre(bhat(d, &at(x))), pre(rhs));
                    for &d2 in baker_dims.iter().filter(|&&d2| d2 != d) {
                        let rhs = prod(vec![bhat(d, &at(x).child(d2, false)), bhat(d, &at(x).child(d2, true))]);
                        push("LEM_PREBAKER_vii", format!("{p} d'={d2}"), pre(bhat(d, &at(x))), pre(rhs));
                    }
                }
            }
        }

        // B_d.
        for alpha in addrs.iter().filter(|a| !a.coord(1).is_empty()) {
            for &(zi, ei) in &pairs {
                let (z, e) = (&addrs[zi as usize], &addrs[ei as usize]);
                if alpha.disjoint_from(z) && alpha.disjoint_from(e) {
                    push("LEM_BAKER_i", format!("d={d}"), b_(d, alpha).comm(t(z, e)), id());
                }
            }
        }
        for x in ["0", "1"] {
            let xbar = if x == "0" { "1" } else { "0" };
            for g in local_samples(n) {
                let lhs = b_(d, &u1(x)).comm(g.clone().localize(&u1(xbar)));
                push("LEM_BAKER_i_LOCAL", format!("d={d} x={x} g={g}"), lhs, id());
            }
        }
        for delta in &addrs {
            let pre = |e: GenExpr| e.localize(delta);
            let p = format!("d={d} prefix={delta}");
            push("LEM_BAKER_ii", p.clone(), pre(b_(d, &u1("0")).conj(t(&u1("0"), &u1("1")))), pre(b_(d, &u1("1"))));
            push("LEM_BAKER_iii", p.clone(), pre(b_(d, &u1("0")).conj(t(&u1("0"), &u1("10")))), pre(b_(d, &u1("10"))));
            push("LEM_BAKER_iii", p.clone(), pre(b_(d, &u1("0")).conj(t(&u1("0"), &u1("11")))), pre(b_(d, &u1("11"))));
            for x in ["0", "1"] {
                let rhs = prod(vec![
                    t(&u1(&format!("{x}01")), &u1(&format!("{x}10"))),
                    b_(d, &u1(&format!("{x}0"))),
                    b_(d, &u1(&format!("{x}1"))),
                ]);
                push("LEM_BAKER_iv", p.clone(), pre(b_(d, &u1(x))), pre(rhs));
                for &d2 in baker_dims.iter().filter(|&&d2| d2 != d) {
                    let rhs = prod(vec![b_(d, &u1(x).child(d2, false)), b_(d, &u1(x).child(d2, true))]);
                    push("LEM_BAKER_vi", format!("{p} d'={d2}"), pre(b_(d, &u1(x))), pre(rhs));
                }
            }
            for &d2 in &baker_dims {
                let p2 = format!("{p} d'={d2}");
                push("LEM_BAKER_v", p2.clone(), pre(b_(d, &u1("0")).comm(b_(d2, &u1("1")))), id());
                let c0 = |dd: usize| c_(0, dd);
                for b in ["0", "1"] {
                    let lhs = b_(d, &u1(b)).conj(c0(d2));
                    push("LEM_FULLBAKER_i", p2.clone(), pre(lhs), pre(c0(d).localize(&unit(n, d2, b))));
                }
                if d2 != d {
                    let rhs = prod(vec![c0(d).localize(&unit(n, d2, "0")), c0(d).localize(&unit(n, d2, "1"))]);
                    push("LEM_FULLBAKER_ii", p2.clone(), pre(c0(d)), pre(rhs));
                }
                for b in ["0", "1"] {
                    let lhs = b_(d, &u1(&format!("1{b}"))).conj(b_(d2, &u1("1")));
                    let rhs = b_(d, &cat(&u1("1"), &unit(n, d2, b)));
                    push("LEM_BAKER_CONJ", p2.clone(), pre(lhs), pre(rhs));
                }
            }
        }
    }
    out.sort_by_key(|r| LEMMA_FAMILIES.iter().position(|f| *f == r.family));
    out
}

/// Elements g used for the claim that B_d(x₁) commutes with x̄₁.g.
fn local_samples(n: usize) -> Vec<GenExpr> {
    let mut v = vec![
        x_(0, 1),
        pi(0),
        pib(1),
        t(&unit(n, 1, "0"), &cat(&unit(n, 1, "1"), &unit(n, 2, "1"))),
    ];
    for d in 2..=n {
        v.push(x_(0, d));
        v.push(c_(0, d));
        v.push(b_(d, &unit(n, 1, "0")));
    }
    v
}

// ---------------------------------------------------------------------------
// Rebuilt transpositions

/// `rt(α,β) = t[α|β]` for the given address pairs.
pub fn rebuild_relations(pairs: impl IntoIterator<Item = (Address, Address)>) -> Vec<RelationInstance> {
    pairs
        .into_iter()
        .map(|(x, y)| {
            let lhs = GenExpr::named(GenName::Rebuild, vec![Arg::Addr(x.clone()), Arg::Addr(y.clone())]);
            RelationInstance::new("REBUILD", "", lhs, t(&x, &y))
        })
        .collect()
}

/// Incomparable pairs whose entries both have weight at most `max`.
pub fn rebuild_pairs_by_weight(n: usize, max_coord: usize, max_weight: crate::cantor::Weight) -> Vec<(Address, Address)> {
    let addrs: Vec<Address> = enumerate_addresses(n, n * max_coord)
        .into_iter()
        .filter(|a| a.weight() <= max_weight)
        .collect();
    incomparable_pairs(&addrs).into_iter().map(|(i, j)| (addrs[i as usize].clone(), addrs[j as usize].clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_counts_small() {
        assert_eq!(enumerate_infinite_relations(2, 0).count(), 0);
        let order = enumerate_infinite_relations(2, 1).filter(|r| r.family == "ORDER").count();
        assert_eq!(order, 2);
    }

    #[test]
    fn finite_counts() {
        for n in 2..=6 {
            assert_eq!(enumerate_finite_relations(n).len(), 2 * n * n + 3 * n + 11);
        }
    }

    #[test]
    fn hm_family_18_empty_at_two() {
        assert!(enumerate_hm_relations(2, 2, 3).iter().all(|r| r.family != "HM18"));
        assert!(enumerate_hm_relations(3, 2, 3).iter().any(|r| r.family == "HM18"));
    }
}
