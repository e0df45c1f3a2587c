//! Baker's maps and the Hennig–Matucci generators as products of transpositions.

use std::fmt;
use std::str::FromStr;

use super::{Cell, Element};
use crate::cantor::{check_arity, complement_cells, Address, Word};
use crate::error::{Error, Result};

fn check_baker_dim(n: usize, d: usize) -> Result<()> {
    if (2..=n).contains(&d) {
        Ok(())
    } else {
        Err(Error::BadDimension { d, n })
    }
}

fn t(a: &Address, b: &Address) -> Result<Element> {
    Element::transposition(a, b)
}

fn bits(n: usize, d: usize, s: &str) -> Address {
    Address::unit(n, d, s.parse().expect("literal word"))
}

fn cat(a: &Address, b: &Address) -> Address {
    a.concat_unchecked(b)
}

/// The index-d baker's map with support Γ(α), written down cell by cell.
pub fn baker_direct(d: usize, alpha: &Address) -> Result<Element> {
    let n = alpha.arity();
    check_baker_dim(n, d)?;
    let mut cells = vec![
        Cell::new(alpha.child(1, false), alpha.child(d, false)),
        Cell::new(alpha.child(1, true), alpha.child(d, true)),
    ];
    let rest = complement_cells(n, std::slice::from_ref(alpha))?;
    cells.extend(rest.into_iter().map(|a| Cell::new(a.clone(), a)));
    Ok(Element::from_cells_unchecked(n, cells))
}

/// A_d(α,β) = ⟨α.0₁|β.0_d⟩ ⟨α.1₁|β.1_d⟩ ⟨α|β⟩.
pub fn build_a(d: usize, alpha: &Address, beta: &Address) -> Result<Element> {
    check_arity(alpha.arity(), beta.arity())?;
    let n = alpha.arity();
    check_baker_dim(n, d)?;
    if !alpha.disjoint_from(beta) {
        return Err(Error::NotIncomparable(alpha.to_string(), beta.to_string()));
    }
    let factors = [
        t(&alpha.child(1, false), &beta.child(d, false))?,
        t(&alpha.child(1, true), &beta.child(d, true))?,
        t(alpha, beta)?,
    ];
    Ok(Element::product(n, &factors)?.reduce())
}

/// Splits α = δ.x₁.y_d into the base δ.x₁ and the bit y.
fn bhat_base(d: usize, alpha: &Address) -> Result<(Address, bool)> {
    let n = alpha.arity();
    check_baker_dim(n, d)?;
    if alpha.coord(1).is_empty() || alpha.coord(d).is_empty() {
        return Err(Error::BadSupportAddress(alpha.to_string()));
    }
    let y = alpha.coord(d).last().expect("nonempty");
    Ok((alpha.parent_in(d).expect("nonempty"), y))
}

/// The default witness γ for B̂_d(α) with α = δ.x₁.y_d: δ₁x̄ in coordinate 1,
/// y in coordinate d, empty elsewhere.
pub fn bhat_witness(d: usize, alpha: &Address) -> Result<Address> {
    let (base, y) = bhat_base(d, alpha)?;
    let w1 = base.coord(1);
    let x = w1.last().expect("nonempty");
    let flipped = w1.parent().expect("nonempty").pushed(!x);
    let n = alpha.arity();
    Ok(Address::unit(n, 1, flipped).with_coord(d, Word::from_bits([y])))
}

/// B̂_d(α) for α = δ.x₁.y_d, using the default witness.
pub fn build_bhat(d: usize, alpha: &Address) -> Result<Element> {
    let gamma = bhat_witness(d, alpha)?;
    build_bhat_with_witness(d, alpha, &gamma)
}

/// B̂_d(α) = A_d(δ.x₁, γ) ⟨δ.x₁.01_d | δ.x₁.10_d⟩ A_d(γ, δ.x₁.ȳ_d).
pub fn build_bhat_with_witness(d: usize, alpha: &Address, gamma: &Address) -> Result<Element> {
    check_arity(alpha.arity(), gamma.arity())?;
    let (base, y) = bhat_base(d, alpha)?;
    if gamma.coord(1).is_empty() || gamma.coord(d).is_empty() || !gamma.disjoint_from(&base) {
        return Err(Error::BadParameters(format!("{gamma} is not a valid witness for B̂_{d}({alpha})")));
    }
    let n = alpha.arity();
    let factors = [
        build_a(d, &base, gamma)?,
        t(&cat(&base, &bits(n, d, "01")), &cat(&base, &bits(n, d, "10")))?,
        build_a(d, gamma, &base.child(d, !y))?,
    ];
    Ok(Element::product(n, &factors)?.reduce())
}

/// B_d(α) = B̂_d(α.0_d) B̂_d(α.1_d) ⟨α.01_d | α.10_d⟩, for |α₁| ≥ 1.
pub fn build_b(d: usize, alpha: &Address) -> Result<Element> {
    let n = alpha.arity();
    check_baker_dim(n, d)?;
    if alpha.coord(1).is_empty() {
        return Err(Error::BadSupportAddress(alpha.to_string()));
    }
    let factors = [
        build_bhat(d, &alpha.child(d, false))?,
        build_bhat(d, &alpha.child(d, true))?,
        t(&cat(alpha, &bits(n, d, "01")), &cat(alpha, &bits(n, d, "10")))?,
    ];
    Ok(Element::product(n, &factors)?.reduce())
}

/// The four Hennig–Matucci generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HmKind {
    X,
    Pi,
    PiBar,
    C,
}

impl fmt::Display for HmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HmKind::X => "X",
            HmKind::Pi => "pi",
            HmKind::PiBar => "pibar",
            HmKind::C => "C",
        })
    }
}

impl FromStr for HmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(HmKind::X),
            "pi" => Ok(HmKind::Pi),
            "pibar" => Ok(HmKind::PiBar),
            "C" => Ok(HmKind::C),
            _ => Err(Error::BadParameters(format!("unknown generator kind {s:?}"))),
        }
    }
}

fn zeros1(n: usize, m: usize) -> Address {
    Address::unit(n, 1, Word::from_bits(std::iter::repeat_n(false, m)))
}

/// X_{m,d}, π_m, π̄_m or C_{m,d} in arity n. `d` is ignored for π and π̄.
pub fn hm_generator(kind: HmKind, m: usize, d: usize, n: usize) -> Result<Element> {
    if n < 2 {
        return Err(Error::BadArity(n));
    }
    let b1 = |s: &str| bits(n, 1, s);
    let base = match kind {
        HmKind::X => {
            if !(1..=n).contains(&d) {
                return Err(Error::BadDimension { d, n });
            }
            let x01 = Element::product(n, &[t(&b1("0"), &b1("1"))?, t(&b1("0"), &b1("10"))?, t(&b1("10"), &b1("11"))?])?;
            if d == 1 {
                x01.reduce()
            } else {
                x01.compose(&build_b(d, &b1("1"))?)?.reduce()
            }
        }
        HmKind::Pi => t(&b1("01"), &b1("1"))?,
        HmKind::PiBar => t(&b1("0"), &b1("1"))?,
        HmKind::C => {
            check_baker_dim(n, d)?;
            if m == 0 {
                let factors = [t(&b1("01"), &b1("10"))?, build_b(d, &b1("0"))?, build_b(d, &b1("1"))?];
                return Ok(Element::product(n, &factors)?.reduce());
            }
            return build_b(d, &b1("0"))?.localize(&zeros1(n, m - 1));
        }
    };
    if m == 0 {
        Ok(base)
    } else {
        base.localize(&zeros1(n, m))
    }
}
