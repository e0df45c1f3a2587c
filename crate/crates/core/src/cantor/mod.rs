//! Words, addresses and dyadic partitions of n-dimensional Cantor space.

mod address;
mod word;

pub use address::{Address, Dyadic, Weight};
pub use word::Word;

pub(crate) use address::check_arity;

use crate::error::{Error, PartitionFault, Result};

pub fn word_is_prefix(a: &Word, b: &Word) -> bool {
    a.is_prefix_of(b)
}

pub fn word_incomparable(a: &Word, b: &Word) -> bool {
    a.is_incomparable(b)
}

pub fn addr_prefix(a: &Address, b: &Address) -> Result<bool> {
    a.is_prefix_of(b)
}

pub fn addr_incomparable(a: &Address, b: &Address) -> Result<bool> {
    a.is_incomparable(b)
}

pub fn addr_concat(a: &Address, b: &Address) -> Result<Address> {
    a.concat(b)
}

pub fn weight(a: &Address) -> Weight {
    a.weight()
}

pub fn measure(a: &Address) -> Dyadic {
    a.measure()
}

/// Checks that `cells` are pairwise disjoint basic open sets covering Cantor^n.
pub fn validate_partition(cells: &[Address]) -> Result<()> {
    let first = cells.first().ok_or(Error::EmptyPartition)?;
    let n = first.arity();
    for c in cells {
        check_arity(n, c.arity())?;
    }
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            if !a.disjoint_from(b) {
                return Err(Error::NotAPartition { reason: PartitionFault::Overlap });
            }
        }
    }
    if measures_sum_to_one(cells) {
        Ok(())
    } else {
        // Disjoint cells can only fall short of full measure.
        Err(Error::NotAPartition { reason: PartitionFault::Gap })
    }
}

/// Exact test of Σ 2^-len(cell) = 1 by carrying counts from the deepest level up.
fn measures_sum_to_one(cells: &[Address]) -> bool {
    let max = cells.iter().map(Address::total_len).max().unwrap_or(0);
    let mut counts = vec![0u64; max + 1];
    for c in cells {
        counts[c.total_len()] += 1;
    }
    for e in (1..=max).rev() {
        if counts[e] % 2 == 1 {
            return false;
        }
        counts[e - 1] += counts[e] / 2;
    }
    counts[0] == 1
}

/// Δ: all addresses whose coordinates have length exactly 2, in lexicographic
/// order of the concatenated coordinates. Index i is δ^(i).
pub fn enumerate_delta(n: usize) -> Vec<Address> {
    assert!(n >= 2, "arity must be at least 2");
    assert!(2 * n < 64, "Δ too large for arity {n}");
    let total = 1u64 << (2 * n);
    (0..total)
        .map(|v| {
            let coords = (0..n)
                .map(|d| {
                    let shift = 2 * (n - 1 - d);
                    Word::from_u64((v >> shift) & 0b11, 2)
                })
                .collect();
            Address::new(coords)
        })
        .collect()
}

/// Index of a Δ address in the canonical enumeration, if it lies in Δ.
pub fn delta_index(a: &Address) -> Option<usize> {
    if a.coords().iter().any(|w| w.len() != 2) {
        return None;
    }
    Some(a.coords().iter().fold(0usize, |acc, w| (acc << 2) | (w.bit(0) as usize) << 1 | w.bit(1) as usize))
}

/// All addresses with total length at most `max_total`.
///
/// Ordered by total length, then by length vector (descending lexicographic,
/// so longer early coordinates first), then by bits with coordinate 1 most
/// significant.
pub fn enumerate_addresses(n: usize, max_total: usize) -> Vec<Address> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        let mut shapes = Vec::new();
        length_vectors(n, total, &mut Vec::new(), &mut shapes);
        shapes.sort_by(|a, b| b.cmp(a));
        for shape in shapes {
            let mut acc = vec![Vec::<Word>::new()];
            for &len in &shape {
                let words: Vec<Word> = Word::all_of_length(len as u32).collect();
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        words.iter().map(move |w| {
                            let mut p = prefix.clone();
                            p.push(w.clone());
                            p
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(Address::new));
        }
    }
    out
}

fn length_vectors(n: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n - 1 {
        cur.push(remaining);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for l in 0..=remaining {
        cur.push(l);
        length_vectors(n, remaining - l, cur, out);
        cur.pop();
    }
}

/// Basic open sets covering the complement of the union of `targets`.
///
/// Grows a split tree from the root. At each node the split dimension is the
/// lowest coordinate in which every target meeting the node still has bits
/// beyond the node, so each target ends up as a leaf. With one or two
/// pairwise-incomparable targets such a coordinate always exists.
pub fn complement_cells(n: usize, targets: &[Address]) -> Result<Vec<Address>> {
    for t in targets {
        check_arity(n, t.arity())?;
    }
    let mut out = Vec::new();
    split_around(Address::root(n), targets, &mut out)?;
    Ok(out)
}

fn split_around(node: Address, targets: &[Address], out: &mut Vec<Address>) -> Result<()> {
    let meeting: Vec<&Address> = targets.iter().filter(|t| !t.disjoint_from(&node)).collect();
    if meeting.is_empty() {
        out.push(node);
        return Ok(());
    }
    if meeting.iter().any(|t| t.prefix_of(&node)) {
        // node lies inside a target
        return Ok(());
    }
    let n = node.arity();
    let d = (1..=n)
        .find(|&d| meeting.iter().all(|t| t.coord(d).len() > node.coord(d).len()))
        .ok_or(Error::ComplementUnsupported(meeting.len()))?;
    split_around(node.child(d, false), targets, out)?;
    split_around(node.child(d, true), targets, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn addrs(ss: &[&str]) -> Vec<Address> {
        ss.iter().map(|s| a(s)).collect()
    }

    #[test]
    fn partition_examples() {
        assert!(validate_partition(&addrs(&["(0,-)", "(1,-)"])).is_ok());
        assert_eq!(
            validate_partition(&addrs(&["(0,-)", "(10,-)"])),
            Err(Error::NotAPartition { reason: PartitionFault::Gap })
        );
        assert_eq!(
            validate_partition(&addrs(&["(0,-)", "(01,1)", "(1,-)"])),
            Err(Error::NotAPartition { reason: PartitionFault::Overlap })
        );
        let figure = addrs(&[
            "(-,-,00)",
            "(-,-,01)",
            "(0,-,1)",
            "(1,00,1)",
            "(1,01,1)",
            "(11,1,1)",
            "(10,1,1)",
        ]);
        assert!(validate_partition(&figure).is_ok());
        assert!(validate_partition(&[]).is_err());
        assert!(matches!(
            validate_partition(&addrs(&["(0,-)", "(1,-,-)"])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn delta_order_and_index() {
        let d2 = enumerate_delta(2);
        assert_eq!(d2.len(), 16);
        assert_eq!(d2[0], a("(00,00)"));
        assert_eq!(d2[1], a("(00,01)"));
        assert_eq!(d2[4], a("(01,00)"));
        assert_eq!(enumerate_delta(3).len(), 64);
        for (i, x) in d2.iter().enumerate() {
            assert_eq!(delta_index(x), Some(i));
        }
        assert_eq!(delta_index(&a("(0,00)")), None);
    }

    #[test]
    fn delta_matches_sorted_tuples() {
        let mut all: Vec<(String, String)> = Vec::new();
        for x in ["00", "01", "10", "11"] {
            for y in ["00", "01", "10", "11"] {
                all.push((y.to_string(), x.to_string()));
            }
        }
        all.sort();
        let got: Vec<(String, String)> =
            enumerate_delta(2).iter().map(|d| (d.coord(1).to_string(), d.coord(2).to_string())).collect();
        assert_eq!(got, all);
    }

    #[test]
    fn enumerate_address_counts() {
        assert_eq!(enumerate_addresses(2, 0), addrs(&["(-,-)"]));
        assert_eq!(enumerate_addresses(2, 1), addrs(&["(-,-)", "(0,-)", "(1,-)", "(-,0)", "(-,1)"]));
        assert_eq!(enumerate_addresses(2, 2).len(), 17);
        assert_eq!(enumerate_addresses(2, 4).len(), 129);
        assert_eq!(enumerate_addresses(3, 3).len(), 111);
    }

    #[test]
    fn complement_of_two_targets() {
        let cells = complement_cells(2, &addrs(&["(0,-)", "(10,-)"])).unwrap();
        assert_eq!(cells, addrs(&["(11,-)"]));
        let cells = complement_cells(2, &addrs(&["(0,0)", "(-,1)"])).unwrap();
        assert_eq!(cells, addrs(&["(1,0)"]));
        let cells = complement_cells(2, &addrs(&["(01,1)"])).unwrap();
        let mut all = cells.clone();
        all.push(a("(01,1)"));
        assert!(validate_partition(&all).is_ok());
    }
}
