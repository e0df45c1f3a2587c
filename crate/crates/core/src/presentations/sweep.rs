//! Named sweeps with default bounds.

use std::fmt;
use std::str::FromStr;

use super::families::{
    enumerate_finite_relations, enumerate_hm_relations, enumerate_infinite_relations, enumerate_lemma_relations,
    rebuild_pairs_by_weight, rebuild_relations,
};
use super::verify::{verify, Bounds, VerificationReport};
use crate::cantor::Weight;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Infinite,
    Hm,
    Finite,
    Lemmas,
    Rebuild,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Infinite, Family::Hm, Family::Finite, Family::Lemmas, Family::Rebuild];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Infinite => "infinite",
            Family::Hm => "hm",
            Family::Finite => "finite",
            Family::Lemmas => "lemmas",
            Family::Rebuild => "rebuild",
        }
    }

    /// Default `L`: total address length, or the coordinate length bound for `Rebuild`.
    pub fn default_bound(self, n: usize) -> Option<usize> {
        match self {
            Family::Infinite => Some(if n == 2 { 4 } else { 3 }),
            Family::Lemmas => Some(if n == 2 { 3 } else { 2 }),
            Family::Rebuild => Some(if n == 2 { 3 } else { 1 }),
            Family::Hm | Family::Finite => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::BadParameters(format!("unknown family {s:?}")))
    }
}

/// Sweep limits; `None` fields take the family defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct SweepLimits {
    pub l: Option<usize>,
    pub m_max: Option<usize>,
    pub q_max: Option<usize>,
}

/// Enumerates and verifies one family at arity `n`.
///
/// `Rebuild` takes every incomparable pair of weight at most (L, 2).
pub fn verify_family(family: Family, n: usize, limits: SweepLimits) -> Result<Vec<VerificationReport>> {
    if n < 2 {
        return Err(Error::BadArity(n));
    }
    let l = limits.l.or(family.default_bound(n));
    let mut bounds = Bounds { n, max_total: l, ..Default::default() };
    Ok(match family {
        Family::Infinite => verify(&bounds, enumerate_infinite_relations(n, l.unwrap_or_default())),
        Family::Hm => {
            let (m, q) = (limits.m_max.unwrap_or(2), limits.q_max.unwrap_or(3));
            bounds.m_max = Some(m);
            bounds.q_max = Some(q);
            verify(&bounds, enumerate_hm_relations(n, m, q))
        }
        Family::Finite => verify(&bounds, enumerate_finite_relations(n)),
        Family::Lemmas => verify(&bounds, enumerate_lemma_relations(n, l.unwrap_or_default())),
        Family::Rebuild => {
            let m = l.unwrap_or_default();
            verify(&bounds, rebuild_relations(rebuild_pairs_by_weight(n, m, Weight { m, k: 2 })))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("HM".parse::<Family>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let reports = verify_family(Family::Hm, 2, SweepLimits { m_max: Some(1), ..Default::default() }).unwrap();
        assert!(reports.iter().all(|r| r.passed() && r.bounds.m_max == Some(1)));
        let reports = verify_family(Family::Rebuild, 2, SweepLimits { l: Some(1), ..Default::default() }).unwrap();
        assert!(reports[0].checked > 0 && reports[0].passed());
        assert!(verify_family(Family::Finite, 1, SweepLimits::default()).is_err());
    }
}
