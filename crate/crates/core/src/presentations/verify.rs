//! Evaluating relation instances and reporting per family.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::families::RelationInstance;
use crate::element::Element;
use crate::expr::Evaluator;

/// Recorded failures per family; later instances of a saturated family are skipped.
pub const FAILURE_CAP: usize = 20;
const CHUNK: usize = 2048;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n: usize,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    pub max_total: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_max: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub index: usize,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_element: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_element: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub family: String,
    pub n: usize,
    pub bounds: Bounds,
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn new(family: &str, bounds: &Bounds) -> Self {
        VerificationReport {
            family: family.to_string(),
            n: bounds.n,
            bounds: bounds.clone(),
            checked: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

thread_local! {
    static EVALUATOR: RefCell<Option<Evaluator>> = const { RefCell::new(None) };
}

fn with_evaluator<T>(n: usize, f: impl FnOnce(&mut Evaluator) -> T) -> T {
    EVALUATOR.with(|cell| {
        let mut slot = cell.borrow_mut();
        if slot.as_ref().map(Evaluator::arity) != Some(n) {
            *slot = Some(Evaluator::new(n));
        }
        f(slot.as_mut().expect("just set"))
    })
}

/// Evaluates both sides of one instance; None means the relation holds.
pub fn check_instance(n: usize, index: usize, r: &RelationInstance) -> Option<Failure> {
    with_evaluator(n, |ev| {
        let fail = |lhs_element, rhs_element, error| Failure {
            index,
            params: r.params.to_string(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            lhs_element,
            rhs_element,
            error,
        };
        let lhs = match ev.evaluate_shared(&r.lhs) {
            Ok(g) => g,
            Err(e) => return Some(fail(None, None, Some(format!("lhs: {e}")))),
        };
        let rhs = match ev.evaluate_shared(&r.rhs) {
            Ok(g) => g,
            Err(e) => return Some(fail(Some(lhs.reduce()), None, Some(format!("rhs: {e}")))),
        };
        if lhs.equals(&rhs) {
            None
        } else {
            Some(fail(Some(lhs.reduce()), Some(rhs.reduce()), None))
        }
    })
}

/// Checks every instance, grouping results by family in order of first appearance.
pub fn verify<I>(bounds: &Bounds, instances: I) -> Vec<VerificationReport>
where
    I: IntoIterator<Item = RelationInstance>,
{
    let n = bounds.n;
    let mut order: Vec<&'static str> = Vec::new();
    let mut reports: HashMap<&'static str, VerificationReport> = HashMap::new();
    let mut iter = instances.into_iter().enumerate();
    loop {
        let mut chunk: Vec<(usize, RelationInstance)> = Vec::with_capacity(CHUNK);
        for (i, r) in iter.by_ref() {
            let rep = reports.entry(r.family).or_insert_with(|| {
                order.push(r.family);
                VerificationReport::new(r.family, bounds)
            });
            if r.opaque || rep.failures.len() >= FAILURE_CAP {
                rep.skipped += 1;
                continue;
            }
            chunk.push((i, r));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Option<Failure>> = chunk.par_iter().map(|(i, r)| check_instance(n, *i, r)).collect();
        for ((_, r), outcome) in chunk.iter().zip(outcomes) {
            let rep = reports.get_mut(r.family).expect("registered above");
            match outcome {
                None => rep.checked += 1,
                Some(f) if rep.failures.len() < FAILURE_CAP => {
                    rep.checked += 1;
                    rep.failed += 1;
                    rep.failures.push(f);
                }
                Some(_) => rep.skipped += 1,
            }
        }
    }
    order.into_iter().map(|f| reports.remove(f).expect("registered")).collect()
}

pub fn reports_to_json(reports: &[VerificationReport]) -> serde_json::Value {
    serde_json::to_value(reports).expect("reports serialize")
}

/// One line per family.
pub fn summary_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.family.len()).max().unwrap_or(6).max(6);
    let mut out = format!("{:<width$}  {:>9}  {:>6}  {:>7}  status\n", "family", "checked", "failed", "skipped");
    for r in reports {
        let status = if r.passed() { "ok" } else { "FAIL" };
        let _ = writeln!(out, "{:<width$}  {:>9}  {:>6}  {:>7}  {status}", r.family, r.checked, r.failed, r.skipped);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::Address;
    use crate::expr::GenExpr;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn corrupted_instance_is_caught() {
        let t = GenExpr::t(&a("(0,-)"), &a("(1,-)"));
        let good = RelationInstance::new("X", "", t.clone().pow(2), GenExpr::Id);
        let bad = RelationInstance::new("X", "", t.clone(), GenExpr::Id);
        let reports = verify(&Bounds { n: 2, ..Default::default() }, vec![good, bad]);
        assert_eq!(reports.len(), 1);
        assert_eq!((reports[0].checked, reports[0].failed), (2, 1));
        assert_eq!(reports[0].failures[0].index, 1);
    }

    #[test]
    fn failure_cap_skips() {
        let t = GenExpr::t(&a("(0,-)"), &a("(1,-)"));
        let bad: Vec<_> = (0..30).map(|_| RelationInstance::new("Y", "", t.clone(), GenExpr::Id)).collect();
        let reports = verify(&Bounds { n: 2, ..Default::default() }, bad);
        assert_eq!(reports[0].failed, FAILURE_CAP);
        assert_eq!(reports[0].skipped, 30 - FAILURE_CAP);
    }
}
