//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{random_element, random_pair};
use nv_core::cantor::enumerate_addresses;
use nv_core::element::{baker_direct, build_a, build_b, build_bhat};
use nv_core::presentations::*;
use nv_core::{bullet_action, Element, Weight};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn totals(reports: &[VerificationReport]) -> (usize, usize) {
    (reports.iter().map(|r| r.checked).sum(), reports.iter().map(|r| r.failed).sum())
}

fn sweep(bounds: Bounds, instances: impl IntoIterator<Item = RelationInstance>, limit: Duration) -> (bool, String) {
    let t0 = Instant::now();
    let reports = verify(&bounds, instances);
    let took = t0.elapsed();
    let (checked, failed) = totals(&reports);
    for r in reports.iter().filter(|r| !r.passed()) {
        eprintln!("{}", summary_table(std::slice::from_ref(r)));
        for f in &r.failures {
            eprintln!("  {} = {} ({:?})", f.lhs, f.rhs, f.error);
        }
    }
    let ok = failed == 0 && took < limit;
    (ok, format!("n={} checked={checked} failed={failed} in {:.1}s", bounds.n, took.as_secs_f64()))
}

fn infinite_sweep() -> Outcome {
    let limit = Duration::from_secs(60);
    let (a, da) = sweep(Bounds { n: 2, max_total: Some(4), ..Default::default() }, enumerate_infinite_relations(2, 4), limit);
    let (b, db) = sweep(Bounds { n: 3, max_total: Some(3), ..Default::default() }, enumerate_infinite_relations(3, 3), limit);
    outcome(a && b, format!("L=4: {da}; L=3: {db}"))
}

fn hm_sweep() -> Outcome {
    let limit = Duration::from_secs(60);
    let mut details = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        let rels = enumerate_hm_relations(n, 2, 3);
        let fam18 = rels.iter().filter(|r| r.family == "HM18").count();
        if n == 3 && fam18 == 0 {
            ok = false;
        }
        let (pass, d) = sweep(Bounds { n, m_max: Some(2), q_max: Some(3), ..Default::default() }, rels, limit);
        ok &= pass;
        details.push(format!("{d} HM18={fam18}"));
    }
    outcome(ok, details.join("; "))
}

fn baker_coherence() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in [2, 3] {
        for alpha in enumerate_addresses(n, 3) {
            if alpha.coord(1).is_empty() {
                continue;
            }
            for d in 2..=n {
                let direct = baker_direct(d, &alpha).unwrap();
                checked += 1;
                bad += !build_b(d, &alpha).unwrap().equals(&direct) as usize;
                if !alpha.coord(d).is_empty() {
                    checked += 1;
                    bad += !build_bhat(d, &alpha).unwrap().equals(&direct) as usize;
                }
            }
        }
    }
    outcome(bad == 0, format!("checked={checked} failed={bad}"))
}

fn a_map() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for n in [2, 3] {
        let addrs = enumerate_addresses(n, 3);
        let bakers: Vec<Vec<Element>> =
            addrs.iter().map(|x| (2..=n).map(|d| baker_direct(d, x).unwrap()).collect()).collect();
        for (i, x) in addrs.iter().enumerate() {
            for (j, y) in addrs.iter().enumerate() {
                if !x.is_incomparable(y).unwrap() {
                    continue;
                }
                for d in 2..=n {
                    let expected = bakers[i][d - 2].compose(&bakers[j][d - 2].invert()).unwrap();
                    checked += 1;
                    bad += !build_a(d, x, y).unwrap().equals(&expected) as usize;
                }
            }
        }
    }
    outcome(bad == 0, format!("checked={checked} failed={bad}"))
}

fn lemma_suites() -> Outcome {
    let reports = verify(&Bounds { n: 2, max_total: Some(3), ..Default::default() }, enumerate_lemma_relations(2, 3));
    let (checked, failed) = totals(&reports);
    // Parts that split in a second baker coordinate need n >= 3.
    let reports3 = verify(&Bounds { n: 3, max_total: Some(2), ..Default::default() }, enumerate_lemma_relations(3, 2));
    let (checked3, failed3) = totals(&reports3);
    let missing: Vec<&str> = LEMMA_FAMILIES
        .iter()
        .filter(|f| !reports.iter().chain(&reports3).any(|r| r.family == **f && r.checked > 0))
        .copied()
        .collect();
    outcome(
        failed == 0 && failed3 == 0 && missing.is_empty(),
        format!("n=2 L=3 checked={checked} failed={failed}; n=3 L=2 checked={checked3} failed={failed3}; unexercised={missing:?}"),
    )
}

fn finite_counts() -> Outcome {
    let counts: Vec<(usize, usize)> = (2..=6).map(|n| (n, enumerate_finite_relations(n).len())).collect();
    let ok = counts.iter().all(|&(n, c)| c == 2 * n * n + 3 * n + 11) && counts[0].1 == 25;
    outcome(ok, format!("{counts:?}"))
}

fn finite_verification() -> Outcome {
    let (a, da) = sweep(Bounds { n: 2, ..Default::default() }, enumerate_finite_relations(2), Duration::from_secs(120));
    let (b, db) = sweep(Bounds { n: 3, ..Default::default() }, enumerate_finite_relations(3), Duration::from_secs(120));
    let s = special_elements(2);
    let sym = generates_symmetric_group(&s.a_perm, &s.b_perm);
    outcome(a && b && sym, format!("{da}; {db}; a,b generate Sym(Δ): {sym}"))
}

fn reconstruction() -> Outcome {
    let t0 = Instant::now();
    let mut pairs = rebuild_pairs_by_weight(2, 3, Weight { m: 3, k: 2 });
    let swept = pairs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    pairs.extend((0..100).map(|_| random_pair(&mut rng, 2, 4)));
    let reports = verify(&Bounds { n: 2, ..Default::default() }, rebuild_relations(pairs));
    let (checked, failed) = totals(&reports);
    outcome(
        failed == 0 && checked == swept + 100,
        format!("weight<=(3,2) pairs={swept} + 100 random, failed={failed} in {:.1}s", t0.elapsed().as_secs_f64()),
    )
}

fn two_generators() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in [2, 3] {
        let scheme = two_generator_scheme(n);
        let s = special_elements(n);
        match scheme.order_c {
            Some(o) => {
                let good = o % 2 == 1
                    && scheme.y.pow(o as i64).equals(&s.t)
                    && scheme.y.pow(o as i64 + 1).equals(&s.c);
                ok &= good;
                details.push(format!("n={n} order(c)={o}"));
            }
            None => {
                ok = false;
                details.push(format!("n={n} order(c) unknown"));
            }
        }
    }
    outcome(ok, details.join("; "))
}

fn algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e56);
    let cases = 1000;
    let mut bad = [0usize; 4];
    for i in 0..cases {
        let n = 2 + i % 2;
        let (f, g, h) = (random_element(&mut rng, n), random_element(&mut rng, n), random_element(&mut rng, n));
        bad[0] += !g.compose(&g.invert()).unwrap().is_identity() as usize;
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        bad[1] += !left.equals(&right) as usize;
        let word: Vec<_> = (0..3).map(|_| random_pair(&mut rng, n, 2)).collect();
        let ts: Vec<Element> = word.iter().map(|(x, y)| Element::transposition(x, y).unwrap()).collect();
        let w = Element::product(n, &ts).unwrap();
        let gamma = common::random_address(&mut rng, n, 3);
        if let Some(img) = bullet_action(&gamma, &word) {
            bad[2] += (w.apply_address(&gamma) != Some(img)) as usize;
        }
        let back = Element::from_json(&g.to_json()).unwrap();
        bad[3] += (back.cells() != g.cells() || !back.equals(&g)) as usize;
    }
    outcome(bad == [0; 4], format!("cases={cases} failures [inverse, assoc, bullet, json]={bad:?}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("infinite-presentation sweep", infinite_sweep),
        ("HM relation sweep", hm_sweep),
        ("baker coherence", baker_coherence),
        ("A_d characterization", a_map),
        ("lemma suites", lemma_suites),
        ("finite-presentation counts", finite_counts),
        ("R2-R7 verification", finite_verification),
        ("transposition reconstruction", reconstruction),
        ("two-generator scheme", two_generators),
        ("algebra properties", algebra),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name} ({}; {:.1}s)", i + 1, o.detail, t0.elapsed().as_secs_f64());
        failed += !o.pass as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
