use nv_core::expr::{evaluate_str, format, parse, parse_relation_file, Arg, Evaluator, GenExpr, GenName};
use nv_core::{Address, Element, Error};
use proptest::prelude::*;

fn a(s: &str) -> Address {
    s.parse().unwrap()
}

const PAIRS: [(&str, &str); 5] = [
    ("(0,-)", "(1,-)"),
    ("(00,-)", "(1,1)"),
    ("(-,0)", "(1,1)"),
    ("(01,10)", "(1,-)"),
    ("(0,0)", "(0,1)"),
];

fn leaf() -> impl Strategy<Value = GenExpr> {
    prop_oneof![
        Just(GenExpr::Id),
        (0..PAIRS.len()).prop_map(|i| GenExpr::t(&a(PAIRS[i].0), &a(PAIRS[i].1))),
        (0i64..3, 1i64..=2).prop_map(|(m, d)| GenExpr::ints(GenName::X, &[m, d])),
        (0i64..3).prop_map(|m| GenExpr::ints(GenName::Pi, &[m])),
        (0i64..3).prop_map(|m| GenExpr::ints(GenName::PiBar, &[m])),
        (0i64..3).prop_map(|m| GenExpr::ints(GenName::C, &[m, 2])),
        Just(GenExpr::named(GenName::B, vec![Arg::Int(2), Arg::Addr(a("(1,-)"))])),
        Just(GenExpr::nullary(GenName::LowerC)),
        Just(GenExpr::nullary(GenName::LowerA)),
    ]
}

fn expr() -> impl Strategy<Value = GenExpr> {
    leaf().prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(GenExpr::Product),
            inner.clone().prop_map(GenExpr::inv),
            (inner.clone(), inner.clone()).prop_map(|(g, h)| g.conj(h)),
            (inner.clone(), inner.clone()).prop_map(|(g, h)| g.comm(h)),
            (inner.clone(), prop::sample::select(vec![-3i64, -2, 0, 1, 2, 3])).prop_map(|(g, k)| g.pow(k)),
            inner.prop_map(|g| g.localize(&a("(1,0)"))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn format_then_parse_is_identity(e in expr()) {
        let text = format(&e);
        prop_assert_eq!(parse(&text, 2).unwrap(), e.clone());
        let spaced = text.replace('*', "  *  ").replace('^', " ^ ");
        prop_assert_eq!(format(&parse(&spaced, 2).unwrap()), text);
    }

    #[test]
    fn evaluation_is_a_homomorphism(g in expr(), h in expr()) {
        let mut ev = Evaluator::new(2);
        let (eg, eh) = (ev.evaluate(&g).unwrap(), ev.evaluate(&h).unwrap());
        let prod = ev.evaluate(&GenExpr::Product(vec![g.clone(), h.clone()])).unwrap();
        prop_assert!(prod.equals(&eg.compose(&eh).unwrap()));
        let conj = ev.evaluate(&g.clone().conj(h.clone())).unwrap();
        let spelled = ev.evaluate(&GenExpr::Product(vec![h.clone().inv(), g, h])).unwrap();
        prop_assert!(conj.equals(&spelled));
    }
}

#[test]
fn grammar_examples() {
    assert!(matches!(parse("t[(0,-)|(1,-)]", 2).unwrap(), GenExpr::Transposition(..)));
    assert!(matches!(parse("t[(0,-)|(1,-)] ^ t[(1,-)|(-,1)]", 2).unwrap(), GenExpr::Conjugate(..)));
    match parse("pi(0) * C(1,2)", 2).unwrap() {
        GenExpr::Product(fs) => assert_eq!(fs.len(), 2),
        e => panic!("{e:?}"),
    }
    assert!(matches!(parse("X(0,1)^-1", 2).unwrap(), GenExpr::Inverse(_)));
    assert!(matches!(parse("X(0,1)^-2", 2).unwrap(), GenExpr::Power(_, -2)));
}

#[test]
fn parse_errors_carry_positions() {
    match parse("t[(0,-)|(1,-)] * ", 2).unwrap_err() {
        Error::Parse { pos, .. } => assert!(pos >= 16, "{pos}"),
        e => panic!("{e:?}"),
    }
    assert!(matches!(parse("t[(0,-,-)|(1,-,-)]", 2).unwrap_err(), Error::ArityMismatch { .. }));
    assert!(parse("t[(0,-)|(1,-)] t[(0,-)|(1,-)]", 2).is_err());
    assert!(parse("nosuch(1)", 2).is_err());
}

#[test]
fn evaluation_examples() {
    assert!(evaluate_str("id", 2).unwrap().is_identity());
    let half_swap = Element::transposition(&a("(0,-)"), &a("(1,-)")).unwrap();
    assert!(evaluate_str("pibar(0)", 2).unwrap().equals(&half_swap));
    assert!(evaluate_str("t[(0,-)|(1,-)]^2", 2).unwrap().is_identity());
    assert!(evaluate_str("[t[(0,-)|(1,-)], t[(0,-)|(1,-)]]", 2).unwrap().is_identity());
    let local = evaluate_str("pre((1,-), t[(0,-)|(1,-)])", 2).unwrap();
    assert!(local.equals(&Element::transposition(&a("(10,-)"), &a("(11,-)")).unwrap()));
}

#[test]
fn relation_files() {
    let text = "# split and order\nn=2\nt[(0,-)|(1,-)] = t[(00,-)|(10,-)] * t[(01,-)|(11,-)]\n\nt[(0,-)|(1,-)]^2 = id # order\n";
    let (n, rels) = parse_relation_file(text).unwrap();
    assert_eq!((n, rels.len()), (2, 2));
    assert!(parse_relation_file("t[(0,-)|(1,-)] = id").is_err());
    assert!(parse_relation_file("n=2\nt[(0,-)|(1,-)]").is_err());
}
