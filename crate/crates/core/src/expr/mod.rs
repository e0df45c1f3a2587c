//! The generator word language: syntax tree, parser, printer and evaluator.

mod ast;
mod eval;
mod parser;

pub use ast::{Arg, GenExpr, GenName, NamedGen};
pub use eval::{evaluate_str, Evaluator};
pub use parser::{parse, parse_relation_file};

/// Canonical text of an expression; `parse(&format(e), n)` rebuilds `e`.
pub fn format(e: &GenExpr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_round_trips() {
        for s in [
            "t[(0,-)|(1,-)]",
            "(t[(0,-)|(1,-)]^t[(1,-)|(-,1)])^(pi(0) * C(1,2))",
            "pre((0,-), B(2,(1,-)))",
            "(X(0,1) * pi(1))^-1 * [a(), b()]^3 * id",
            "((c()^2) * p())^q(1)",
        ] {
            let e = parse(s, 2).unwrap();
            let f = format(&e);
            assert_eq!(parse(&f, 2).unwrap(), e, "{s} -> {f}");
        }
        assert_eq!(format(&parse("  t[(0,-)|(1,-)]*id ", 2).unwrap()), "t[(0,-)|(1,-)] * id");
    }
}
