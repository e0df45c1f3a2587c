//! Pictures of domain and codomain partitions.

use std::fmt::Write as _;

use crate::cantor::{Address, Word};
use crate::element::Element;
use crate::error::{Error, Result};

const PANEL: f64 = 240.0;
const MARGIN: f64 = 20.0;

/// Left endpoint and width of the dyadic interval of `w`.
fn interval(w: &Word) -> (f64, f64) {
    let mut lo = 0.0;
    let mut width = 1.0;
    for b in w.iter() {
        width /= 2.0;
        if b {
            lo += width;
        }
    }
    (lo, width)
}

fn rect(out: &mut String, ox: f64, a: &Address, label: usize) {
    let (x, w) = interval(a.coord(1));
    let (y, h) = interval(a.coord(2));
    let (px, pw, ph) = (ox + x * PANEL, w * PANEL, h * PANEL);
    // Coordinate 2 grows upward.
    let py = MARGIN + (1.0 - y - h) * PANEL;
    let _ = writeln!(
        out,
        r##"  <rect x="{px:.3}" y="{py:.3}" width="{pw:.3}" height="{ph:.3}" fill="none" stroke="#000" stroke-width="1"/>"##
    );
    let font = (pw.min(ph) * 0.4).clamp(4.0, 16.0);
    let _ = writeln!(
        out,
        r#"  <text x="{:.3}" y="{:.3}" font-size="{font:.1}" text-anchor="middle" dominant-baseline="central">{label}</text>"#,
        px + pw / 2.0,
        py + ph / 2.0
    );
}

/// SVG with the domain partition on the left and the codomain partition on the
/// right; cell i carries label i in both panels.
pub fn render_partition_svg(g: &Element) -> Result<String> {
    if g.arity() != 2 {
        return Err(Error::BadDimension { d: g.arity(), n: 2 });
    }
    let width = 3.0 * MARGIN + 2.0 * PANEL;
    let height = 2.0 * MARGIN + PANEL + 16.0;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let right = 2.0 * MARGIN + PANEL;
    for (ox, title) in [(MARGIN, "domain"), (right, "codomain")] {
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{title}</text>"#,
            ox + PANEL / 2.0,
            MARGIN + PANEL + 14.0
        );
    }
    for (i, c) in g.cells().iter().enumerate() {
        rect(&mut out, MARGIN, &c.dom, i);
        rect(&mut out, right, &c.cod, i);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// One indented line per cell, for any arity.
pub fn render_cell_listing(g: &Element) -> String {
    let mut out = format!("element n={} cells={}\n", g.arity(), g.len());
    for (i, c) in g.cells().iter().enumerate() {
        let _ = writeln!(out, "  {i}: {} -> {}", c.dom, c.cod);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::baker_direct;

    #[test]
    fn baker_panels() {
        let g = baker_direct(2, &"(-,-)".parse().unwrap()).unwrap();
        let svg = render_partition_svg(&g).unwrap();
        assert_eq!(svg.matches("<rect").count(), 4);
        // Domain halves are vertical strips of full height.
        assert!(svg.contains(r#"width="120.000" height="240.000""#));
        // Codomain halves are horizontal strips of full width.
        assert!(svg.contains(r#"width="240.000" height="120.000""#));
    }

    #[test]
    fn listing_for_higher_arity() {
        let g = Element::identity(3);
        assert!(render_partition_svg(&g).is_err());
        assert!(render_cell_listing(&g).contains("(-,-,-) -> (-,-,-)"));
    }
}
