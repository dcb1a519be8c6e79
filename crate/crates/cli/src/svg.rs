//! Deterministic SVG output.

use std::fmt::Write;

use zirkel::polygon::circumcircle;
use zirkel::{Point, Scalar, VertexList};

const SVG_DIGITS: usize = 12;

fn num(v: &Scalar) -> String {
    v.to_sig_string(SVG_DIGITS)
}

/// `x y` in SVG coordinates, where y grows downwards.
fn coords(p: &Point) -> String {
    format!("{} {}", num(&p.x), num(&-&p.y))
}

/// Renders the polygon, optionally with its circumcircle (the unit circle when
/// the vertices are not concyclic) and labelled construction points.
pub fn render_svg(v: &VertexList, show_circle: bool, construction: Option<&[(String, Point)]>) -> String {
    let mut out = String::new();
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n");
    if show_circle {
        let (c, r) = circumcircle(&v.vertices).unwrap_or_else(|| (Point::origin(), Scalar::one()));
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.005\"/>",
            num(&c.x),
            num(&-&c.y),
            num(&r)
        );
    }
    let mut d = String::new();
    for (i, p) in v.vertices.iter().enumerate() {
        d.push_str(if i == 0 { "M " } else { " L " });
        d.push_str(&coords(p));
    }
    d.push_str(" Z");
    let _ = writeln!(out, "  <path d=\"{d}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.01\"/>");
    if let Some(points) = construction {
        out.push_str("  <g fill=\"#b03020\" font-family=\"sans-serif\" font-size=\"0.06\">\n");
        for (name, p) in points {
            let (x, y) = (num(&p.x), num(&-&p.y));
            let _ = writeln!(out, "    <circle cx=\"{x}\" cy=\"{y}\" r=\"0.015\"/>");
            let _ = writeln!(out, "    <text x=\"{x}\" y=\"{y}\" dx=\"0.02\" dy=\"-0.02\">{name}</text>");
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}
