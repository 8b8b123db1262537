//! Graphviz output for exchangeability graphs.

use std::fmt::Write;

use crate::exchange::{ArcLabel, ExchangeGraph};

/// DOT text for `g`. Elements of `I` are boxes, sources green, sinks red;
/// sure arcs are solid and suspicious arcs dashed.
pub fn to_dot(g: &ExchangeGraph, names: &[String]) -> String {
    let mut out = String::from("digraph exchange {\n  rankdir=LR;\n");
    let name = |e: usize| names.get(e).cloned().unwrap_or_else(|| e.to_string());
    for e in 0..g.ground_size() {
        let mut attrs = vec![format!("label=\"{}\"", escape(&name(e)))];
        attrs.push(if g.independent().contains(e) {
            "shape=box".to_string()
        } else {
            "shape=ellipse".to_string()
        });
        let fill = match (g.sources().contains(e), g.sinks().contains(e)) {
            (true, true) => Some("gold"),
            (true, false) => Some("palegreen"),
            (false, true) => Some("lightpink"),
            (false, false) => None,
        };
        if let Some(color) = fill {
            attrs.push(format!("style=filled, fillcolor={color}"));
        }
        writeln!(out, "  n{e} [{}];", attrs.join(", ")).unwrap();
    }
    for (u, v) in g.arcs() {
        let style = match g.label(u, v) {
            Some(ArcLabel::Suspicious) => "dashed",
            _ => "solid",
        };
        writeln!(out, "  n{u} -> n{v} [style={style}];").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
