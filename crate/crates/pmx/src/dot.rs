//! DOT export.  Edge colors follow the figure convention: red, green, blue
//! for colors 0, 1, 2, then a fixed palette.  Semiedges are drawn as
//! self-loops; non-identity voltages become edge labels on the dart at the
//! lower-numbered endpoint.  Output ordering is deterministic.

use crate::pmxfile::PmxObject;
use crate::premaniplex::Premaniplex;
use std::fmt::Write;

const PALETTE: &[&str] = &[
    "red", "green", "blue", "orange", "purple", "brown", "cyan", "magenta",
];

pub fn color_name(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

fn perm_label(p: &[usize]) -> String {
    let images: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    format!("({})", images.join(" "))
}

/// Renders any PMX object as an undirected DOT graph.
pub fn export_dot(object: &PmxObject) -> String {
    let graph = object.graph();
    let label_of = |i: usize, v: usize| -> Option<String> {
        match object {
            PmxObject::Premaniplex(_) => None,
            PmxObject::Operator(op) => {
                let w = op.voltage(i, v);
                if w.is_identity() {
                    None
                } else {
                    Some(w.to_string())
                }
            }
            PmxObject::VoltagePremaniplex(vp) => {
                let p = vp.voltage(i, v);
                if crate::perm::is_identity(p) {
                    None
                } else {
                    Some(perm_label(p))
                }
            }
        }
    };
    let mut out = String::from("graph pmx {\n  node [shape=circle];\n");
    for v in 0..graph.vertex_count() {
        match graph.labels() {
            Some(labels) => writeln!(out, "  v{} [label=\"{}\"];", v, labels[v]).unwrap(),
            None => writeln!(out, "  v{};", v).unwrap(),
        }
    }
    for i in 0..graph.rank() {
        for v in 0..graph.vertex_count() {
            let u = graph.neighbor(i, v);
            if u < v {
                continue;
            }
            let mut attrs = vec![format!("color={}", color_name(i))];
            if let Some(label) = label_of(i, v) {
                attrs.push(format!("label=\"{}\"", label));
            }
            writeln!(out, "  v{} -- v{} [{}];", v, u, attrs.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Convenience wrapper for bare premaniplexes.
pub fn premaniplex_dot(x: &Premaniplex) -> String {
    export_dot(&PmxObject::Premaniplex(x.clone()))
}
