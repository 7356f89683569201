//! Graphviz output for tope graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::signs::Tope;
use crate::tope_set::TopeSet;

/// Undirected DOT graph of the tope graph; `highlight` members are drawn red.
pub fn tope_graph_dot(set: &TopeSet, highlight: &BTreeSet<Tope>) -> String {
    let graph = set.adjacency_edges();
    let mut out = String::from("graph tope_graph {\n");
    out.push_str("  node [shape=plaintext, fontname=\"monospace\"];\n");
    for tope in &graph.vertices {
        if highlight.contains(tope) {
            let _ = writeln!(out, "  \"{tope}\" [fontcolor=red];");
        } else {
            let _ = writeln!(out, "  \"{tope}\";");
        }
    }
    for (a, b) in graph.edge_topes() {
        let e = (1..=a.len()).find(|&e| a.sign(e) != b.sign(e)).unwrap_or(0);
        let color = if highlight.contains(a) && highlight.contains(b) {
            ", color=red"
        } else {
            ""
        };
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\" [label=\"{e}\"{color}];");
    }
    out.push_str("}\n");
    out
}
