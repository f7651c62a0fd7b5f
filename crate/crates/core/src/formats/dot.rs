use std::fmt::Write;

use crate::graph::Graph;

/// Undirected DOT rendering; vertices are named by id and labeled by label.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", escape(&g.label(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
