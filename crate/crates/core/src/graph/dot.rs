use std::fmt::Write;

use super::GcdGraph;

/// Undirected DOT text: loops first, then simple edges in lexicographic order.
pub fn export_dot(g: &GcdGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph G{} {{", g.n()).unwrap();
    for &a in g.loops() {
        writeln!(out, "{a} -- {a};").unwrap();
    }
    for (a, b) in g.simple_edges() {
        writeln!(out, "{a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
