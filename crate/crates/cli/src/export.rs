//! Plain-text graph emitters: Graphviz DOT and whitespace-separated edge lists.

use std::fmt::Write;

use circomp::{CirculantDigraph, CirculantGraph};

pub fn digraph_dot(g: &CirculantDigraph) -> String {
    dot(
        "digraph",
        "->",
        g.order(),
        &g.arcs(),
        &g.connection_set().to_string(),
    )
}

pub fn graph_dot(g: &CirculantGraph) -> String {
    dot(
        "graph",
        "--",
        g.order(),
        &g.edges(),
        &g.connection_set().to_string(),
    )
}

fn dot(kind: &str, op: &str, order: usize, pairs: &[(usize, usize)], label: &str) -> String {
    let mut out = String::new();
    writeln!(out, "{kind} {{").unwrap();
    writeln!(out, "  label=\"{label}\";").unwrap();
    for v in 0..order {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, j) in pairs {
        writeln!(out, "  {i} {op} {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn edge_list(pairs: &[(usize, usize)]) -> String {
    let mut out = String::new();
    for (i, j) in pairs {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}
