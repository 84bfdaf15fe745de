//! Graphviz DOT export.

use std::fmt::Write;

use crate::graph::Graph;

/// Undirected DOT text with one node line per vertex (in index order) and one
/// edge line per edge (in lexicographic order). `labels`, when given, must
/// have one entry per vertex.
pub fn dot_export(g: &Graph, labels: Option<&[String]>) -> String {
    if let Some(labels) = labels {
        assert_eq!(labels.len(), g.order(), "one label per vertex");
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels {
            Some(labels) => writeln!(out, "  {v} [label={}];", quote(&labels[v])),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}
