use serde_json::json;

use demazure_core::tableaux::CrystalGraph;
use demazure_core::Ssyt;

/// Rows bottom-up, entries joined by commas and rows by `/`.
pub fn row_label(t: &Ssyt) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    rows.join("/")
}

pub fn dot(g: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    for (k, t) in g.vertices.iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{}\"];\n", row_label(t)));
    }
    for &(a, b, i) in &g.edges {
        out.push_str(&format!("  n{a} -> n{b} [label=\"f{i}\"];\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(g: &CrystalGraph, n: usize) -> String {
    let nodes: Vec<_> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(k, t)| json!({"id": k, "rows": t.rows(), "weight": t.content(n).parts()}))
        .collect();
    let edges: Vec<_> = g.edges.iter().map(|&(a, b, i)| json!({"from": a, "to": b, "label": i})).collect();
    format!("{}\n", json!({"nodes": nodes, "edges": edges}))
}
