//! Deterministic JSON, DOT and plain-text renderings.
//!
//! JSON documents have sorted object keys (serde_json's default map), every
//! rational is a string such as `"1/2"`, words and crossed nodes are
//! 1-based, and arrays follow the order of the underlying structures.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::bgg::BggDiagram;
use crate::descent::{CohomologyProfile, CohomologyResult};
use crate::kostant::HomologyTable;
use crate::lattice::{Root, RootSystem, Weight};
use crate::parabolic::HasseDiagram;
use crate::repinfo::MultiplicityTable;

pub fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn root_json(r: &Root) -> Value {
    json!(r.coeffs())
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialise");
    s.push('\n');
    s
}

pub fn roots_json(rs: &RootSystem) -> Value {
    json!({
        "algebra": rs.lie_type().to_string(),
        "rank": rs.rank(),
        "cartan": rs.cartan(),
        "symmetrizer": rs.symmetrizer(),
        "positive_roots": rs.positive_roots().iter().map(root_json).collect::<Vec<_>>(),
        "rho": weight_json(rs.rho()),
    })
}

pub fn hasse_json(algebra: &str, crossed: &[usize], h: &HasseDiagram) -> Value {
    json!({
        "algebra": algebra,
        "crossed": crossed,
        "length_counts": h.length_counts(),
        "elements": h.elements().iter().map(|w| json!({"word": w.word(), "length": w.length()})).collect::<Vec<_>>(),
        "edges": h.edges().iter().map(|e| json!({"from": e.from, "to": e.to, "root": root_json(&e.root)})).collect::<Vec<_>>(),
    })
}

pub fn homology_json(algebra: &str, crossed: &[usize], weight: &Weight, t: &HomologyTable) -> Value {
    let degrees: Vec<Value> = t
        .degrees()
        .iter()
        .map(|entries| {
            Value::Array(
                entries
                    .iter()
                    .map(|e| json!({"weight": weight_json(&e.weight), "word": e.word, "dim": e.dim}))
                    .collect(),
            )
        })
        .collect();
    json!({
        "algebra": algebra,
        "crossed": crossed,
        "weight": weight_json(weight),
        "degrees": degrees,
    })
}

pub fn bgg_json(d: &BggDiagram) -> Value {
    let mut doc = json!({
        "algebra": d.algebra.to_string(),
        "crossed": d.crossed,
        "weight": weight_json(&d.highest_weight),
        "relative": d.relative,
        "contact": d.contact,
        "nodes": d.nodes.iter().map(|n| json!({
            "degree": n.degree,
            "weight": weight_json(&n.weight),
            "dim": n.dim,
            "word": n.word,
        })).collect::<Vec<_>>(),
        "edges": d.edges.iter().map(|e| json!({
            "from": e.from,
            "to": e.to,
            "root": root_json(&e.root),
            "order": e.order,
        })).collect::<Vec<_>>(),
        "integrable": d.integrability.map(|c| c.integrable),
        "residue": d.integrability.map(|c| c.residue),
        "group": d.integrability.map(|c| c.group.to_string()),
    });
    if let Some(inner) = &d.crossed_inner {
        doc["crossed_inner"] = json!(inner);
    }
    doc
}

pub fn multiplicity_json(algebra: &str, weight: &Weight, t: &MultiplicityTable) -> Value {
    json!({
        "algebra": algebra,
        "weight": weight_json(weight),
        "dim": t.total(),
        "multiplicities": t.iter().map(|(w, m)| json!({"weight": weight_json(w), "mult": m})).collect::<Vec<_>>(),
    })
}

pub fn descend_json(profile: &CohomologyProfile, r: &CohomologyResult) -> Value {
    json!({
        "dim_M": profile.dim_m,
        "betti": profile.betti,
        "lefschetz_ranks": profile.lefschetz_ranks,
        "w1": profile.w1,
        "dims": r.dims,
    })
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn roots_text(rs: &RootSystem) -> String {
    let mut s = String::new();
    writeln!(s, "algebra: {}", rs.lie_type()).unwrap();
    writeln!(s, "cartan:").unwrap();
    for row in rs.cartan() {
        writeln!(s, "  {}", join(row)).unwrap();
    }
    writeln!(s, "symmetrizer: {}", join(rs.symmetrizer())).unwrap();
    writeln!(s, "positive roots ({}):", rs.positive_roots().len()).unwrap();
    for r in rs.positive_roots() {
        writeln!(s, "  {r}  height {}", r.height()).unwrap();
    }
    writeln!(s, "rho: {}", rs.rho()).unwrap();
    s
}

pub fn hasse_text(algebra: &str, crossed: &[usize], h: &HasseDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "algebra: {algebra}").unwrap();
    writeln!(s, "crossed: {}", join(crossed)).unwrap();
    writeln!(s, "elements: {}", h.len()).unwrap();
    writeln!(s, "lengths: {}", join(&h.length_counts())).unwrap();
    for (i, w) in h.elements().iter().enumerate() {
        writeln!(s, "  [{i}] length {} : {}", w.length(), word_text(w.word())).unwrap();
    }
    writeln!(s, "edges: {}", h.edges().len()).unwrap();
    for e in h.edges() {
        writeln!(s, "  {} -> {} via {}", e.from, e.to, e.root).unwrap();
    }
    s
}

pub fn homology_text(algebra: &str, crossed: &[usize], weight: &Weight, t: &HomologyTable) -> String {
    let mut s = String::new();
    writeln!(s, "algebra: {algebra}").unwrap();
    writeln!(s, "crossed: {}", join(crossed)).unwrap();
    writeln!(s, "weight: {weight}").unwrap();
    for (k, entries) in t.degrees().iter().enumerate() {
        writeln!(s, "degree {k}:").unwrap();
        for e in entries {
            writeln!(s, "  {}  dim {}  [{}]", e.weight, e.dim, word_text(&e.word)).unwrap();
        }
    }
    s
}

pub fn bgg_text(d: &BggDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "algebra: {}", d.algebra).unwrap();
    if let Some(inner) = &d.crossed_inner {
        writeln!(s, "crossed (p): {}", join(inner)).unwrap();
        writeln!(s, "crossed (q): {}", join(&d.crossed)).unwrap();
    } else {
        writeln!(s, "crossed: {}", join(&d.crossed)).unwrap();
    }
    writeln!(s, "weight: {}", d.highest_weight).unwrap();
    writeln!(s, "relative: {}", d.relative).unwrap();
    match d.integrability {
        Some(c) => writeln!(s, "integrable: {} ({} residue {})", c.integrable, c.group, c.residue).unwrap(),
        None => writeln!(s, "integrable: unchecked").unwrap(),
    }
    writeln!(s, "nodes: {}", d.nodes.len()).unwrap();
    for (i, n) in d.nodes.iter().enumerate() {
        writeln!(s, "  [{i}] degree {}  {}  dim {}  [{}]", n.degree, n.weight, n.dim, word_text(&n.word)).unwrap();
    }
    writeln!(s, "edges: {}", d.edges.len()).unwrap();
    for e in &d.edges {
        writeln!(s, "  {} -> {}  weighted order {}", e.from, e.to, e.order).unwrap();
    }
    s
}

pub fn multiplicity_text(algebra: &str, weight: &Weight, t: &MultiplicityTable) -> String {
    let mut s = String::new();
    writeln!(s, "algebra: {algebra}").unwrap();
    writeln!(s, "weight: {weight}").unwrap();
    writeln!(s, "dim: {}", t.total()).unwrap();
    for (w, m) in t.iter() {
        writeln!(s, "  {w}  mult {m}").unwrap();
    }
    s
}

pub fn descend_text(r: &CohomologyResult) -> String {
    let mut s = String::new();
    for (k, d) in r.dims.iter().enumerate() {
        writeln!(s, "degree {k}: {d}").unwrap();
    }
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_ranks(s: &mut String, degrees: impl Iterator<Item = usize>) {
    let degrees: Vec<usize> = degrees.collect();
    let top = degrees.iter().copied().max().unwrap_or(0);
    for k in 0..=top {
        let ids: Vec<String> = degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == k)
            .map(|(i, _)| format!("n{i};"))
            .collect();
        if !ids.is_empty() {
            writeln!(s, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
        }
    }
}

pub fn hasse_dot(algebra: &str, h: &HasseDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"hasse {}\" {{", dot_escape(algebra)).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for (i, w) in h.elements().iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{}\\n{}\"];", w.length(), word_text(w.word())).unwrap();
    }
    dot_ranks(&mut s, h.elements().iter().map(|w| w.length()));
    for e in h.edges() {
        writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.root).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn bgg_dot(d: &BggDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"bgg {}\" {{", d.algebra).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for (i, n) in d.nodes.iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{}\\n{}\\ndim {}\"];", n.degree, n.weight, n.dim).unwrap();
    }
    dot_ranks(&mut s, d.nodes.iter().map(|n| n.degree));
    for e in &d.edges {
        writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.order).unwrap();
    }
    s.push_str("}\n");
    s
}
