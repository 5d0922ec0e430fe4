//! Graphviz rendering of attack graphs.
//!
//! Nodes are labelled `{f1,f2}:outcome` (`?` for the new case), the new case
//! is drawn as a hexagon and grounded members are filled gray. Output depends
//! only on the graph, so identical inputs give byte-identical files.

use std::fmt::Write;

use crate::af::{grounded_extension, ArgGraph, Argument};
use crate::casebase::Labels;

pub fn to_dot(g: &ArgGraph, labels: &Labels) -> String {
    let grounded = grounded_extension(g);
    let mut out = String::new();
    out.push_str("digraph af {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=ellipse];\n");
    for (i, arg) in g.arguments().iter().enumerate() {
        let outcome = match arg.outcome() {
            Some(o) => labels.label(o),
            None => "?",
        };
        let label = format!("{}:{}", arg.characterisation(), outcome);
        let mut attrs = format!("label=\"{}\"", escape(&label));
        if matches!(arg, Argument::New(_)) {
            attrs.push_str(", shape=hexagon");
        }
        if grounded.contains(i) {
            attrs.push_str(", style=filled, fillcolor=gray");
        }
        writeln!(out, "  n{i} [{attrs}];").expect("write to string");
    }
    for &(a, b) in g.attacks() {
        writeln!(out, "  n{a} -> n{b};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
