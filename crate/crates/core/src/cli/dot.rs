use std::fmt::Write;

use crate::threaded::LineageTable;

/// Genealogy graph in DOT: one node per key, an edge from each parent
/// lineage to every pair key. Removed entries are labelled `null`.
pub fn emit_dot(table: &LineageTable) -> String {
    let mut out = String::from("digraph lineage {\n");
    for (key, value) in table.iter() {
        match value {
            Some(_) => writeln!(out, "  \"{key}\";").unwrap(),
            None => writeln!(out, "  \"{key}\" [label=\"{key}\\nnull\", style=dashed];").unwrap(),
        }
    }
    for key in table.pair_keys() {
        let (left, right) = key.parents().expect("pair key");
        writeln!(out, "  \"{left}\" -> \"{key}\";").unwrap();
        writeln!(out, "  \"{right}\" -> \"{key}\";").unwrap();
    }
    out.push_str("}\n");
    out
}
