//! DOT emission of the Hasse diagram of the refinement order.

use std::fmt::Write;

use ordtop_core::lattice::{enumerate_topologies, is_refinement};
use ordtop_core::separation::classify;

use crate::CliError;

/// Hasse diagram of all topologies on `n <= 3` points under refinement,
/// bottom (trivial) to top (discrete). Nodes carry the open count and the
/// strongest separation axiom; edges are cover relations.
pub fn hasse_dot(n: u8) -> Result<String, CliError> {
    if n == 0 || n > 3 {
        return Err(CliError::Runtime(format!(
            "dot output draws the Hasse diagram for 1..=3 points, got {n}"
        )));
    }
    let all = enumerate_topologies(n).map_err(|e| CliError::Runtime(e.to_string()))?;
    let count = all.len();
    let mut finer = vec![vec![false; count]; count];
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            finer[i][j] = i != j && is_refinement(a, b).expect("same ground set");
        }
    }

    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, t) in all.iter().enumerate() {
        let profile = classify(t);
        let _ = writeln!(
            out,
            "  t{i} [label=\"{} opens\\n{}\"];",
            t.opens().len(),
            profile.strongest
        );
    }
    for i in 0..count {
        for j in 0..count {
            if !finer[i][j] {
                continue;
            }
            let covered = (0..count).any(|k| finer[i][k] && finer[k][j]);
            if !covered {
                let _ = writeln!(out, "  t{i} -> t{j};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_diagram_has_four_nodes_and_four_edges() {
        let dot = hasse_dot(2).unwrap();
        assert!(dot.starts_with("digraph hasse {"));
        assert_eq!(dot.matches("label=").count(), 4);
        // trivial -> each Sierpinski -> discrete.
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(hasse_dot(0).is_err());
        assert!(hasse_dot(4).is_err());
    }
}
