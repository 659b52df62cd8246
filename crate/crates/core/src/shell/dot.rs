use std::collections::BTreeMap;
use std::fmt::Write;

use crate::machines::MealyMachine;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders a machine as a DOT digraph. Nodes are sorted by name; all
/// transitions between the same two states share one edge whose `in|out`
/// labels are sorted and separated by `, `.
pub fn export_dot(m: &MealyMachine, name: &str) -> String {
    let st = m.states();
    let al = m.letters();
    let mut edges: BTreeMap<(&str, &str), Vec<String>> = BTreeMap::new();
    for t in m.transitions() {
        edges
            .entry((st.name(t.from), st.name(t.to)))
            .or_default()
            .push(format!("{}|{}", al.name(t.input), al.name(t.output)));
    }
    let mut nodes: Vec<&str> = st.names().iter().map(String::as_str).collect();
    nodes.sort_unstable();

    let mut s = format!("digraph {} {{\n  rankdir=LR;\n", quote(name));
    for n in nodes {
        let _ = writeln!(s, "  {};", quote(n));
    }
    for ((from, to), mut labels) in edges {
        labels.sort();
        let _ = writeln!(
            s,
            "  {} -> {} [label={}];",
            quote(from),
            quote(to),
            quote(&labels.join(", "))
        );
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{machines, tables};
    use crate::word::Alphabet;

    fn count(dot: &str, pat: &str) -> usize {
        dot.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn div3_graph() {
        let dot = export_dot(&machines::div3(), "div3");
        assert_eq!(count(&dot, "->"), 6);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->"))
                .count(),
            4
        );
        assert!(dot.contains("  \"0\" -> \"1\" [label=\"1|0\"];\n"));
        assert!(dot.starts_with("digraph \"div3\" {\n"));
    }

    #[test]
    fn identity_machine_merges_labels() {
        let m = MealyMachine::identity(
            Alphabet::new(["q"]).unwrap(),
            Alphabet::new(["y", "x"]).unwrap(),
        );
        let dot = export_dot(&m, "id");
        assert_eq!(count(&dot, "->"), 1);
        assert!(dot.contains("\"q\" -> \"q\" [label=\"x|x, y|y\"];"));
    }

    #[test]
    fn bicyclic_graph_lists_all_transitions() {
        let m = tables::bicyclic().build_mealy().unwrap();
        let dot = export_dot(&m, "bicyclic");
        let labels: usize = dot
            .lines()
            .filter(|l| l.contains("->"))
            .map(|l| l.matches('|').count())
            .sum();
        assert_eq!(labels, 9);
        assert_eq!(export_dot(&m, "bicyclic"), dot);
    }
}
