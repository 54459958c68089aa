//! Deterministic DOT export for labeled graphs and graphs of graphs.
//! Identical inputs produce byte-identical output.

use crate::gog::GraphOfGraphs;
use crate::graph::LabeledGraph;

fn label_char(l: u32) -> char {
    (b'a' + (l % 26) as u8) as char
}

pub fn labeled_graph_dot(g: &LabeledGraph) -> String {
    let mut s = String::from("digraph stallings {\n");
    for v in 0..g.num_vertices() {
        let shape = if g.basepoint() == Some(v) {
            " [shape=doublecircle]"
        } else {
            ""
        };
        s.push_str(&format!("  v{v}{shape};\n"));
    }
    for e in g.edges() {
        s.push_str(&format!(
            "  v{} -> v{} [label=\"{}\"];\n",
            e.src,
            e.dst,
            label_char(e.label)
        ));
    }
    s.push_str("}\n");
    s
}

/// Vertex spaces as clusters; each edge-space strip becomes inter-cluster
/// edges (one per edge-space vertex) plus a strip label comment.
pub fn gog_dot(x: &GraphOfGraphs) -> String {
    let mut s = String::from("digraph gog {\n  compound=true;\n");
    for (i, space) in x.vertex_spaces.iter().enumerate() {
        s.push_str(&format!("  subgraph cluster_v{i} {{\n    label=\"V{i}\";\n"));
        for w in 0..space.num_vertices() {
            let side = match space.sides[w] {
                Some(t) => format!(" [color={}]", if t == 0 { "blue" } else { "red" }),
                None => String::new(),
            };
            s.push_str(&format!("    v{i}_{w}{side};\n"));
        }
        for (e, &(a, b)) in space.edges.iter().enumerate() {
            s.push_str(&format!(
                "    v{i}_{a} -> v{i}_{b} [arrowhead=none,label=\"e{e}\"];\n"
            ));
        }
        s.push_str("  }\n");
    }
    for (j, e) in x.edges.iter().enumerate() {
        for w in 0..e.space.num_vertices() {
            s.push_str(&format!(
                "  v{}_{} -> v{}_{} [style=dashed,label=\"E{}\"];\n",
                e.ends[0], e.attach[0].vmap[w], e.ends[1], e.attach[1].vmap[w], j
            ));
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn single_loop() {
        let g = LabeledGraph::from_words(&[Word::parse("a").unwrap()], 1).unwrap();
        let dot = labeled_graph_dot(&g);
        assert!(dot.contains("v0 -> v0 [label=\"a\"]"));
    }

    #[test]
    fn deterministic() {
        let g = LabeledGraph::from_words(
            &[Word::parse("ab").unwrap(), Word::parse("ba").unwrap()],
            2,
        )
        .unwrap();
        assert_eq!(labeled_graph_dot(&g), labeled_graph_dot(&g.clone()));
    }

    #[test]
    fn cluster_per_underlying_vertex() {
        let built = crate::gog::build_representing(
            &[
                vec![Word::parse("a").unwrap(), Word::parse("b").unwrap()],
                vec![Word::parse("b").unwrap(), Word::parse("c").unwrap()],
            ],
            &[(0, 1, vec![Word::parse("b").unwrap()])],
            3,
        )
        .unwrap();
        let dot = gog_dot(&built.gog);
        assert_eq!(
            dot.matches("subgraph cluster_").count(),
            built.gog.num_underlying_vertices()
        );
    }
}
