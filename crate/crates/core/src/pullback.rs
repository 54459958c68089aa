//! Fiber products of immersions over the rose: intersections of subgroups.

use crate::error::GogError;
use crate::graph::LabeledGraph;
use crate::morphism::GraphMorphism;

/// The full fiber product of two folded graphs over the rose, together with
/// the two projections and the original vertex pair per product vertex.
pub struct Pullback {
    pub graph: LabeledGraph,
    pub p1: GraphMorphism,
    pub p2: GraphMorphism,
    /// product vertex id -> (vertex of g1, vertex of g2)
    pub pairs: Vec<(usize, usize)>,
}

/// Vertices are pairs, with one x-labeled edge per pair of x-labeled edges.
/// The basepoint, when both factors are based, is the pair of basepoints.
pub fn pullback_product(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<Pullback, GogError> {
    if g1.rank() != g2.rank() {
        return Err(GogError::RankMismatch(g1.rank(), g2.rank()));
    }
    if !g1.is_folded() || !g2.is_folded() {
        return Err(GogError::NotFolded);
    }
    let n2 = g2.num_vertices();
    let mut g = LabeledGraph::new(g1.rank());
    let mut pairs = Vec::with_capacity(g1.num_vertices() * n2);
    for v1 in 0..g1.num_vertices() {
        for v2 in 0..n2 {
            g.add_vertex();
            pairs.push((v1, v2));
        }
    }
    let pid = |v1: usize, v2: usize| v1 * n2 + v2;
    let mut em1 = Vec::new();
    let mut em2 = Vec::new();
    for (i1, e1) in g1.edges().iter().enumerate() {
        for (i2, e2) in g2.edges().iter().enumerate() {
            if e1.label == e2.label {
                g.add_edge(pid(e1.src, e2.src), pid(e1.dst, e2.dst), e1.label);
                em1.push(i1);
                em2.push(i2);
            }
        }
    }
    if let (Some(b1), Some(b2)) = (g1.basepoint(), g2.basepoint()) {
        g.set_basepoint(Some(pid(b1, b2)));
    }
    let p1 = GraphMorphism {
        vertex_map: pairs.iter().map(|&(v1, _)| v1).collect(),
        edge_map: em1,
    };
    let p2 = GraphMorphism {
        vertex_map: pairs.iter().map(|&(_, v2)| v2).collect(),
        edge_map: em2,
    };
    debug_assert!(g.is_folded());
    debug_assert!(p1.is_immersion(&g, g1));
    debug_assert!(p2.is_immersion(&g, g2));
    Ok(Pullback { graph: g, p1, p2, pairs })
}

/// Core of the based pullback component: the Stallings graph of H₁ ∩ H₂.
pub fn intersection_subgroup(
    h1: &LabeledGraph,
    h2: &LabeledGraph,
) -> Result<LabeledGraph, GogError> {
    let pb = pullback_product(h1, h2)?;
    let base = pb.graph.basepoint().ok_or(GogError::NoBasepoint)?;
    for (comp, orig) in pb.graph.components() {
        if orig.contains(&base) {
            let (cored, _) = comp.core(comp.basepoint());
            return Ok(cored);
        }
    }
    unreachable!("basepoint component always exists")
}

/// Cores of all pullback components with nontrivial fundamental group. Each
/// comes with its anchor: the lexicographically least surviving vertex pair.
pub fn all_core_components(pb: &Pullback) -> Vec<(LabeledGraph, (usize, usize))> {
    let mut out = Vec::new();
    for (comp, orig) in pb.graph.components() {
        let (cored, vmap) = comp.core(None);
        if cored.num_edges() == 0 {
            continue; // tree component
        }
        let mut anchor = None;
        for (local, &o) in orig.iter().enumerate() {
            if vmap[local].is_some() {
                let pair = pb.pairs[o];
                if anchor.map_or(true, |a| pair < a) {
                    anchor = Some(pair);
                }
            }
        }
        out.push((cored, anchor.unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn subgroup(words: &[&str], rank: u32) -> LabeledGraph {
        let ws: Vec<Word> = words.iter().map(|s| Word::parse(s).unwrap()).collect();
        LabeledGraph::from_words(&ws, rank).unwrap()
    }

    #[test]
    fn pullback_with_rose_recovers_factor() {
        let h = subgroup(&["ab", "ba"], 2);
        let r = LabeledGraph::rose(2);
        let pb = pullback_product(&r, &h).unwrap();
        // single component isomorphic to h
        let comps = pb.graph.components();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].0.is_isomorphic(&h));
    }

    #[test]
    fn disjoint_generators_intersect_trivially() {
        let a = subgroup(&["a"], 2);
        let b = subgroup(&["b"], 2);
        let i = intersection_subgroup(&a, &b).unwrap();
        assert_eq!(i.num_edges(), 0);
        assert_eq!(i.num_vertices(), 1);
    }

    #[test]
    fn intersection_idempotent() {
        let h = subgroup(&["aa", "b"], 2);
        let i = intersection_subgroup(&h, &h).unwrap();
        assert!(i.is_isomorphic(&h));
    }

    #[test]
    fn conjugate_pair_intersects_in_a() {
        // H1 = <a, bab⁻¹>, H2 = <a, b⁻¹ab>: based component is one a-loop
        let h1 = subgroup(&["a", "baB"], 2);
        let h2 = subgroup(&["a", "Bab"], 2);
        let i = intersection_subgroup(&h1, &h2).unwrap();
        assert!(i.is_isomorphic(&subgroup(&["a"], 2)));
        assert!(i.contains(&Word::parse("a").unwrap()));
    }

    #[test]
    fn tree_only_pullback_has_no_core_components() {
        let a = subgroup(&["a"], 2);
        let b = subgroup(&["b"], 2);
        let pb = pullback_product(&a, &b).unwrap();
        assert!(all_core_components(&pb).is_empty());
    }

    #[test]
    fn full_pullback_of_rose_with_itself() {
        let r = LabeledGraph::rose(2);
        let pb = pullback_product(&r, &r).unwrap();
        let comps = all_core_components(&pb);
        assert_eq!(comps.len(), 1);
        assert!(comps[0].0.is_isomorphic(&r));
        assert_eq!(comps[0].1, (0, 0));
    }
}
