//! Label- and orientation-preserving maps between labeled graphs.

use crate::error::GogError;
use crate::graph::LabeledGraph;
use crate::word::Letter;

/// A graph map given by its vertex and edge tables. The domain and codomain
/// are passed explicitly to the predicates; a morphism value is just data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphMorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl GraphMorphism {
    pub fn identity(g: &LabeledGraph) -> Self {
        GraphMorphism {
            vertex_map: (0..g.num_vertices()).collect(),
            edge_map: (0..g.num_edges()).collect(),
        }
    }

    /// Checks incidence, label and orientation preservation.
    pub fn is_valid(&self, domain: &LabeledGraph, codomain: &LabeledGraph) -> bool {
        if self.vertex_map.len() != domain.num_vertices()
            || self.edge_map.len() != domain.num_edges()
        {
            return false;
        }
        if self.vertex_map.iter().any(|&v| v >= codomain.num_vertices())
            || self.edge_map.iter().any(|&e| e >= codomain.num_edges())
        {
            return false;
        }
        domain.edges().iter().enumerate().all(|(i, e)| {
            let f = codomain.edges()[self.edge_map[i]];
            f.label == e.label
                && f.src == self.vertex_map[e.src]
                && f.dst == self.vertex_map[e.dst]
        })
    }

    /// Locally injective: distinct edge-ends at any vertex have distinct
    /// images.
    pub fn is_immersion(&self, domain: &LabeledGraph, codomain: &LabeledGraph) -> bool {
        if !self.is_valid(domain, codomain) {
            return false;
        }
        // incidences (edge, is_source_end) grouped by vertex
        let mut seen = std::collections::HashSet::new();
        for (i, e) in domain.edges().iter().enumerate() {
            if !seen.insert((e.src, self.edge_map[i], true))
                || !seen.insert((e.dst, self.edge_map[i], false))
            {
                return false;
            }
        }
        true
    }

    /// Globally injective on vertices and edges.
    pub fn is_embedding(&self, domain: &LabeledGraph, codomain: &LabeledGraph) -> bool {
        if !self.is_valid(domain, codomain) {
            return false;
        }
        let mut vs = std::collections::HashSet::new();
        let mut es = std::collections::HashSet::new();
        self.vertex_map.iter().all(|&v| vs.insert(v)) && self.edge_map.iter().all(|&e| es.insert(e))
    }

    pub fn compose(&self, then: &GraphMorphism) -> GraphMorphism {
        GraphMorphism {
            vertex_map: self.vertex_map.iter().map(|&v| then.vertex_map[v]).collect(),
            edge_map: self.edge_map.iter().map(|&e| then.edge_map[e]).collect(),
        }
    }

    /// Does the map fix corresponding basepoints?
    pub fn is_based(&self, domain: &LabeledGraph, codomain: &LabeledGraph) -> bool {
        match (domain.basepoint(), codomain.basepoint()) {
            (Some(a), Some(b)) => self.vertex_map[a] == b,
            _ => false,
        }
    }
}

/// Lifts the immersion of `m` over the rose through the immersion of `h`:
/// the based morphism f: m → h with labels preserved, which exists iff
/// ⟨m⟩ ≤ ⟨h⟩ as based subgroups. Both graphs must be folded and based.
pub fn lift(m: &LabeledGraph, h: &LabeledGraph) -> Result<GraphMorphism, GogError> {
    if m.rank() != h.rank() {
        return Err(GogError::RankMismatch(m.rank(), h.rank()));
    }
    if !m.is_folded() || !h.is_folded() {
        return Err(GogError::NotFolded);
    }
    let mb = m.basepoint().ok_or(GogError::NoBasepoint)?;
    let hb = h.basepoint().ok_or(GogError::NoBasepoint)?;
    let mut vmap = vec![usize::MAX; m.num_vertices()];
    let mut emap = vec![usize::MAX; m.num_edges()];
    vmap[mb] = hb;
    let mut queue = std::collections::VecDeque::from([mb]);
    // index h's edges for deterministic stepping
    let mut out = std::collections::HashMap::new();
    let mut inc = std::collections::HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        out.insert((e.src, e.label), i);
        inc.insert((e.dst, e.label), i);
    }
    while let Some(v) = queue.pop_front() {
        for (i, e) in m.edges().iter().enumerate() {
            let (from, to, table, letter): (_, _, &std::collections::HashMap<_, _>, _) =
                if e.src == v {
                    (e.src, e.dst, &out, Letter::new(e.label, true))
                } else if e.dst == v {
                    (e.dst, e.src, &inc, Letter::new(e.label, false))
                } else {
                    continue;
                };
            let hv = vmap[from];
            let Some(&hi) = table.get(&(hv, e.label)) else {
                // reconstruct a rejected word for the diagnostic
                let _ = letter;
                return Err(GogError::NoLift {
                    word: crate::word::Word::from_letters([letter]),
                });
            };
            let f = h.edges()[hi];
            let target = if e.src == from { f.dst } else { f.src };
            if emap[i] == usize::MAX {
                emap[i] = hi;
            } else if emap[i] != hi {
                return Err(GogError::NoLift {
                    word: crate::word::Word::identity(),
                });
            }
            if vmap[to] == usize::MAX {
                vmap[to] = target;
                queue.push_back(to);
            } else if vmap[to] != target {
                return Err(GogError::NoLift {
                    word: crate::word::Word::identity(),
                });
            }
        }
    }
    if vmap.iter().any(|&v| v == usize::MAX) || emap.iter().any(|&e| e == usize::MAX) {
        // m was not connected; unreachable parts have no canonical lift
        return Err(GogError::Malformed(
            "lift requires a connected domain".into(),
        ));
    }
    let f = GraphMorphism {
        vertex_map: vmap,
        edge_map: emap,
    };
    debug_assert!(f.is_immersion(m, h));
    Ok(f)
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
    fn identity_is_immersion() {
        let g = subgroup(&["ab", "ba"], 2);
        let id = GraphMorphism::identity(&g);
        assert!(id.is_immersion(&g, &g));
        assert!(id.is_embedding(&g, &g));
    }

    #[test]
    fn two_loops_to_one_is_not_immersion() {
        let mut g = LabeledGraph::new(1);
        let v = g.add_vertex();
        g.add_edge(v, v, 0);
        g.add_edge(v, v, 0);
        let r = LabeledGraph::rose(1);
        let m = GraphMorphism {
            vertex_map: vec![0],
            edge_map: vec![0, 0],
        };
        assert!(m.is_valid(&g, &r));
        assert!(!m.is_immersion(&g, &r));
    }

    #[test]
    fn double_cover_is_immersion() {
        // 2-cycle of a-edges mapping onto the a-loop
        let mut g = LabeledGraph::new(1);
        let v0 = g.add_vertex();
        let v1 = g.add_vertex();
        g.add_edge(v0, v1, 0);
        g.add_edge(v1, v0, 0);
        let r = LabeledGraph::rose(1);
        let m = GraphMorphism {
            vertex_map: vec![0, 0],
            edge_map: vec![0, 0],
        };
        assert!(m.is_immersion(&g, &r));
        assert!(!m.is_embedding(&g, &r));
    }

    #[test]
    fn lift_identity_case() {
        let h = subgroup(&["ab", "ba"], 2);
        let f = lift(&h, &h).unwrap();
        assert_eq!(f, GraphMorphism::identity(&h));
    }

    #[test]
    fn lift_failure_case() {
        let m = subgroup(&["b"], 2);
        let h = subgroup(&["a"], 2);
        assert!(lift(&m, &h).is_err());
    }

    #[test]
    fn lift_wraps_square_twice() {
        let m = subgroup(&["aa"], 2);
        let h = subgroup(&["a"], 2);
        let f = lift(&m, &h).unwrap();
        assert!(f.is_valid(&m, &h));
        assert!(f.is_immersion(&m, &h));
        // both edges of the 2-cycle wrap the single loop
        assert_eq!(f.edge_map, vec![0, 0]);
    }
}
