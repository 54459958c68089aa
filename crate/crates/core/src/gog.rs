//! The graph-of-graphs model: a finite underlying graph whose vertices and
//! edges carry finite graphs, with embedding attaching maps.
//!
//! Derived graphs: the horizontal graph Γ_H restricts every space to its
//! vertices, the mid-graph Γ_M restricts every space to (midpoints of) its
//! edges, and Γ_U is the underlying graph itself.

use std::collections::BTreeMap;

use crate::error::GogError;
use crate::graph::LabeledGraph;
use crate::morphism::{lift, GraphMorphism};
use crate::word::Word;

/// A plain finite graph carried by an underlying vertex or edge. Vertices
/// carry an optional side tag recording which original vertex group they
/// descend from; tags survive every move that copies vertices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Space {
    pub sides: Vec<Option<u32>>,
    pub edges: Vec<(usize, usize)>,
}

impl Space {
    pub fn num_vertices(&self) -> usize {
        self.sides.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self, side: Option<u32>) -> usize {
        self.sides.push(side);
        self.sides.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        assert!(a < self.num_vertices() && b < self.num_vertices());
        self.edges.push((a, b));
        self.edges.len() - 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64
    }

    /// Component id per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = comp[v];
                            stack.push(y);
                        }
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        let (_, count) = self.components();
        count <= 1
    }
}

/// An attaching map of an edge space into a vertex space. Edge images carry
/// a reversal flag relative to the stored orientations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Attach {
    pub vmap: Vec<usize>,
    pub emap: Vec<(usize, bool)>,
}

impl Attach {
    pub fn identity(space: &Space) -> Self {
        Attach {
            vmap: (0..space.num_vertices()).collect(),
            emap: (0..space.num_edges()).map(|e| (e, false)).collect(),
        }
    }

    /// Morphism and embedding check against domain and codomain spaces.
    pub fn check(&self, domain: &Space, codomain: &Space) -> Result<(), String> {
        if self.vmap.len() != domain.num_vertices() || self.emap.len() != domain.num_edges() {
            return Err("attachment table sizes do not match the edge space".into());
        }
        for (f, &(a, b)) in domain.edges.iter().enumerate() {
            let (e, rev) = self.emap[f];
            let Some(&(s, t)) = codomain.edges.get(e) else {
                return Err(format!("edge image {e} out of range"));
            };
            let (s, t) = if rev { (t, s) } else { (s, t) };
            if self.vmap[a] != s || self.vmap[b] != t {
                return Err(format!("edge {f} image endpoints do not match"));
            }
        }
        if self.vmap.iter().any(|&v| v >= codomain.num_vertices()) {
            return Err("vertex image out of range".into());
        }
        let mut vs = std::collections::HashSet::new();
        if !self.vmap.iter().all(|&v| vs.insert(v)) {
            return Err("not injective on vertices".into());
        }
        let mut es = std::collections::HashSet::new();
        if !self.emap.iter().all(|&(e, _)| es.insert(e)) {
            return Err("not injective on edges".into());
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GogEdge {
    pub ends: [usize; 2],
    pub space: Space,
    pub attach: [Attach; 2],
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GraphOfGraphs {
    pub vertex_spaces: Vec<Space>,
    pub edges: Vec<GogEdge>,
}

/// A derived graph (Γ_H or Γ_M) as a labeled graph over the alphabet of
/// underlying edges, with provenance back into the graph of graphs.
#[derive(Clone, Debug)]
pub struct Derived {
    pub graph: LabeledGraph,
    /// Γ_H: (underlying vertex, space vertex). Γ_M: (underlying vertex, space edge).
    pub vertex_origin: Vec<(usize, usize)>,
    /// Γ_H: (underlying edge, edge-space vertex). Γ_M: (underlying edge, edge-space edge).
    pub edge_origin: Vec<(usize, usize)>,
    /// Side tag per derived vertex (Γ_H only; empty for Γ_M).
    pub side: Vec<Option<u32>>,
    /// Global id offset per underlying vertex.
    pub vertex_offset: Vec<usize>,
    /// Global edge id offset per underlying edge.
    pub edge_offset: Vec<usize>,
}

impl GraphOfGraphs {
    pub fn num_underlying_vertices(&self) -> usize {
        self.vertex_spaces.len()
    }

    pub fn num_underlying_edges(&self) -> usize {
        self.edges.len()
    }

    /// Valence of each underlying vertex; loops count twice.
    pub fn underlying_valences(&self) -> Vec<usize> {
        let mut val = vec![0usize; self.vertex_spaces.len()];
        for e in &self.edges {
            val[e.ends[0]] += 1;
            val[e.ends[1]] += 1;
        }
        val
    }

    pub fn underlying_euler(&self) -> i64 {
        self.vertex_spaces.len() as i64 - self.edges.len() as i64
    }

    /// The underlying graph as an unlabeled `Space`.
    pub fn underlying_space(&self) -> Space {
        Space {
            sides: vec![None; self.vertex_spaces.len()],
            edges: self.edges.iter().map(|e| (e.ends[0], e.ends[1])).collect(),
        }
    }

    /// Incident (edge id, end) pairs at an underlying vertex, in id order.
    /// A loop contributes both of its ends.
    pub fn incident_ends(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for end in 0..2 {
                if e.ends[end] == v {
                    out.push((i, end));
                }
            }
        }
        out
    }

    /// Image of an attachment as vertex/edge membership masks in the target
    /// vertex space.
    pub fn attachment_image(&self, edge: usize, end: usize) -> (Vec<bool>, Vec<bool>) {
        let ge = &self.edges[edge];
        let target = &self.vertex_spaces[ge.ends[end]];
        let mut vmask = vec![false; target.num_vertices()];
        let mut emask = vec![false; target.num_edges()];
        for &v in &ge.attach[end].vmap {
            vmask[v] = true;
        }
        for &(e, _) in &ge.attach[end].emap {
            emask[e] = true;
        }
        (vmask, emask)
    }

    /// Structural validation: endpoint indices, attachment morphism and
    /// embedding conditions.
    pub fn validate(&self) -> Result<(), GogError> {
        for (i, e) in self.edges.iter().enumerate() {
            for end in 0..2 {
                let v = e.ends[end];
                if v >= self.vertex_spaces.len() {
                    return Err(GogError::Malformed(format!(
                        "edge {i} end {end} references missing vertex {v}"
                    )));
                }
                e.attach[end]
                    .check(&e.space, &self.vertex_spaces[v])
                    .map_err(|msg| {
                        if msg.contains("injective") {
                            GogError::AttachmentNotEmbedding { edge: i, end }
                        } else {
                            GogError::Malformed(format!("edge {i} end {end}: {msg}"))
                        }
                    })?;
            }
        }
        Ok(())
    }

    /// Σχ(V_i) − Σχ(E_j): the Euler characteristic of the total space.
    pub fn total_space_euler(&self) -> i64 {
        let v: i64 = self.vertex_spaces.iter().map(|s| s.euler_characteristic()).sum();
        let e: i64 = self.edges.iter().map(|e| e.space.euler_characteristic()).sum();
        v - e
    }

    /// The horizontal graph Γ_H: one vertex per vertex-space vertex, one
    /// edge per edge-space vertex, labeled by underlying edge and oriented
    /// from end 0 to end 1.
    pub fn horizontal_graph(&self) -> Derived {
        let mut vertex_offset = Vec::with_capacity(self.vertex_spaces.len());
        let mut graph = LabeledGraph::new(self.edges.len().max(1) as u32);
        let mut vertex_origin = Vec::new();
        let mut side = Vec::new();
        for (i, s) in self.vertex_spaces.iter().enumerate() {
            vertex_offset.push(graph.num_vertices());
            for w in 0..s.num_vertices() {
                graph.add_vertex();
                vertex_origin.push((i, w));
                side.push(s.sides[w]);
            }
        }
        let mut edge_origin = Vec::new();
        let mut edge_offset = Vec::with_capacity(self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            edge_offset.push(graph.num_edges());
            for w in 0..e.space.num_vertices() {
                graph.add_edge(
                    vertex_offset[e.ends[0]] + e.attach[0].vmap[w],
                    vertex_offset[e.ends[1]] + e.attach[1].vmap[w],
                    j as u32,
                );
                edge_origin.push((j, w));
            }
        }
        Derived {
            graph,
            vertex_origin,
            edge_origin,
            side,
            vertex_offset,
            edge_offset,
        }
    }

    /// The mid-graph Γ_M: one vertex per vertex-space edge, one edge per
    /// edge-space edge, labeled by underlying edge.
    pub fn mid_graph(&self) -> Derived {
        let mut vertex_offset = Vec::with_capacity(self.vertex_spaces.len());
        let mut graph = LabeledGraph::new(self.edges.len().max(1) as u32);
        let mut vertex_origin = Vec::new();
        for (i, s) in self.vertex_spaces.iter().enumerate() {
            vertex_offset.push(graph.num_vertices());
            for e in 0..s.num_edges() {
                graph.add_vertex();
                vertex_origin.push((i, e));
            }
        }
        let mut edge_origin = Vec::new();
        let mut edge_offset = Vec::with_capacity(self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            edge_offset.push(graph.num_edges());
            for (f, _) in e.space.edges.iter().enumerate() {
                graph.add_edge(
                    vertex_offset[e.ends[0]] + e.attach[0].emap[f].0,
                    vertex_offset[e.ends[1]] + e.attach[1].emap[f].0,
                    j as u32,
                );
                edge_origin.push((j, f));
            }
        }
        Derived {
            graph,
            vertex_origin,
            edge_origin,
            side: Vec::new(),
            vertex_offset,
            edge_offset,
        }
    }

    /// No vertex space contains two distinct edges with the same unordered
    /// endpoint pair. With `forbid_monogons`, loop edges also disqualify.
    pub fn is_simple_edged(&self, forbid_monogons: bool) -> bool {
        for s in &self.vertex_spaces {
            let mut seen = std::collections::HashSet::new();
            for &(a, b) in &s.edges {
                if forbid_monogons && a == b {
                    return false;
                }
                let key = if a <= b { (a, b) } else { (b, a) };
                if !seen.insert(key) {
                    return false;
                }
            }
        }
        true
    }

    /// Finds a bigon: (underlying vertex, edge id, edge id) with the same
    /// unordered endpoints, lowest ids first.
    pub fn find_bigon(&self) -> Option<(usize, usize, usize)> {
        for (i, s) in self.vertex_spaces.iter().enumerate() {
            let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for (f, &(a, b)) in s.edges.iter().enumerate() {
                let key = if a <= b { (a, b) } else { (b, a) };
                if let Some(&g) = seen.get(&key) {
                    return Some((i, g, f));
                }
                seen.insert(key, f);
            }
        }
        None
    }

    /// A coherent two-sided co-orientation of vertex-space edges, if one
    /// exists: the combinatorial form of the mid-graph having a product
    /// neighborhood. Returns the orientation flag per global vertex-space
    /// edge (false = as stored), or None if incoherent.
    pub fn co_orientation(&self) -> Option<Vec<bool>> {
        let mut offset = Vec::with_capacity(self.vertex_spaces.len());
        let mut total = 0;
        for s in &self.vertex_spaces {
            offset.push(total);
            total += s.num_edges();
        }
        // parity union-find: parity[x] = orientation of x relative to parent
        let mut parent: Vec<usize> = (0..total).collect();
        let mut parity = vec![false; total];
        fn find(parent: &mut Vec<usize>, parity: &mut Vec<bool>, x: usize) -> (usize, bool) {
            if parent[x] == x {
                return (x, false);
            }
            let (r, p) = find(parent, parity, parent[x]);
            let np = parity[x] ^ p;
            parent[x] = r;
            parity[x] = np;
            (r, np)
        }
        for e in &self.edges {
            for f in 0..e.space.num_edges() {
                let (e0, rev0) = e.attach[0].emap[f];
                let (e1, rev1) = e.attach[1].emap[f];
                let a = offset[e.ends[0]] + e0;
                let b = offset[e.ends[1]] + e1;
                let want = rev0 ^ rev1; // s(a) differs from s(b) iff flips differ
                let (ra, pa) = find(&mut parent, &mut parity, a);
                let (rb, pb) = find(&mut parent, &mut parity, b);
                if ra == rb {
                    if pa ^ pb != want {
                        return None;
                    }
                } else {
                    parent[ra] = rb;
                    parity[ra] = pa ^ pb ^ want;
                }
            }
        }
        let mut out = vec![false; total];
        for x in 0..total {
            let (_, p) = find(&mut parent, &mut parity, x);
            out[x] = p;
        }
        Some(out)
    }

    /// Is this a representing graph of graphs, and if so, the two side
    /// immersions Γ_M → Γ_H induced by the co-orientation.
    pub fn representing_maps(&self) -> Option<[GraphMorphism; 2]> {
        let orient = self.co_orientation()?;
        let gh = self.horizontal_graph();
        let gm = self.mid_graph();
        let mut maps = Vec::new();
        for k in 0..2 {
            // k = 0: tails under the co-orientation, k = 1: heads
            let mut vertex_map = Vec::with_capacity(gm.graph.num_vertices());
            for &(i, e) in &gm.vertex_origin {
                let (a, b) = self.vertex_spaces[i].edges[e];
                let flipped = orient[gm.vertex_offset[i] + e];
                let tail = if flipped { b } else { a };
                let head = if flipped { a } else { b };
                vertex_map.push(gh.vertex_offset[i] + if k == 0 { tail } else { head });
            }
            let mut edge_map = Vec::with_capacity(gm.graph.num_edges());
            for &(j, f) in &gm.edge_origin {
                let ge = &self.edges[j];
                let (a, b) = ge.space.edges[f];
                let (e0, rev0) = ge.attach[0].emap[f];
                let s0 = orient[gm.vertex_offset[ge.ends[0]] + e0];
                let t = s0 ^ rev0; // transverse orientation of f
                let tail = if t { b } else { a };
                let head = if t { a } else { b };
                edge_map.push(gh.edge_offset[j] + if k == 0 { tail } else { head });
            }
            let m = GraphMorphism { vertex_map, edge_map };
            debug_assert!(m.is_valid(&gm.graph, &gh.graph));
            maps.push(m);
        }
        Some([maps.remove(0), maps.remove(0)])
    }

    pub fn is_representing(&self) -> bool {
        self.co_orientation().is_some()
    }
}

/// Sorted multiset of first betti numbers over components (ignores the
/// labels; used for move invariants).
pub fn betti_multiset(g: &LabeledGraph) -> Vec<i64> {
    let mut out: Vec<i64> = g
        .components()
        .iter()
        .map(|(c, _)| c.first_betti())
        .collect();
    out.sort_unstable();
    out
}

/// A representing graph of graphs built from subgroup data, plus the
/// Stallings graphs and lifts it came from.
pub struct BuiltInstance {
    pub gog: GraphOfGraphs,
    pub ambient_rank: u32,
    pub h_graphs: Vec<LabeledGraph>,
    pub m_graphs: Vec<LabeledGraph>,
    pub edge_ends: Vec<(usize, usize)>,
    pub iota: Vec<GraphMorphism>,
    pub tau: Vec<GraphMorphism>,
}

/// The §-construction: underlying rose with one edge per ambient
/// generator; the single vertex space has the vertices of ⊔Γ_{H_i} as
/// vertices and the vertices of ⊔Γ_{M_j} as edges; the edge space over
/// generator l has the l-labeled edges of ⊔Γ_{H_i} as vertices and the
/// l-labeled edges of ⊔Γ_{M_j} as edges, attached by endpoint maps.
pub fn build_representing(
    subgroups: &[Vec<Word>],
    edge_groups: &[(usize, usize, Vec<Word>)],
    ambient_rank: u32,
) -> Result<BuiltInstance, GogError> {
    let h_graphs: Vec<LabeledGraph> = subgroups
        .iter()
        .map(|ws| LabeledGraph::from_words(ws, ambient_rank))
        .collect::<Result<_, _>>()?;
    let mut m_graphs = Vec::new();
    let mut iota = Vec::new();
    let mut tau = Vec::new();
    let mut edge_ends = Vec::new();
    for (j, (i0, i1, ws)) in edge_groups.iter().enumerate() {
        let m = LabeledGraph::from_words(ws, ambient_rank)?;
        for (end, &i) in [i0, i1].iter().enumerate() {
            if *i >= h_graphs.len() {
                return Err(GogError::Malformed(format!(
                    "edge group {j} references missing subgroup {i}"
                )));
            }
            let f = lift(&m, &h_graphs[*i]).map_err(|_| GogError::EdgeGroupNotContained {
                edge: j,
                vertex: *i,
                word: ws
                    .iter()
                    .find(|w| !h_graphs[*i].contains(w))
                    .cloned()
                    .unwrap_or_default(),
            })?;
            if end == 0 {
                iota.push(f);
            } else {
                tau.push(f);
            }
        }
        edge_ends.push((*i0, *i1));
        m_graphs.push(m);
    }

    // global offsets
    let mut h_voff = Vec::new();
    let mut h_eoff = Vec::new();
    let (mut nv, mut ne) = (0, 0);
    for h in &h_graphs {
        h_voff.push(nv);
        h_eoff.push(ne);
        nv += h.num_vertices();
        ne += h.num_edges();
    }
    let mut m_voff = Vec::new();
    let mut total_m_verts = 0;
    for m in &m_graphs {
        m_voff.push(total_m_verts);
        total_m_verts += m.num_vertices();
    }

    // vertex space
    let mut v_space = Space::default();
    for (i, h) in h_graphs.iter().enumerate() {
        for _ in 0..h.num_vertices() {
            v_space.add_vertex(Some(i as u32));
        }
    }
    for (j, m) in m_graphs.iter().enumerate() {
        let (i0, i1) = edge_ends[j];
        for w in 0..m.num_vertices() {
            v_space.add_edge(
                h_voff[i0] + iota[j].vertex_map[w],
                h_voff[i1] + tau[j].vertex_map[w],
            );
        }
    }

    // edge spaces, one per generator
    let mut gog = GraphOfGraphs {
        vertex_spaces: vec![v_space],
        edges: Vec::new(),
    };
    for l in 0..ambient_rank {
        let mut space = Space::default();
        let mut local_of_hedge: BTreeMap<usize, usize> = BTreeMap::new();
        let mut a0 = Attach { vmap: Vec::new(), emap: Vec::new() };
        let mut a1 = Attach { vmap: Vec::new(), emap: Vec::new() };
        for (i, h) in h_graphs.iter().enumerate() {
            for (e, edge) in h.edges().iter().enumerate() {
                if edge.label == l {
                    let local = space.add_vertex(Some(i as u32));
                    local_of_hedge.insert(h_eoff[i] + e, local);
                    a0.vmap.push(h_voff[i] + edge.src);
                    a1.vmap.push(h_voff[i] + edge.dst);
                }
            }
        }
        for (j, m) in m_graphs.iter().enumerate() {
            let (i0, i1) = edge_ends[j];
            for (f, edge) in m.edges().iter().enumerate() {
                if edge.label == l {
                    let a = local_of_hedge[&(h_eoff[i0] + iota[j].edge_map[f])];
                    let b = local_of_hedge[&(h_eoff[i1] + tau[j].edge_map[f])];
                    space.add_edge(a, b);
                    a0.emap.push((m_voff[j] + edge.src, false));
                    a1.emap.push((m_voff[j] + edge.dst, false));
                }
            }
        }
        gog.edges.push(GogEdge {
            ends: [0, 0],
            space,
            attach: [a0, a1],
        });
    }
    gog.validate()?;
    Ok(BuiltInstance {
        gog,
        ambient_rank,
        h_graphs,
        m_graphs,
        edge_ends,
        iota,
        tau,
    })
}

/// Disjoint union of labeled graphs, used to state construction contracts.
pub fn disjoint_union(graphs: &[LabeledGraph], rank: u32) -> LabeledGraph {
    let mut g = LabeledGraph::new(rank);
    for h in graphs {
        let off = g.num_vertices();
        for _ in 0..h.num_vertices() {
            g.add_vertex();
        }
        for e in h.edges() {
            g.add_edge(off + e.src, off + e.dst, e.label);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    fn relabel(g: &LabeledGraph, rank: u32) -> LabeledGraph {
        // forget basepoint and widen rank, for unbased comparisons
        let mut out = LabeledGraph::new(rank);
        for _ in 0..g.num_vertices() {
            out.add_vertex();
        }
        for e in g.edges() {
            out.add_edge(e.src, e.dst, e.label);
        }
        out
    }

    fn built_example() -> BuiltInstance {
        // H1 = <a,b>, H2 = <b,c>, M = <b> over F3
        build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, words(&["b"]))],
            3,
        )
        .unwrap()
    }

    #[test]
    fn built_instance_derived_graphs_match_inputs() {
        let built = built_example();
        let gh = built.gog.horizontal_graph();
        let expect_h = disjoint_union(&built.h_graphs, 3);
        // Γ_H edges are labeled by underlying edge = generator here
        assert!(gh.graph.is_isomorphic(&relabel(&expect_h, 3)));
        let gm = built.gog.mid_graph();
        let expect_m = disjoint_union(&built.m_graphs, 3);
        assert!(gm.graph.is_isomorphic(&relabel(&expect_m, 3)));
    }

    #[test]
    fn built_instance_is_representing() {
        let built = built_example();
        assert!(built.gog.is_representing());
        let [m0, m1] = built.gog.representing_maps().unwrap();
        let gh = built.gog.horizontal_graph();
        let gm = built.gog.mid_graph();
        for m in [&m0, &m1] {
            assert!(m.is_immersion(&gm.graph, &gh.graph));
        }
    }

    #[test]
    fn containment_error_reported() {
        let r = build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, words(&["c"]))],
            3,
        );
        assert!(matches!(r, Err(GogError::EdgeGroupNotContained { vertex: 0, .. })));
    }

    #[test]
    fn horizontal_valence_formula() {
        let built = built_example();
        let gh = built.gog.horizontal_graph();
        let val = gh.graph.valences();
        for (w, &(i, sv)) in gh.vertex_origin.iter().enumerate() {
            let mut count = 0;
            for (j, end) in built
                .gog
                .incident_ends(i)
                .iter()
                .copied()
                .collect::<Vec<_>>()
            {
                let e = &built.gog.edges[j];
                count += e.attach[end].vmap.iter().filter(|&&v| v == sv).count();
            }
            assert_eq!(val[w], count);
        }
    }

    #[test]
    fn total_space_euler_value() {
        let built = built_example();
        // one vertex space + 3 edge spaces
        let chi_v: i64 = built.gog.vertex_spaces[0].euler_characteristic();
        let chi_e: i64 = built
            .gog
            .edges
            .iter()
            .map(|e| e.space.euler_characteristic())
            .sum();
        assert_eq!(built.gog.total_space_euler(), chi_v - chi_e);
    }

    #[test]
    fn simple_edged_checks() {
        let built = built_example();
        assert!(built.gog.is_simple_edged(false));
        // doubled edge disqualifies
        let mut x = built.gog.clone();
        let (a, b) = x.vertex_spaces[0].edges[0];
        x.vertex_spaces[0].edges.push((a, b));
        assert!(!x.is_simple_edged(false));
    }

    #[test]
    fn side_swap_is_not_representing() {
        // one loop whose strip flips sides: a Möbius-like attachment
        let mut v = Space::default();
        let u0 = v.add_vertex(Some(0));
        let u1 = v.add_vertex(Some(1));
        let e = v.add_edge(u0, u1);
        let mut es = Space::default();
        let x0 = es.add_vertex(None);
        let x1 = es.add_vertex(None);
        es.add_edge(x0, x1);
        let gog = GraphOfGraphs {
            vertex_spaces: vec![v],
            edges: vec![GogEdge {
                ends: [0, 0],
                space: es,
                attach: [
                    Attach { vmap: vec![u0, u1], emap: vec![(e, false)] },
                    Attach { vmap: vec![u1, u0], emap: vec![(e, true)] },
                ],
            }],
        };
        gog.validate().unwrap();
        assert!(!gog.is_representing());
    }

    #[test]
    fn empty_mid_graph_is_vacuously_representing() {
        let mut v = Space::default();
        v.add_vertex(None);
        let gog = GraphOfGraphs {
            vertex_spaces: vec![v],
            edges: vec![],
        };
        assert!(gog.is_representing());
        assert_eq!(gog.mid_graph().graph.num_vertices(), 0);
    }
}
