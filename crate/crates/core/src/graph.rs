//! Labeled graphs (inverse automata) representing finitely generated
//! subgroups of a free group.
//!
//! Edges are stored once with a positive label; traversing an edge against
//! its orientation realizes the inverse letter.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::GogError;
use crate::morphism::GraphMorphism;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: u32,
}

/// A finite graph with generator-labeled oriented edges and an optional
/// basepoint. When folded, core and based this is the Stallings graph of a
/// subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGraph {
    rank: u32,
    n_vertices: usize,
    edges: Vec<Edge>,
    basepoint: Option<usize>,
}

/// Union-find over vertex ids, used by folding and quotients.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    /// Unites two classes, keeping the smaller root id as representative.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl LabeledGraph {
    pub fn new(rank: u32) -> Self {
        LabeledGraph {
            rank,
            n_vertices: 0,
            edges: Vec::new(),
            basepoint: None,
        }
    }

    /// Single based vertex, no edges: the trivial subgroup.
    pub fn trivial(rank: u32) -> Self {
        let mut g = LabeledGraph::new(rank);
        let v = g.add_vertex();
        g.set_basepoint(Some(v));
        g
    }

    /// One vertex with a loop per generator: the whole free group.
    pub fn rose(rank: u32) -> Self {
        let mut g = LabeledGraph::new(rank);
        let v = g.add_vertex();
        for l in 0..rank {
            g.add_edge(v, v, l);
        }
        g.set_basepoint(Some(v));
        g
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn num_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn set_basepoint(&mut self, b: Option<usize>) {
        if let Some(v) = b {
            assert!(v < self.n_vertices);
        }
        self.basepoint = b;
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n_vertices += 1;
        self.n_vertices - 1
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, label: u32) -> usize {
        assert!(src < self.n_vertices && dst < self.n_vertices);
        assert!(label < self.rank);
        self.edges.push(Edge { src, dst, label });
        self.edges.len() - 1
    }

    /// |vertices| - |edges|. For a connected graph the subgroup rank is 1 - χ.
    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.edges.len() as i64
    }

    /// First betti number, assuming the graph is connected and nonempty.
    pub fn first_betti(&self) -> i64 {
        1 - self.euler_characteristic()
    }

    /// No vertex has two distinct edges with equal label both outgoing or
    /// both incoming.
    pub fn is_folded(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if !seen.insert((e.src, e.label, true)) || !seen.insert((e.dst, e.label, false)) {
                return false;
            }
        }
        true
    }

    /// No valence-1 vertex other than the basepoint.
    pub fn is_core(&self) -> bool {
        let val = self.valences();
        (0..self.n_vertices).all(|v| val[v] != 1 || Some(v) == self.basepoint)
    }

    /// Valence per vertex; a loop counts twice.
    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0usize; self.n_vertices];
        for e in &self.edges {
            val[e.src] += 1;
            val[e.dst] += 1;
        }
        val
    }

    /// Folds the graph: identifies vertex pairs forced by equal-label edge
    /// pairs until locally injective. Returns the folded graph and the
    /// quotient morphism. Deterministic: conflicts are resolved in edge-id
    /// order and surviving classes are numbered by least original id.
    pub fn fold(&self) -> (LabeledGraph, GraphMorphism) {
        let mut vuf = UnionFind::new(self.n_vertices);
        let mut euf = UnionFind::new(self.edges.len());
        loop {
            let mut changed = false;
            // (vertex class, label) -> representative edge, per direction.
            let mut out: BTreeMap<(usize, u32), usize> = BTreeMap::new();
            let mut inc: BTreeMap<(usize, u32), usize> = BTreeMap::new();
            for (i, e) in self.edges.iter().enumerate() {
                let ei = euf.find(i);
                let src = vuf.find(e.src);
                let dst = vuf.find(e.dst);
                if let Some(&j) = out.get(&(src, e.label)) {
                    if euf.find(j) != ei {
                        let other = self.edges[euf.find(j)];
                        let od = vuf.find(other.dst);
                        vuf.union(dst, od);
                        euf.union(i, j);
                        changed = true;
                        break;
                    }
                } else {
                    out.insert((src, e.label), ei);
                }
                if let Some(&j) = inc.get(&(dst, e.label)) {
                    if euf.find(j) != ei {
                        let other = self.edges[euf.find(j)];
                        let os = vuf.find(other.src);
                        vuf.union(src, os);
                        euf.union(i, j);
                        changed = true;
                        break;
                    }
                } else {
                    inc.insert((dst, e.label), ei);
                }
            }
            if !changed {
                break;
            }
        }
        self.quotient(&mut vuf, &mut euf)
    }

    /// Builds the quotient graph of the given vertex/edge identifications.
    pub(crate) fn quotient(
        &self,
        vuf: &mut UnionFind,
        euf: &mut UnionFind,
    ) -> (LabeledGraph, GraphMorphism) {
        let mut vid = vec![usize::MAX; self.n_vertices];
        let mut next = 0;
        for v in 0..self.n_vertices {
            let r = vuf.find(v);
            if vid[r] == usize::MAX {
                vid[r] = next;
                next += 1;
            }
            vid[v] = vid[r];
        }
        let mut g = LabeledGraph::new(self.rank);
        g.n_vertices = next;
        let mut eid = vec![usize::MAX; self.edges.len()];
        for (i, e) in self.edges.iter().enumerate() {
            let r = euf.find(i);
            if eid[r] == usize::MAX {
                eid[r] = g.edges.len();
                g.edges.push(Edge {
                    src: vid[e.src],
                    dst: vid[e.dst],
                    label: e.label,
                });
            }
            eid[i] = eid[r];
        }
        g.basepoint = self.basepoint.map(|b| vid[b]);
        (
            g,
            GraphMorphism {
                vertex_map: vid,
                edge_map: eid,
            },
        )
    }

    /// Outgoing/incoming transition in a folded graph.
    pub fn step(&self, v: usize, l: Letter) -> Option<usize> {
        for e in &self.edges {
            if l.positive && e.src == v && e.label == l.gen {
                return Some(e.dst);
            }
            if !l.positive && e.dst == v && e.label == l.gen {
                return Some(e.src);
            }
        }
        None
    }

    /// Membership: does `w` trace a closed path at the basepoint?
    /// The graph must be folded.
    pub fn contains(&self, w: &Word) -> bool {
        debug_assert!(self.is_folded());
        let Some(b) = self.basepoint else { return false };
        let mut v = b;
        for &l in w.letters() {
            match self.step(v, l) {
                Some(u) => v = u,
                None => return false,
            }
        }
        v == b
    }

    /// Iteratively removes valence-1 vertices (never `keep`), then any
    /// leftover isolated non-kept vertices. Loops at `keep` are preserved.
    pub fn core(&self, keep: Option<usize>) -> (LabeledGraph, Vec<Option<usize>>) {
        let mut alive_v = vec![true; self.n_vertices];
        let mut alive_e = vec![true; self.edges.len()];
        loop {
            let mut val = vec![0usize; self.n_vertices];
            for (i, e) in self.edges.iter().enumerate() {
                if alive_e[i] {
                    val[e.src] += 1;
                    val[e.dst] += 1;
                }
            }
            let mut removed = false;
            for v in 0..self.n_vertices {
                if alive_v[v] && val[v] == 1 && Some(v) != keep {
                    alive_v[v] = false;
                    for (i, e) in self.edges.iter().enumerate() {
                        if alive_e[i] && (e.src == v || e.dst == v) {
                            alive_e[i] = false;
                        }
                    }
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        let mut val = vec![0usize; self.n_vertices];
        for (i, e) in self.edges.iter().enumerate() {
            if alive_e[i] {
                val[e.src] += 1;
                val[e.dst] += 1;
            }
        }
        for v in 0..self.n_vertices {
            if alive_v[v] && val[v] == 0 && Some(v) != keep {
                alive_v[v] = false;
            }
        }
        let mut vmap = vec![None; self.n_vertices];
        let mut g = LabeledGraph::new(self.rank);
        for v in 0..self.n_vertices {
            if alive_v[v] {
                vmap[v] = Some(g.add_vertex());
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if alive_e[i] {
                g.add_edge(vmap[e.src].unwrap(), vmap[e.dst].unwrap(), e.label);
            }
        }
        g.basepoint = self.basepoint.and_then(|b| vmap[b]);
        (g, vmap)
    }

    /// Folded, core, based graph accepting exactly the subgroup generated
    /// by `words`.
    pub fn from_words(words: &[Word], rank: u32) -> Result<LabeledGraph, GogError> {
        for w in words {
            if let Some(g) = w.max_generator() {
                if g >= rank {
                    return Err(GogError::Alphabet {
                        word: w.clone(),
                        gen: g,
                        rank,
                    });
                }
            }
        }
        let mut g = LabeledGraph::new(rank);
        let base = g.add_vertex();
        for w in words {
            let mut prev = base;
            for (i, &l) in w.letters().iter().enumerate() {
                let next = if i + 1 == w.len() { base } else { g.add_vertex() };
                if l.positive {
                    g.add_edge(prev, next, l.gen);
                } else {
                    g.add_edge(next, prev, l.gen);
                }
                prev = next;
            }
        }
        g.basepoint = Some(base);
        let (folded, _) = g.fold();
        let (cored, _) = folded.core(folded.basepoint);
        Ok(cored)
    }

    /// Folded core graph of ⟨H₁ ∪ H₂⟩: wedge at basepoints, then fold.
    pub fn join(&self, other: &LabeledGraph) -> Result<LabeledGraph, GogError> {
        if self.rank != other.rank {
            return Err(GogError::RankMismatch(self.rank, other.rank));
        }
        let b1 = self.basepoint.ok_or(GogError::NoBasepoint)?;
        let b2 = other.basepoint.ok_or(GogError::NoBasepoint)?;
        let mut g = LabeledGraph::new(self.rank);
        g.n_vertices = self.n_vertices + other.n_vertices;
        g.edges = self.edges.clone();
        for e in &other.edges {
            g.edges.push(Edge {
                src: e.src + self.n_vertices,
                dst: e.dst + self.n_vertices,
                label: e.label,
            });
        }
        g.basepoint = Some(b1);
        let mut vuf = UnionFind::new(g.n_vertices);
        vuf.union(b1, b2 + self.n_vertices);
        let mut euf = UnionFind::new(g.edges.len());
        let (wedged, _) = g.quotient(&mut vuf, &mut euf);
        let (folded, _) = wedged.fold();
        let (cored, _) = folded.core(folded.basepoint);
        Ok(cored)
    }

    /// Connected components: returns (component graph, original vertex ids).
    /// The basepoint survives only in its own component.
    pub fn components(&self) -> Vec<(LabeledGraph, Vec<usize>)> {
        let mut comp = vec![usize::MAX; self.n_vertices];
        let mut count = 0;
        for start in 0..self.n_vertices {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = count;
            count += 1;
            let mut stack = vec![start];
            comp[start] = c;
            while let Some(v) = stack.pop() {
                for e in &self.edges {
                    for (a, b) in [(e.src, e.dst), (e.dst, e.src)] {
                        if a == v && comp[b] == usize::MAX {
                            comp[b] = c;
                            stack.push(b);
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        for c in 0..count {
            let mut g = LabeledGraph::new(self.rank);
            let mut orig = Vec::new();
            let mut vmap = vec![usize::MAX; self.n_vertices];
            for v in 0..self.n_vertices {
                if comp[v] == c {
                    vmap[v] = g.add_vertex();
                    orig.push(v);
                }
            }
            for e in &self.edges {
                if comp[e.src] == c {
                    g.add_edge(vmap[e.src], vmap[e.dst], e.label);
                }
            }
            if let Some(b) = self.basepoint {
                if comp[b] == c {
                    g.basepoint = Some(vmap[b]);
                }
            }
            out.push((g, orig));
        }
        out
    }

    /// Label- and orientation-preserving isomorphism test (backtracking;
    /// intended for small graphs). Basepoints must correspond when both
    /// graphs carry one.
    pub fn is_isomorphic(&self, other: &LabeledGraph) -> bool {
        if self.n_vertices != other.n_vertices
            || self.edges.len() != other.edges.len()
            || self.rank != other.rank
            || self.basepoint.is_some() != other.basepoint.is_some()
        {
            return false;
        }
        let mut vmap = vec![usize::MAX; self.n_vertices];
        let mut used = vec![false; self.n_vertices];
        if let (Some(a), Some(b)) = (self.basepoint, other.basepoint) {
            vmap[a] = b;
            used[b] = true;
        }
        self.iso_search(other, &mut vmap, &mut used, 0)
    }

    fn iso_search(
        &self,
        other: &LabeledGraph,
        vmap: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == self.n_vertices {
            return self.iso_check_edges(other, vmap);
        }
        if vmap[v] != usize::MAX {
            return self.iso_search(other, vmap, used, v + 1);
        }
        for u in 0..other.n_vertices {
            if used[u] {
                continue;
            }
            vmap[v] = u;
            used[u] = true;
            // prune: partial edge consistency
            if self.iso_partial_ok(other, vmap) && self.iso_search(other, vmap, used, v + 1) {
                return true;
            }
            vmap[v] = usize::MAX;
            used[u] = false;
        }
        false
    }

    fn iso_partial_ok(&self, other: &LabeledGraph, vmap: &[usize]) -> bool {
        let mut need: BTreeMap<(usize, usize, u32), i64> = BTreeMap::new();
        for e in &self.edges {
            if vmap[e.src] != usize::MAX && vmap[e.dst] != usize::MAX {
                *need.entry((vmap[e.src], vmap[e.dst], e.label)).or_default() += 1;
            }
        }
        let mut have: BTreeMap<(usize, usize, u32), i64> = BTreeMap::new();
        for e in &other.edges {
            *have.entry((e.src, e.dst, e.label)).or_default() += 1;
        }
        need.iter().all(|(k, n)| have.get(k).copied().unwrap_or(0) >= *n)
    }

    fn iso_check_edges(&self, other: &LabeledGraph, vmap: &[usize]) -> bool {
        let mut need: BTreeMap<(usize, usize, u32), i64> = BTreeMap::new();
        for e in &self.edges {
            *need.entry((vmap[e.src], vmap[e.dst], e.label)).or_default() += 1;
        }
        let mut have: BTreeMap<(usize, usize, u32), i64> = BTreeMap::new();
        for e in &other.edges {
            *have.entry((e.src, e.dst, e.label)).or_default() += 1;
        }
        need == have
    }

    /// A generating set read off a spanning tree: one word per non-tree edge.
    /// The graph must be folded, core and based.
    pub fn generators(&self) -> Result<Vec<Word>, GogError> {
        let base = self.basepoint.ok_or(GogError::NoBasepoint)?;
        // BFS spanning tree storing the word from base to each vertex.
        let mut path: Vec<Option<Word>> = vec![None; self.n_vertices];
        path[base] = Some(Word::identity());
        let mut tree_edge = vec![false; self.edges.len()];
        let mut queue = std::collections::VecDeque::from([base]);
        while let Some(v) = queue.pop_front() {
            for (i, e) in self.edges.iter().enumerate() {
                let (next, letter) = if e.src == v {
                    (e.dst, Letter::new(e.label, true))
                } else if e.dst == v {
                    (e.src, Letter::new(e.label, false))
                } else {
                    continue;
                };
                if path[next].is_none() {
                    let mut w = path[v].clone().unwrap();
                    w.push(letter);
                    path[next] = Some(w);
                    tree_edge[i] = true;
                    queue.push_back(next);
                }
            }
        }
        let mut gens = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if tree_edge[i] {
                continue;
            }
            let (Some(to_src), Some(to_dst)) = (&path[e.src], &path[e.dst]) else {
                continue; // unreachable component; ignored
            };
            let mut w = to_src.clone();
            w.push(Letter::new(e.label, true));
            let g = w.concat(&to_dst.inverse());
            if !g.is_empty() {
                gens.push(g);
            }
        }
        Ok(gens)
    }

    /// Line-based text serialization: `graph <rank> <n_vertices>`, one
    /// `edge <src> <dst> <label-char>` line per edge, optional `base <v>`.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {} {}\n", self.rank, self.n_vertices);
        for e in &self.edges {
            let c = (b'a' + (e.label % 26) as u8) as char;
            s.push_str(&format!("edge {} {} {}\n", e.src, e.dst, c));
        }
        if let Some(b) = self.basepoint {
            s.push_str(&format!("base {b}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<LabeledGraph, GogError> {
        let mut g: Option<LabeledGraph> = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let err = |message: String| GogError::InstanceParse {
                line: ln + 1,
                message,
            };
            match parts[0] {
                "graph" if parts.len() == 3 => {
                    let rank = parts[1].parse().map_err(|_| err("bad rank".into()))?;
                    let n: usize = parts[2].parse().map_err(|_| err("bad vertex count".into()))?;
                    let mut h = LabeledGraph::new(rank);
                    for _ in 0..n {
                        h.add_vertex();
                    }
                    g = Some(h);
                }
                "edge" if parts.len() == 4 => {
                    let g = g.as_mut().ok_or_else(|| err("edge before graph header".into()))?;
                    let src = parts[1].parse().map_err(|_| err("bad src".into()))?;
                    let dst = parts[2].parse().map_err(|_| err("bad dst".into()))?;
                    let c = parts[3].chars().next().unwrap();
                    if !c.is_ascii_lowercase() {
                        return Err(err(format!("bad label {c:?}")));
                    }
                    let label = c as u32 - 'a' as u32;
                    if src >= g.n_vertices || dst >= g.n_vertices || label >= g.rank {
                        return Err(err("edge out of range".into()));
                    }
                    g.add_edge(src, dst, label);
                }
                "base" if parts.len() == 2 => {
                    let g = g.as_mut().ok_or_else(|| err("base before graph header".into()))?;
                    let b: usize = parts[1].parse().map_err(|_| err("bad basepoint".into()))?;
                    if b >= g.n_vertices {
                        return Err(err("basepoint out of range".into()));
                    }
                    g.set_basepoint(Some(b));
                }
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        g.ok_or(GogError::InstanceParse {
            line: 0,
            message: "missing graph header".into(),
        })
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph(rank {}, {} vertices, {} edges, chi {})",
            self.rank,
            self.n_vertices,
            self.edges.len(),
            self.euler_characteristic()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn subgroup(words: &[&str], rank: u32) -> LabeledGraph {
        let ws: Vec<Word> = words.iter().map(|s| w(s)).collect();
        LabeledGraph::from_words(&ws, rank).unwrap()
    }

    #[test]
    fn single_generator_is_loop() {
        let g = subgroup(&["a"], 2);
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.euler_characteristic(), 0);
    }

    #[test]
    fn duplicate_generator_folds_away() {
        let g = subgroup(&["a", "a"], 2);
        let h = subgroup(&["a"], 2);
        assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn alphabet_error() {
        let ws = vec![w("c")];
        assert!(matches!(
            LabeledGraph::from_words(&ws, 2),
            Err(GogError::Alphabet { .. })
        ));
    }

    #[test]
    fn fold_is_fixed_point_on_folded() {
        let g = subgroup(&["ab", "ba"], 2);
        assert!(g.is_folded());
        let (h, m) = g.fold();
        assert_eq!(g, h);
        assert_eq!(m.vertex_map, (0..g.num_vertices()).collect::<Vec<_>>());
    }

    #[test]
    fn wedge_of_two_a_loops_folds_to_one() {
        let mut g = LabeledGraph::new(1);
        let v = g.add_vertex();
        g.add_edge(v, v, 0);
        g.add_edge(v, v, 0);
        g.set_basepoint(Some(v));
        let (h, m) = g.fold();
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(h.num_edges(), 1);
        assert_eq!(m.edge_map[0], m.edge_map[1]);
    }

    #[test]
    fn subdivided_a_ainv_path_folds_to_point() {
        // path spelling a·a⁻¹ from the basepoint back to itself
        let mut g = LabeledGraph::new(1);
        let b = g.add_vertex();
        let v = g.add_vertex();
        g.add_edge(b, v, 0);
        g.add_edge(b, v, 0);
        g.set_basepoint(Some(b));
        let (folded, _) = g.fold();
        assert_eq!(folded.num_edges(), 1);
        let (cored, _) = folded.core(folded.basepoint);
        assert_eq!(cored.num_vertices(), 1);
        assert_eq!(cored.num_edges(), 0);
    }

    #[test]
    fn membership_basic() {
        let g = subgroup(&["a"], 2);
        assert!(g.contains(&w("aaaaa")));
        assert!(!g.contains(&w("b")));
        assert!(g.contains(&Word::identity()));
    }

    #[test]
    fn membership_generator_words_always_accepted() {
        let words = ["aa", "ab", "bb"];
        let g = subgroup(&words, 2);
        for s in words {
            assert!(g.contains(&w(s)), "generator {s} must be accepted");
        }
        assert!(!g.contains(&w("a")));
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(LabeledGraph::rose(3).euler_characteristic(), -2);
        // a tree: path of 3 vertices
        let mut t = LabeledGraph::new(2);
        let v0 = t.add_vertex();
        let v1 = t.add_vertex();
        let v2 = t.add_vertex();
        t.add_edge(v0, v1, 0);
        t.add_edge(v1, v2, 1);
        assert_eq!(t.euler_characteristic(), 1);
    }

    #[test]
    fn core_examples() {
        // loop with attached hair
        let mut g = LabeledGraph::new(2);
        let v0 = g.add_vertex();
        let v1 = g.add_vertex();
        g.add_edge(v0, v0, 0);
        g.add_edge(v0, v1, 1);
        let (c, _) = g.core(None);
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.num_edges(), 1);
        // segment with no kept vertex -> empty
        let mut s = LabeledGraph::new(2);
        let u = s.add_vertex();
        let v = s.add_vertex();
        s.add_edge(u, v, 0);
        let (c, _) = s.core(None);
        assert_eq!(c.num_vertices(), 0);
        // single kept isolated vertex is legal
        let (c, _) = s.core(Some(u));
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.num_edges(), 0);
    }

    #[test]
    fn join_examples() {
        let h = subgroup(&["aa", "ab"], 2);
        assert!(h.join(&h).unwrap().is_isomorphic(&h));
        let a = subgroup(&["a"], 2);
        let b = subgroup(&["b"], 2);
        assert!(a.join(&b).unwrap().is_isomorphic(&LabeledGraph::rose(2)));
        // join(<a,b>, <c,ab>) in F3 has rank 3
        let h1 = subgroup(&["a", "b"], 3);
        let h2 = subgroup(&["c", "ab"], 3);
        let j = h1.join(&h2).unwrap();
        assert_eq!(j.first_betti(), 3);
    }

    #[test]
    fn generators_regenerate_subgroup() {
        let g = subgroup(&["aa", "ab", "bb"], 2);
        let gens = g.generators().unwrap();
        let h = LabeledGraph::from_words(&gens, 2).unwrap();
        assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn text_roundtrip() {
        let g = subgroup(&["ab", "ba"], 2);
        let h = LabeledGraph::from_text(&g.to_text()).unwrap();
        assert_eq!(g, h);
    }
}
