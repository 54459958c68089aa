//! Moves (M1)–(M7) on graphs of graphs, the reduced predicate, the
//! lexicographic complexity measure, and the driver that reduces an
//! instance to all-valence-three form.

use std::fmt;

use crate::error::GogError;
use crate::gog::{Attach, GogEdge, GraphOfGraphs, Space};

/// Termination measure: (χ(Γ_U), max valence, number of max-valence
/// vertices), compared lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Complexity {
    pub chi: i64,
    pub max_valence: usize,
    pub num_max: usize,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.chi, self.max_valence, self.num_max)
    }
}

pub fn complexity(x: &GraphOfGraphs) -> Complexity {
    let val = x.underlying_valences();
    let max_valence = val.iter().copied().max().unwrap_or(0);
    let num_max = val.iter().filter(|&&v| v == max_valence).count();
    Complexity {
        chi: x.underlying_euler(),
        max_valence,
        num_max: if x.num_underlying_vertices() == 0 { 0 } else { num_max },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveId {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Valence bookkeeping for one blowup, used to check the tree balance
/// equation 1 − ½val(v) = Σᵢ (1 − ½val(vᵢ)) when the glued subgraph is a
/// tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupBalance {
    pub old_valence: usize,
    pub new_valences: Vec<usize>,
    pub glued_edge_count: usize,
    pub glued_is_tree: bool,
}

impl BlowupBalance {
    /// Both sides of the balance equation in doubled arithmetic.
    pub fn sides(&self) -> (i64, i64) {
        let lhs = 2 - self.old_valence as i64;
        let rhs = self
            .new_valences
            .iter()
            .map(|&v| 2 - v as i64)
            .sum::<i64>();
        (lhs, rhs)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveRecord {
    pub move_id: MoveId,
    pub target: String,
    pub before: Complexity,
    pub after: Complexity,
    pub balance: Option<BlowupBalance>,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} target={} before={} after={}",
            self.move_id, self.target, self.before, self.after
        )?;
        if let Some(b) = &self.balance {
            let (lhs, rhs) = b.sides();
            write!(
                f,
                " glued_tree={} balance={}/{}",
                if b.glued_is_tree { "yes" } else { "no" },
                lhs,
                rhs
            )?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// attachment algebra

fn compose_attach(first: &Attach, then: &Attach) -> Attach {
    Attach {
        vmap: first.vmap.iter().map(|&v| then.vmap[v]).collect(),
        emap: first
            .emap
            .iter()
            .map(|&(e, r)| {
                let (e2, r2) = then.emap[e];
                (e2, r ^ r2)
            })
            .collect(),
    }
}

/// Inverse of a bijective attachment V ≅ E.
fn invert_attach(a: &Attach, codomain_vertices: usize, codomain_edges: usize) -> Attach {
    let mut vmap = vec![usize::MAX; codomain_vertices];
    for (x, &v) in a.vmap.iter().enumerate() {
        vmap[v] = x;
    }
    let mut emap = vec![(usize::MAX, false); codomain_edges];
    for (x, &(e, r)) in a.emap.iter().enumerate() {
        emap[e] = (x, r);
    }
    Attach { vmap, emap }
}

fn is_iso_onto(a: &Attach, codomain: &Space) -> bool {
    a.vmap.len() == codomain.num_vertices() && a.emap.len() == codomain.num_edges()
}

/// Restriction of a space to masked vertices/edges, with old→new maps.
fn extract_space(
    space: &Space,
    vmask: &[bool],
    emask: &[bool],
) -> (Space, Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut out = Space::default();
    let mut vmap = vec![None; space.num_vertices()];
    for v in 0..space.num_vertices() {
        if vmask[v] {
            vmap[v] = Some(out.add_vertex(space.sides[v]));
        }
    }
    let mut emap = vec![None; space.num_edges()];
    for (e, &(a, b)) in space.edges.iter().enumerate() {
        if emask[e] {
            emap[e] = Some(out.add_edge(vmap[a].unwrap(), vmap[b].unwrap()));
        }
    }
    (out, vmap, emap)
}

// ---------------------------------------------------------------------------
// M1: making vertex and edge spaces connected

pub struct SplitResult {
    pub gog: GraphOfGraphs,
    /// old underlying vertex -> new underlying vertices, in component order
    pub vertex_descendants: Vec<Vec<usize>>,
    /// old underlying edge -> new underlying edges
    pub edge_descendants: Vec<Vec<usize>>,
    pub changed: bool,
}

pub fn m1_split_components(x: &GraphOfGraphs) -> SplitResult {
    let mut gog = GraphOfGraphs::default();
    let mut vertex_descendants = vec![Vec::new(); x.num_underlying_vertices()];
    // per old vertex: (component id per space vertex, local vertex map, local edge map)
    let mut vcomp_of = Vec::new();
    let mut vloc = Vec::new();
    let mut eloc = Vec::new();
    let mut changed = false;
    for (i, space) in x.vertex_spaces.iter().enumerate() {
        let (comp, count) = space.components();
        if count != 1 {
            changed = true;
        }
        let mut local_v = vec![usize::MAX; space.num_vertices()];
        let mut local_e = vec![usize::MAX; space.num_edges()];
        let mut new_ids = Vec::new();
        for c in 0..count {
            let vmask: Vec<bool> = comp.iter().map(|&cc| cc == c).collect();
            let emask: Vec<bool> = space.edges.iter().map(|&(a, _)| comp[a] == c).collect();
            let (piece, vm, em) = extract_space(space, &vmask, &emask);
            let id = gog.vertex_spaces.len();
            gog.vertex_spaces.push(piece);
            new_ids.push(id);
            for (v, m) in vm.iter().enumerate() {
                if let Some(nv) = m {
                    local_v[v] = *nv;
                }
            }
            for (e, m) in em.iter().enumerate() {
                if let Some(ne) = m {
                    local_e[e] = *ne;
                }
            }
        }
        vertex_descendants[i] = new_ids;
        vcomp_of.push(comp);
        vloc.push(local_v);
        eloc.push(local_e);
    }
    let mut edge_descendants = vec![Vec::new(); x.num_underlying_edges()];
    for (j, ge) in x.edges.iter().enumerate() {
        let (comp, count) = ge.space.components();
        if count != 1 {
            changed = true;
        }
        for c in 0..count {
            let vmask: Vec<bool> = comp.iter().map(|&cc| cc == c).collect();
            let emask: Vec<bool> = ge.space.edges.iter().map(|&(a, _)| comp[a] == c).collect();
            let (piece, vm, em) = extract_space(&ge.space, &vmask, &emask);
            let rep = vmask.iter().position(|&m| m).unwrap();
            let mut ends = [0usize; 2];
            let mut attach = Vec::new();
            for end in 0..2 {
                let old_end = ge.ends[end];
                let target_comp = vcomp_of[old_end][ge.attach[end].vmap[rep]];
                ends[end] = vertex_descendants[old_end][target_comp];
                let mut a = Attach { vmap: Vec::new(), emap: Vec::new() };
                for (v, m) in vm.iter().enumerate() {
                    if m.is_some() {
                        a.vmap.push(vloc[old_end][ge.attach[end].vmap[v]]);
                    }
                }
                for (e, m) in em.iter().enumerate() {
                    if m.is_some() {
                        let (t, r) = ge.attach[end].emap[e];
                        a.emap.push((eloc[old_end][t], r));
                    }
                }
                let _ = piece.num_vertices();
                attach.push(a);
            }
            let id = gog.edges.len();
            gog.edges.push(GogEdge {
                ends,
                space: piece,
                attach: [attach.remove(0), attach.remove(0)],
            });
            edge_descendants[j].push(id);
        }
    }
    debug_assert!(gog.validate().is_ok());
    SplitResult {
        gog,
        vertex_descendants,
        edge_descendants,
        changed,
    }
}

// ---------------------------------------------------------------------------
// M2: removing unnecessary vertices

/// One application at the lowest eligible vertex, or None.
fn m2_step(x: &GraphOfGraphs) -> Option<GraphOfGraphs> {
    for v in 0..x.num_underlying_vertices() {
        let ends = x.incident_ends(v);
        let space = &x.vertex_spaces[v];
        if ends.len() == 1 {
            let (j, k) = ends[0];
            if x.edges[j].ends[0] != x.edges[j].ends[1]
                && is_iso_onto(&x.edges[j].attach[k], space)
            {
                return Some(remove_underlying(x, &[v], &[j], Vec::new()));
            }
        }
        if ends.len() == 2 {
            let (j1, k1) = ends[0];
            let (j2, k2) = ends[1];
            if j1 != j2
                && is_iso_onto(&x.edges[j1].attach[k1], space)
                && is_iso_onto(&x.edges[j2].attach[k2], space)
            {
                let e1 = &x.edges[j1];
                let e2 = &x.edges[j2];
                let psi_inv = invert_attach(
                    &e2.attach[k2],
                    space.num_vertices(),
                    space.num_edges(),
                );
                let through = compose_attach(&e1.attach[k1], &psi_inv);
                let far = compose_attach(&through, &e2.attach[1 - k2]);
                let fused = GogEdge {
                    ends: [e1.ends[1 - k1], e2.ends[1 - k2]],
                    space: e1.space.clone(),
                    attach: [e1.attach[1 - k1].clone(), far],
                };
                return Some(remove_underlying(x, &[v], &[j1, j2], vec![fused]));
            }
        }
    }
    None
}

pub fn m2_remove_unnecessary(x: &GraphOfGraphs) -> (GraphOfGraphs, bool) {
    let mut cur = x.clone();
    let mut changed = false;
    while let Some(next) = m2_step(&cur) {
        cur = next;
        changed = true;
    }
    (cur, changed)
}

/// Rebuilds the graph of graphs with the given underlying vertices and
/// edges removed and extra edges (with old vertex ids) appended.
fn remove_underlying(
    x: &GraphOfGraphs,
    drop_vertices: &[usize],
    drop_edges: &[usize],
    add_edges: Vec<GogEdge>,
) -> GraphOfGraphs {
    let mut vmap = vec![usize::MAX; x.num_underlying_vertices()];
    let mut gog = GraphOfGraphs::default();
    for v in 0..x.num_underlying_vertices() {
        if !drop_vertices.contains(&v) {
            vmap[v] = gog.vertex_spaces.len();
            gog.vertex_spaces.push(x.vertex_spaces[v].clone());
        }
    }
    for (j, e) in x.edges.iter().enumerate() {
        if !drop_edges.contains(&j) {
            let mut e = e.clone();
            e.ends = [vmap[e.ends[0]], vmap[e.ends[1]]];
            gog.edges.push(e);
        }
    }
    for mut e in add_edges {
        e.ends = [vmap[e.ends[0]], vmap[e.ends[1]]];
        gog.edges.push(e);
    }
    gog
}

// ---------------------------------------------------------------------------
// M3 / M4: isolated and free edges

/// For each vertex space edge, the list of covering (edge, end, space edge).
fn edge_coverage(x: &GraphOfGraphs) -> Vec<Vec<Vec<(usize, usize, usize)>>> {
    let mut cov: Vec<Vec<Vec<(usize, usize, usize)>>> = x
        .vertex_spaces
        .iter()
        .map(|s| vec![Vec::new(); s.num_edges()])
        .collect();
    for (j, ge) in x.edges.iter().enumerate() {
        for end in 0..2 {
            for (f, &(e, _)) in ge.attach[end].emap.iter().enumerate() {
                cov[ge.ends[end]][e].push((j, end, f));
            }
        }
    }
    cov
}

fn remove_vertex_space_edges(
    x: &GraphOfGraphs,
    space_idx: usize,
    remove: &[bool],
) -> GraphOfGraphs {
    let mut gog = x.clone();
    let space = &mut gog.vertex_spaces[space_idx];
    let mut emap = vec![usize::MAX; space.num_edges()];
    let mut new_edges = Vec::new();
    for (e, &(a, b)) in space.edges.iter().enumerate() {
        if !remove[e] {
            emap[e] = new_edges.len();
            new_edges.push((a, b));
        }
    }
    space.edges = new_edges;
    for ge in &mut gog.edges {
        for end in 0..2 {
            if ge.ends[end] == space_idx {
                for t in &mut ge.attach[end].emap {
                    t.0 = emap[t.0];
                }
            }
        }
    }
    gog
}

pub fn m3_remove_isolated(x: &GraphOfGraphs) -> (GraphOfGraphs, bool) {
    let cov = edge_coverage(x);
    let mut cur = x.clone();
    let mut changed = false;
    // process spaces independently; coverage is unaffected by removals
    for i in (0..x.vertex_spaces.len()).rev() {
        let remove: Vec<bool> = cov[i].iter().map(|c| c.is_empty()).collect();
        if remove.iter().any(|&r| r) {
            cur = remove_vertex_space_edges(&cur, i, &remove);
            changed = true;
        }
    }
    (cur, changed)
}

/// Removes a single space edge from an edge space, shifting attachments.
fn remove_edge_space_edge(x: &GraphOfGraphs, edge_idx: usize, f: usize) -> GraphOfGraphs {
    let mut gog = x.clone();
    let ge = &mut gog.edges[edge_idx];
    ge.space.edges.remove(f);
    ge.attach[0].emap.remove(f);
    ge.attach[1].emap.remove(f);
    gog
}

fn m4_step(x: &GraphOfGraphs) -> Option<GraphOfGraphs> {
    let cov = edge_coverage(x);
    for (i, per_edge) in cov.iter().enumerate() {
        for (e, covering) in per_edge.iter().enumerate() {
            if covering.len() == 1 {
                let (j, _, f) = covering[0];
                let without_strip = remove_edge_space_edge(x, j, f);
                let mut remove = vec![false; x.vertex_spaces[i].num_edges()];
                remove[e] = true;
                return Some(remove_vertex_space_edges(&without_strip, i, &remove));
            }
        }
    }
    // point vertex space with a single incident edge space
    for v in 0..x.num_underlying_vertices() {
        let space = &x.vertex_spaces[v];
        if space.num_vertices() == 1 && space.num_edges() == 0 {
            let ends = x.incident_ends(v);
            if ends.len() == 1 {
                let (j, _) = ends[0];
                if x.edges[j].ends[0] != x.edges[j].ends[1] {
                    return Some(remove_underlying(x, &[v], &[j], Vec::new()));
                }
            }
        }
    }
    None
}

pub fn m4_collapse_free(x: &GraphOfGraphs) -> (GraphOfGraphs, bool) {
    let mut cur = x.clone();
    let mut changed = false;
    while let Some(next) = m4_step(&cur) {
        cur = next;
        changed = true;
    }
    (cur, changed)
}

/// True iff none of (M1)–(M4) changes the graph of graphs.
pub fn is_reduced(x: &GraphOfGraphs) -> bool {
    if m1_split_components(x).changed {
        return false;
    }
    if m2_step(x).is_some() || m4_step(x).is_some() {
        return false;
    }
    let cov = edge_coverage(x);
    !cov.iter().any(|per| per.iter().any(|c| c.is_empty()))
}

// ---------------------------------------------------------------------------
// partition certificate and M5/M6/M7

/// A partition of the incident edge ends at `v` into two classes, each
/// containing two ends whose attachment images intersect. Indices refer to
/// `x.incident_ends(v)`.
pub fn find_partition(
    x: &GraphOfGraphs,
    v: usize,
) -> Result<(Vec<usize>, Vec<usize>), GogError> {
    let ends = x.incident_ends(v);
    let n = ends.len();
    if n <= 3 {
        return Err(GogError::NoPartition(v));
    }
    let images: Vec<(Vec<bool>, Vec<bool>)> = ends
        .iter()
        .map(|&(j, k)| x.attachment_image(j, k))
        .collect();
    let meets = |a: usize, b: usize| -> bool {
        images[a]
            .0
            .iter()
            .zip(&images[b].0)
            .any(|(&x, &y)| x && y)
    };
    for a in 0..n {
        for b in a + 1..n {
            if !meets(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in c + 1..n {
                    if d == a || d == b {
                        continue;
                    }
                    if meets(c, d) {
                        let class1 = vec![a, b];
                        let class2: Vec<usize> =
                            (0..n).filter(|i| *i != a && *i != b).collect();
                        return Ok((class1, class2));
                    }
                }
            }
        }
    }
    Err(GogError::NoPartition(v))
}

fn union_images(
    x: &GraphOfGraphs,
    v: usize,
    ends: &[(usize, usize)],
    class: &[usize],
) -> (Vec<bool>, Vec<bool>) {
    let space = &x.vertex_spaces[v];
    let mut vmask = vec![false; space.num_vertices()];
    let mut emask = vec![false; space.num_edges()];
    for &i in class {
        let (vm, em) = x.attachment_image(ends[i].0, ends[i].1);
        for (t, m) in vmask.iter_mut().zip(&vm) {
            *t |= m;
        }
        for (t, m) in emask.iter_mut().zip(&em) {
            *t |= m;
        }
    }
    (vmask, emask)
}

/// (M5): splits the vertex space at `v` along the partition, introducing a
/// new underlying edge carrying the intersection of the two sides.
pub fn m5_split_vertex(
    x: &GraphOfGraphs,
    v: usize,
    partition: &(Vec<usize>, Vec<usize>),
) -> Result<GraphOfGraphs, GogError> {
    let ends = x.incident_ends(v);
    let (vm1, em1) = union_images(x, v, &ends, &partition.0);
    let (vm2, em2) = union_images(x, v, &ends, &partition.1);
    let inter_v: Vec<bool> = vm1.iter().zip(&vm2).map(|(&a, &b)| a && b).collect();
    let inter_e: Vec<bool> = em1.iter().zip(&em2).map(|(&a, &b)| a && b).collect();
    if !inter_v.iter().any(|&m| m) {
        return Err(GogError::MoveNotApplicable(format!(
            "(M5) at vertex {v}: the two sides do not intersect"
        )));
    }
    let space = &x.vertex_spaces[v];
    let (side1, vmap1, emap1) = extract_space(space, &vm1, &em1);
    let (side2, vmap2, emap2) = extract_space(space, &vm2, &em2);
    let (inter, ivmap, iemap) = extract_space(space, &inter_v, &inter_e);

    let mut gog = x.clone();
    gog.vertex_spaces[v] = side1;
    let v2 = gog.vertex_spaces.len();
    gog.vertex_spaces.push(side2);

    let reattach = |gog: &mut GraphOfGraphs,
                    class: &[usize],
                    vmap: &[Option<usize>],
                    emap: &[Option<usize>],
                    target: usize| {
        for &i in class {
            let (j, k) = ends[i];
            let a = &mut gog.edges[j];
            a.ends[k] = target;
            let at = &mut a.attach[k];
            for t in &mut at.vmap {
                *t = vmap[*t].unwrap();
            }
            for t in &mut at.emap {
                t.0 = emap[t.0].unwrap();
            }
        }
    };
    reattach(&mut gog, &partition.0, &vmap1, &emap1, v);
    reattach(&mut gog, &partition.1, &vmap2, &emap2, v2);

    // the new edge carries the intersection, attached by inclusions
    let mut a0 = Attach { vmap: Vec::new(), emap: Vec::new() };
    let mut a1 = Attach { vmap: Vec::new(), emap: Vec::new() };
    for (w, m) in ivmap.iter().enumerate() {
        if m.is_some() {
            a0.vmap.push(vmap1[w].unwrap());
            a1.vmap.push(vmap2[w].unwrap());
        }
    }
    for (e, m) in iemap.iter().enumerate() {
        if m.is_some() {
            a0.emap.push((emap1[e].unwrap(), false));
            a1.emap.push((emap2[e].unwrap(), false));
        }
    }
    gog.edges.push(GogEdge {
        ends: [v, v2],
        space: inter,
        attach: [a0, a1],
    });
    gog.validate()?;
    Ok(gog)
}

/// Outcome of a blowup (M6 = M5, then M1 on the pieces, then M2).
pub struct Blowup {
    pub gog: GraphOfGraphs,
    pub balance: BlowupBalance,
}

pub fn m6_blowup(
    x: &GraphOfGraphs,
    v: usize,
    partition: &(Vec<usize>, Vec<usize>),
) -> Result<Blowup, GogError> {
    let old_valence = x.incident_ends(v).len();
    let after_m5 = m5_split_vertex(x, v, partition)?;
    let new_edge = after_m5.num_underlying_edges() - 1;
    let v2 = after_m5.num_underlying_vertices() - 1;
    let split = m1_split_components(&after_m5);
    // the glued subgraph B: vertices introduced at v and v2, edges from the
    // components of the intersection space
    let mut b_vertices: Vec<usize> = split.vertex_descendants[v].clone();
    b_vertices.extend(&split.vertex_descendants[v2]);
    let b_edges: Vec<usize> = split.edge_descendants[new_edge].clone();
    let valences = split.gog.underlying_valences();
    let new_valences: Vec<usize> = b_vertices.iter().map(|&w| valences[w]).collect();
    // tree check on B
    let glued_is_tree = {
        let nv = b_vertices.len();
        let ne = b_edges.len();
        let index_of = |w: usize| b_vertices.iter().position(|&u| u == w).unwrap();
        let mut uf = crate::graph::UnionFind::new(nv);
        let mut merges = 0;
        for &e in &b_edges {
            let ge = &split.gog.edges[e];
            if uf.union(index_of(ge.ends[0]), index_of(ge.ends[1])) {
                merges += 1;
            }
        }
        merges + 1 == nv && ne == nv - 1
    };
    let balance = BlowupBalance {
        old_valence,
        new_valences,
        glued_edge_count: b_edges.len(),
        glued_is_tree,
    };
    let (gog, _) = m2_remove_unnecessary(&split.gog);
    Ok(Blowup { gog, balance })
}

/// (M7): removes underlying edge `e`, identifies its endpoints, and glues
/// the vertex space(s) along the edge space. Requires the two attachment
/// images to be disjoint.
pub fn m7_blowdown(x: &GraphOfGraphs, e: usize) -> Result<GraphOfGraphs, GogError> {
    let ge = x.edges[e].clone();
    let [v0, v1] = ge.ends;
    if v0 == v1 {
        let (vm0, em0) = x.attachment_image(e, 0);
        let (vm1, em1) = x.attachment_image(e, 1);
        if vm0.iter().zip(&vm1).any(|(&a, &b)| a && b)
            || em0.iter().zip(&em1).any(|(&a, &b)| a && b)
        {
            return Err(GogError::BlowdownImagesIntersect(e));
        }
    }
    let s0 = &x.vertex_spaces[v0];
    let s1 = &x.vertex_spaces[v1];
    let (voff, eoff, total_v, total_e) = if v0 == v1 {
        (0, 0, s0.num_vertices(), s0.num_edges())
    } else {
        (
            s0.num_vertices(),
            s0.num_edges(),
            s0.num_vertices() + s1.num_vertices(),
            s0.num_edges() + s1.num_edges(),
        )
    };
    // vertex identification
    let mut vuf = crate::graph::UnionFind::new(total_v);
    for (w, &a) in ge.attach[0].vmap.iter().enumerate() {
        vuf.union(a, voff + ge.attach[1].vmap[w]);
    }
    // edge identification with relative orientation
    let mut eparent: Vec<usize> = (0..total_e).collect();
    let mut eparity = vec![false; total_e];
    fn efind(parent: &mut Vec<usize>, parity: &mut Vec<bool>, x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (r, p) = efind(parent, parity, parent[x]);
        let np = parity[x] ^ p;
        parent[x] = r;
        parity[x] = np;
        (r, np)
    }
    for (f, &(e0, r0)) in ge.attach[0].emap.iter().enumerate() {
        let (e1, r1) = ge.attach[1].emap[f];
        let a = e0;
        let b = eoff + e1;
        let want = r0 ^ r1;
        let (ra, pa) = efind(&mut eparent, &mut eparity, a);
        let (rb, pb) = efind(&mut eparent, &mut eparity, b);
        if ra != rb {
            // keep the lower root as representative
            let (keep, merge, par) = if ra < rb { (ra, rb, pa ^ pb ^ want) } else { (rb, ra, pa ^ pb ^ want) };
            eparent[merge] = keep;
            eparity[merge] = par;
        }
    }
    // build merged space
    let old_side = |ci: usize| -> Option<u32> {
        if ci < s0.num_vertices() {
            s0.sides[ci]
        } else {
            s1.sides[ci - voff]
        }
    };
    let old_edge = |ci: usize| -> (usize, usize) {
        if v0 != v1 && ci >= eoff {
            let (a, b) = s1.edges[ci - eoff];
            (a + voff, b + voff)
        } else {
            s0.edges[ci]
        }
    };
    let mut new_of_vclass = vec![usize::MAX; total_v];
    let mut merged = Space::default();
    let mut vnew = vec![usize::MAX; total_v];
    for w in 0..total_v {
        let r = vuf.find(w);
        if new_of_vclass[r] == usize::MAX {
            new_of_vclass[r] = merged.add_vertex(old_side(r));
        }
        vnew[w] = new_of_vclass[r];
        // merged side tags: drop to None on disagreement
        if old_side(w) != merged.sides[vnew[w]] {
            merged.sides[vnew[w]] = None;
        }
    }
    let mut enew = vec![(usize::MAX, false); total_e];
    let mut new_of_eclass = vec![usize::MAX; total_e];
    for f in 0..total_e {
        let (r, p) = efind(&mut eparent, &mut eparity, f);
        if new_of_eclass[r] == usize::MAX {
            let (a, b) = old_edge(r);
            new_of_eclass[r] = merged.add_edge(vnew[a], vnew[b]);
        }
        enew[f] = (new_of_eclass[r], p);
    }
    // consistency of identified endpoints (guaranteed by the morphism
    // property of the attachments)
    for f in 0..total_e {
        let (a, b) = old_edge(f);
        let (ne, p) = enew[f];
        let (s, t) = merged.edges[ne];
        let (s, t) = if p { (t, s) } else { (s, t) };
        debug_assert_eq!((vnew[a], vnew[b]), (s, t));
    }

    // reassemble: drop edge e, replace v0 (and v1) by the merged space
    let keep = v0.min(v1);
    let drop_v: Vec<usize> = if v0 == v1 { vec![] } else { vec![v0.max(v1)] };
    let mut gog = GraphOfGraphs::default();
    let mut vmap = vec![usize::MAX; x.num_underlying_vertices()];
    for v in 0..x.num_underlying_vertices() {
        if drop_v.contains(&v) {
            continue;
        }
        vmap[v] = gog.vertex_spaces.len();
        if v == keep {
            gog.vertex_spaces.push(merged.clone());
        } else {
            gog.vertex_spaces.push(x.vertex_spaces[v].clone());
        }
    }
    if v0 != v1 {
        vmap[v0.max(v1)] = vmap[keep];
    }
    let translate = |end_vertex: usize, at: &Attach| -> Attach {
        // compose an attachment into v0/v1 with the quotient onto `merged`
        let off_v = if v0 != v1 && end_vertex == v1 { voff } else { 0 };
        let off_e = if v0 != v1 && end_vertex == v1 { eoff } else { 0 };
        Attach {
            vmap: at.vmap.iter().map(|&w| vnew[w + off_v]).collect(),
            emap: at
                .emap
                .iter()
                .map(|&(f, r)| {
                    let (ne, p) = enew[f + off_e];
                    (ne, r ^ p)
                })
                .collect(),
        }
    };
    for (j, old) in x.edges.iter().enumerate() {
        if j == e {
            continue;
        }
        let mut ne = old.clone();
        for end in 0..2 {
            if old.ends[end] == v0 || old.ends[end] == v1 {
                ne.attach[end] = translate(old.ends[end], &old.attach[end]);
            }
            ne.ends[end] = vmap[old.ends[end]];
        }
        gog.edges.push(ne);
    }
    gog.validate().map_err(|err| match err {
        GogError::AttachmentNotEmbedding { edge, .. } => GogError::BlowdownBreaksEmbedding {
            edge: e,
            other: edge,
        },
        other => other,
    })?;
    Ok(gog)
}

// ---------------------------------------------------------------------------
// normalization and the reduction driver

pub struct ReduceOutcome {
    pub result: GraphOfGraphs,
    /// move records with the state after each move
    pub steps: Vec<(MoveRecord, GraphOfGraphs)>,
}

fn record(
    steps: &mut Vec<(MoveRecord, GraphOfGraphs)>,
    move_id: MoveId,
    target: String,
    before: Complexity,
    after_gog: &GraphOfGraphs,
    balance: Option<BlowupBalance>,
) {
    steps.push((
        MoveRecord {
            move_id,
            target,
            before,
            after: complexity(after_gog),
            balance,
        },
        after_gog.clone(),
    ));
}

/// Greedy (M4)* → (M3)* → (M1) → (M2)* to a fixpoint.
pub fn normalize(
    x: &GraphOfGraphs,
    steps: &mut Vec<(MoveRecord, GraphOfGraphs)>,
) -> GraphOfGraphs {
    let mut cur = x.clone();
    loop {
        let mut changed = false;
        let before = complexity(&cur);
        let (next, c) = m4_collapse_free(&cur);
        if c {
            record(steps, MoveId::M4, "free-edges".into(), before, &next, None);
            cur = next;
            changed = true;
        }
        let before = complexity(&cur);
        let (next, c) = m3_remove_isolated(&cur);
        if c {
            record(steps, MoveId::M3, "isolated-edges".into(), before, &next, None);
            cur = next;
            changed = true;
        }
        let before = complexity(&cur);
        let split = m1_split_components(&cur);
        if split.changed {
            record(steps, MoveId::M1, "components".into(), before, &split.gog, None);
            cur = split.gog;
            changed = true;
        }
        let before = complexity(&cur);
        let (next, c) = m2_remove_unnecessary(&cur);
        if c {
            record(steps, MoveId::M2, "valence-2".into(), before, &next, None);
            cur = next;
            changed = true;
        }
        if !changed {
            return cur;
        }
    }
}

/// Rejects (or strips, on request) tree components of the mid-graph; the
/// reduction procedure assumes none exist.
fn check_tree_mids(x: &GraphOfGraphs, strip: bool) -> Result<(), GogError> {
    if strip {
        return Ok(());
    }
    let gm = x.mid_graph();
    for (comp, orig) in gm.graph.components() {
        if comp.first_betti() == 0 {
            let (vertex, edge) = gm.vertex_origin[orig[0]];
            return Err(GogError::TreeMidComponent { vertex, edge });
        }
    }
    Ok(())
}

const MAX_MOVES: usize = 100_000;

/// Reduces to a reduced graph of graphs all of whose underlying vertices
/// have valence ≤ 3, blowing up a lowest-id maximal-valence vertex at each
/// step. The complexity strictly decreases at every blowup.
pub fn reduce_to_valence_three(
    x: &GraphOfGraphs,
    strip_tree_mids: bool,
) -> Result<ReduceOutcome, GogError> {
    x.validate()?;
    check_tree_mids(x, strip_tree_mids)?;
    let mut steps = Vec::new();
    let mut cur = normalize(x, &mut steps);
    let mut blowups = 0;
    loop {
        if steps.len() > MAX_MOVES {
            return Err(GogError::ReductionDiverged(MAX_MOVES));
        }
        let val = cur.underlying_valences();
        let max = val.iter().copied().max().unwrap_or(0);
        if max <= 3 {
            break;
        }
        let v = val.iter().position(|&u| u == max).unwrap();
        let partition = find_partition(&cur, v)?;
        let before = complexity(&cur);
        let blow = m6_blowup(&cur, v, &partition)?;
        record(
            &mut steps,
            MoveId::M6,
            format!("v{v}"),
            before,
            &blow.gog,
            Some(blow.balance),
        );
        cur = blow.gog;
        // blowups of a normalized instance stay normalized; renormalize
        // defensively so the loop invariant is explicit
        cur = normalize(&cur, &mut steps);
        blowups += 1;
        if blowups > MAX_MOVES {
            return Err(GogError::ReductionDiverged(MAX_MOVES));
        }
    }
    debug_assert!(is_reduced(&cur));
    Ok(ReduceOutcome { result: cur, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gog::{betti_multiset, build_representing};
    use crate::word::Word;

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    fn example() -> GraphOfGraphs {
        build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, words(&["b"]))],
            3,
        )
        .unwrap()
        .gog
    }

    #[test]
    fn complexity_of_rose_underlying() {
        let x = example();
        // underlying graph: one vertex, three loops
        assert_eq!(
            complexity(&x),
            Complexity { chi: -2, max_valence: 6, num_max: 1 }
        );
    }

    #[test]
    fn complexity_is_lexicographic() {
        let a = Complexity { chi: -2, max_valence: 3, num_max: 4 };
        let b = Complexity { chi: -2, max_valence: 4, num_max: 1 };
        assert!(a < b);
    }

    #[test]
    fn m1_noop_on_connected() {
        let x = example();
        let split = m1_split_components(&x);
        assert!(!split.changed || x.vertex_spaces.iter().any(|s| !s.is_connected()));
    }

    #[test]
    fn normalize_preserves_derived_betti() {
        let x = example();
        let gh_before = betti_multiset(&x.horizontal_graph().graph);
        let gm_before = betti_multiset(&x.mid_graph().graph);
        let mut steps = Vec::new();
        let y = normalize(&x, &mut steps);
        assert_eq!(betti_multiset(&y.horizontal_graph().graph), gh_before);
        assert_eq!(betti_multiset(&y.mid_graph().graph), gm_before);
        assert!(is_reduced(&y));
    }

    #[test]
    fn reduce_terminates_at_valence_three() {
        let x = example();
        let out = reduce_to_valence_three(&x, false).unwrap();
        let val = out.result.underlying_valences();
        assert!(val.iter().all(|&v| v <= 3), "valences {val:?}");
        assert!(is_reduced(&out.result));
        for (rec, _) in &out.steps {
            if rec.move_id == MoveId::M6 {
                assert!(rec.after < rec.before, "blowup did not decrease: {rec}");
            }
        }
    }

    #[test]
    fn tree_mid_component_rejected() {
        // a trivial edge group yields a point component of Γ_M
        let built = build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, vec![])],
            3,
        )
        .unwrap();
        let err = reduce_to_valence_three(&built.gog, false);
        assert!(matches!(err, Err(GogError::TreeMidComponent { .. })));
        // stripping proceeds
        assert!(reduce_to_valence_three(&built.gog, true).is_ok());
    }

    #[test]
    fn blowup_blowdown_roundtrip_restores_betti() {
        let x = example();
        let mut steps = Vec::new();
        let y = normalize(&x, &mut steps);
        let val = y.underlying_valences();
        let max = val.iter().copied().max().unwrap();
        assert!(max > 3);
        let v = val.iter().position(|&u| u == max).unwrap();
        let partition = find_partition(&y, v).unwrap();
        let z = m5_split_vertex(&y, v, &partition).unwrap();
        let new_edge = z.num_underlying_edges() - 1;
        let back = m7_blowdown(&z, new_edge).unwrap();
        assert_eq!(
            betti_multiset(&back.horizontal_graph().graph),
            betti_multiset(&y.horizontal_graph().graph)
        );
        assert_eq!(
            betti_multiset(&back.mid_graph().graph),
            betti_multiset(&y.mid_graph().graph)
        );
        assert_eq!(back.total_space_euler(), y.total_space_euler());
    }

    #[test]
    fn blowdown_requires_disjoint_images() {
        let x = example();
        // the rose loops attach both ends onto overlapping images; expect a
        // precondition violation for a loop whose images share a vertex
        let mut found = false;
        for e in 0..x.num_underlying_edges() {
            if x.edges[e].ends[0] == x.edges[e].ends[1] {
                let (vm0, _) = x.attachment_image(e, 0);
                let (vm1, _) = x.attachment_image(e, 1);
                if vm0.iter().zip(&vm1).any(|(&a, &b)| a && b) {
                    assert!(matches!(
                        m7_blowdown(&x, e),
                        Err(GogError::BlowdownImagesIntersect(_))
                    ));
                    found = true;
                }
            }
        }
        assert!(found, "expected at least one overlapping loop");
    }

    #[test]
    fn find_partition_requires_valence_above_three() {
        let x = example();
        let mut steps = Vec::new();
        let y = normalize(&x, &mut steps);
        let out = reduce_to_valence_three(&x, false).unwrap();
        for v in 0..out.result.num_underlying_vertices() {
            assert!(matches!(
                find_partition(&out.result, v),
                Err(GogError::NoPartition(_))
            ));
        }
        // on the normalized instance the rose vertex has valence 6
        let val = y.underlying_valences();
        let v = val.iter().position(|&u| u > 3).unwrap();
        let (c1, c2) = find_partition(&y, v).unwrap();
        assert_eq!(c1.len(), 2);
        assert_eq!(c1.len() + c2.len(), val[v]);
    }

    #[test]
    fn eq1_balance_on_tree_blowups() {
        let x = example();
        let out = reduce_to_valence_three(&x, false).unwrap();
        for (rec, _) in &out.steps {
            if let Some(b) = &rec.balance {
                if b.glued_is_tree {
                    let (lhs, rhs) = b.sides();
                    assert_eq!(lhs, rhs, "balance violated: {rec}");
                }
            }
        }
    }
}
