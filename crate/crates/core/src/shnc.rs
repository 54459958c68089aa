//! Triple-intersection statistics on reduced valence-three instances, the
//! Euler-characteristic identity, the intersection inequality sweep, bigon
//! resolution, and the rank experiment for pairs of rank-two subgroups.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GogError;
use crate::gog::{build_representing, GraphOfGraphs};
use crate::graph::{LabeledGraph, UnionFind};
use crate::morphism::{lift, GraphMorphism};
use crate::pullback::{all_core_components, intersection_subgroup, pullback_product};
use crate::reduction::{is_reduced, reduce_to_valence_three};
use crate::word::{Letter, Word};

// ---------------------------------------------------------------------------
// Δ statistics and the identity

/// Data extracted from a reduced, simple-edged, valence-three instance with
/// two-sided vertex spaces: per-side Euler characteristics of the horizontal
/// graph, the Euler characteristic of the mid-graph, and the per-side vertex
/// counts and edge count of the triple intersections Δᵢ at the underlying
/// vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaStatistics {
    pub chi_h: [i64; 2],
    pub chi_m: i64,
    pub sigma: [i64; 2],
    pub mu: i64,
}

impl DeltaStatistics {
    /// 4·(χ(Γ_{H₁})·χ(Γ_{H₂}) + χ(Γ_M)), the left side of the identity.
    pub fn lhs_times_4(&self) -> i64 {
        4 * self.chi_h[0] * self.chi_h[1] + 4 * self.chi_m
    }

    /// |Σ₁|·|Σ₂| − 2μ, the right side of the identity (also times 4).
    pub fn rhs_times_4(&self) -> i64 {
        self.sigma[0] * self.sigma[1] - 2 * self.mu
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub stats: DeltaStatistics,
    pub lhs_times_4: i64,
    pub rhs_times_4: i64,
    pub holds: bool,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chi_h=({},{}) chi_m={} sigma=({},{}) mu={} lhs*4={} rhs*4={} {}",
            self.stats.chi_h[0],
            self.stats.chi_h[1],
            self.stats.chi_m,
            self.stats.sigma[0],
            self.stats.sigma[1],
            self.stats.mu,
            self.lhs_times_4,
            self.rhs_times_4,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}

fn hyp(msg: &str) -> GogError {
    GogError::Hypothesis(msg.to_string())
}

/// Computes the Δ statistics, verifying the hypotheses: reduced, every
/// underlying vertex of valence three, simple-edged with no monogons,
/// two-sided vertex spaces with a coherent co-orientation, and horizontal
/// valences in {2, 3}.
pub fn delta_statistics(x: &GraphOfGraphs) -> Result<DeltaStatistics, GogError> {
    x.validate()?;
    if !is_reduced(x) {
        return Err(hyp("instance is not reduced"));
    }
    if x.underlying_valences().iter().any(|&v| v != 3) {
        return Err(hyp("an underlying vertex does not have valence three"));
    }
    if !x.is_simple_edged(true) {
        return Err(hyp("a vertex space has a bigon or monogon"));
    }
    if !x.is_representing() {
        return Err(hyp("no coherent co-orientation"));
    }
    // per-side Euler characteristics of the horizontal graph
    let gh = x.horizontal_graph();
    let mut chi_h = [0i64; 2];
    for s in &gh.side {
        match s {
            Some(t @ (0 | 1)) => chi_h[*t as usize] += 1,
            _ => return Err(hyp("vertex space vertex without a two-sided tag")),
        }
    }
    for e in gh.graph.edges() {
        let s = gh.side[e.src];
        if s != gh.side[e.dst] {
            return Err(hyp("horizontal edge joins the two sides"));
        }
        chi_h[s.unwrap() as usize] -= 1;
    }
    let hval = gh.graph.valences();
    if hval.iter().any(|&v| v != 2 && v != 3) {
        return Err(hyp("a horizontal vertex has valence outside {2,3}"));
    }
    let gm = x.mid_graph();
    let chi_m = gm.graph.euler_characteristic();

    // Δ: triple intersections of incident images at each underlying vertex
    let mut sigma = [0i64; 2];
    let mut mu = 0i64;
    for v in 0..x.num_underlying_vertices() {
        let ends = x.incident_ends(v);
        debug_assert_eq!(ends.len(), 3);
        let space = &x.vertex_spaces[v];
        let mut vmask = vec![true; space.num_vertices()];
        let mut emask = vec![true; space.num_edges()];
        for &(j, k) in &ends {
            let (vm, em) = x.attachment_image(j, k);
            for (t, m) in vmask.iter_mut().zip(&vm) {
                *t &= m;
            }
            for (t, m) in emask.iter_mut().zip(&em) {
                *t &= m;
            }
        }
        for (w, &m) in vmask.iter().enumerate() {
            if m {
                let s = space.sides[w].ok_or_else(|| hyp("Δ vertex without side tag"))?;
                sigma[s as usize] += 1;
            }
        }
        mu += emask.iter().filter(|&&m| m).count() as i64;
    }
    // independent cross-checks from the derived graphs
    let mval3 = gm.graph.valences().iter().filter(|&&d| d == 3).count() as i64;
    debug_assert_eq!(mu, mval3, "Δ edge count vs valence-three mid vertices");
    for s in 0..2 {
        let v3 = hval
            .iter()
            .zip(&gh.side)
            .filter(|(&d, &t)| d == 3 && t == Some(s as u32))
            .count() as i64;
        debug_assert_eq!(sigma[s], v3);
    }
    Ok(DeltaStatistics { chi_h, chi_m, sigma, mu })
}

/// Verifies χ(Γ_{H₁})χ(Γ_{H₂}) + χ(Γ_M) = ¼|Σ₁||Σ₂| − ½μ, computing both
/// sides independently (in quadrupled integer arithmetic).
pub fn check_identity(x: &GraphOfGraphs) -> Result<IdentityReport, GogError> {
    let stats = delta_statistics(x)?;
    let lhs = stats.lhs_times_4();
    let rhs = stats.rhs_times_4();
    Ok(IdentityReport {
        lhs_times_4: lhs,
        rhs_times_4: rhs,
        holds: lhs == rhs,
        stats,
    })
}

// ---------------------------------------------------------------------------
// intersection inequality

/// One inequality check χ(Γ_{H₁})·χ(Γ_{H₂}) + χ(Γ_M) ≥ 0, where Γ_M ranges
/// over the non-tree cores of the fiber product components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InequalityCase {
    pub chi1: i64,
    pub chi2: i64,
    pub component_chis: Vec<i64>,
    pub slack: i64,
    pub holds: bool,
}

impl fmt::Display for InequalityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chi1={} chi2={} components={:?} slack={} {}",
            self.chi1,
            self.chi2,
            self.component_chis,
            self.slack,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}

pub fn inequality_case(
    h1: &LabeledGraph,
    h2: &LabeledGraph,
) -> Result<InequalityCase, GogError> {
    let pb = pullback_product(h1, h2)?;
    let component_chis: Vec<i64> = all_core_components(&pb)
        .iter()
        .map(|(g, _)| g.euler_characteristic())
        .collect();
    let chi1 = h1.euler_characteristic();
    let chi2 = h2.euler_characteristic();
    let slack = chi1 * chi2 + component_chis.iter().sum::<i64>();
    Ok(InequalityCase {
        chi1,
        chi2,
        component_chis,
        slack,
        holds: slack >= 0,
    })
}

// ---------------------------------------------------------------------------
// bigon resolution

/// Resolution of a bigon in a vertex space: the two offending mid-graph
/// vertices p and q are identified and the mid-graph folds to Γ_K carrying
/// immersions ν into both sides of the horizontal graph. All graphs are
/// labeled over the underlying-edge alphabet.
pub struct BigonResolution {
    pub vertex_space: usize,
    pub edge_pair: (usize, usize),
    pub same_component: bool,
    /// folded quotient, based at the image of p
    pub k: LabeledGraph,
    /// component of the mid-graph through p, based at p
    pub m_p: LabeledGraph,
    /// component through q, based at q (the same graph when `same_component`)
    pub m_q: LabeledGraph,
    /// ν per side: Γ_K → Γ_H landing in side 0 resp. side 1
    pub nu: [GraphMorphism; 2],
    /// ⟨K⟩ properly contains ⟨M_p⟩ (resp. ⟨M_q⟩)
    pub proper_over_p: bool,
    pub proper_over_q: bool,
    /// distinct-component case: core(Γ_K) ≅ join(M_p, M_q)
    pub k_matches_join: Option<bool>,
}

pub fn resolve_bigon(x: &GraphOfGraphs) -> Result<BigonResolution, GogError> {
    x.validate()?;
    let Some([m0, m1]) = x.representing_maps() else {
        return Err(hyp("no coherent co-orientation"));
    };
    let Some((i, f, g)) = x.find_bigon() else {
        return Err(hyp("instance is simple-edged: no bigon to resolve"));
    };
    let gh = x.horizontal_graph();
    let gm = x.mid_graph();
    let p = gm.vertex_offset[i] + f;
    let q = gm.vertex_offset[i] + g;

    // endpoints of the bigon must straddle the two sides
    let (a, b) = x.vertex_spaces[i].edges[f];
    let sides = (
        x.vertex_spaces[i].sides[a],
        x.vertex_spaces[i].sides[b],
    );
    match sides {
        (Some(s), Some(t)) if s != t => {}
        _ => return Err(hyp("bigon endpoints are not two-sided")),
    }

    // locate the components of p and q
    let comps = gm.graph.components();
    let locate = |v: usize| -> (usize, usize) {
        for (c, (_, orig)) in comps.iter().enumerate() {
            if let Some(local) = orig.iter().position(|&o| o == v) {
                return (c, local);
            }
        }
        unreachable!("vertex belongs to some component")
    };
    let (cp, p_local) = locate(p);
    let (cq, q_local) = locate(q);
    let same_component = cp == cq;

    // per component, the side map landing in side 0 (and the one in side 1)
    let side_of = |map: &GraphMorphism, rep: usize| -> Result<u32, GogError> {
        gh.side[map.vertex_map[rep]].ok_or_else(|| hyp("side tag missing in horizontal graph"))
    };
    let chooser = |comp_orig: &[usize]| -> Result<[&GraphMorphism; 2], GogError> {
        let rep = comp_orig[0];
        let s0 = side_of(&m0, rep)?;
        let s1 = side_of(&m1, rep)?;
        if s0 == s1 {
            return Err(hyp("both side maps land on the same side"));
        }
        Ok(if s0 == 0 { [&m0, &m1] } else { [&m1, &m0] })
    };

    // the union graph U with global mid-graph provenance
    let rank = gm.graph.rank();
    let (mut u_graph, u_orig, p_u, q_u) = if same_component {
        let (cg, orig) = &comps[cp];
        (cg.clone(), orig.clone(), p_local, q_local)
    } else {
        let (cg1, orig1) = &comps[cp];
        let (cg2, orig2) = &comps[cq];
        let u = crate::gog::disjoint_union(&[cg1.clone(), cg2.clone()], rank);
        let mut orig = orig1.clone();
        orig.extend(orig2);
        (u, orig, p_local, cg1.num_vertices() + q_local)
    };
    u_graph.set_basepoint(Some(p_u));

    // identify p and q, then fold
    let mut vuf = UnionFind::new(u_graph.num_vertices());
    vuf.union(p_u, q_u);
    let mut euf = UnionFind::new(u_graph.num_edges());
    let (quot, qm) = u_graph.quotient(&mut vuf, &mut euf);
    let (k, fm) = quot.fold();
    let pi = qm.compose(&fm);

    // edge provenance of U back into the global mid-graph
    let u_edge_orig: Vec<usize> = {
        // components() preserves edge order within a component; recover by
        // matching edges through the vertex provenance
        let mut used = vec![false; gm.graph.num_edges()];
        u_graph
            .edges()
            .iter()
            .map(|e| {
                let (src, dst) = (u_orig[e.src], u_orig[e.dst]);
                let idx = gm
                    .graph
                    .edges()
                    .iter()
                    .enumerate()
                    .position(|(ge, h)| {
                        !used[ge] && h.src == src && h.dst == dst && h.label == e.label
                    })
                    .expect("component edge exists in the mid-graph");
                used[idx] = true;
                idx
            })
            .collect()
    };

    // induced maps ν: Γ_K → Γ_H, one per side
    let mut nu = Vec::new();
    for side in 0..2 {
        let mut vertex_map = vec![usize::MAX; k.num_vertices()];
        for (u, &kv) in pi.vertex_map.iter().enumerate() {
            let maps = chooser(if same_component || u < comps[cp].0.num_vertices() {
                &comps[cp].1
            } else {
                &comps[cq].1
            })?;
            let target = maps[side].vertex_map[u_orig[u]];
            if vertex_map[kv] == usize::MAX {
                vertex_map[kv] = target;
            } else if vertex_map[kv] != target {
                return Err(GogError::Malformed(
                    "folded vertices with distinct side images".into(),
                ));
            }
        }
        let mut edge_map = vec![usize::MAX; k.num_edges()];
        for (ue, &ke) in pi.edge_map.iter().enumerate() {
            let u_src = u_graph.edges()[ue].src;
            let maps = chooser(if same_component || u_src < comps[cp].0.num_vertices() {
                &comps[cp].1
            } else {
                &comps[cq].1
            })?;
            let target = maps[side].edge_map[u_edge_orig[ue]];
            if edge_map[ke] == usize::MAX {
                edge_map[ke] = target;
            } else if edge_map[ke] != target {
                return Err(GogError::Malformed(
                    "folded edges with distinct side images".into(),
                ));
            }
        }
        let m = GraphMorphism { vertex_map, edge_map };
        debug_assert!(m.is_valid(&k, &gh.graph));
        nu.push(m);
    }

    // based component graphs
    let mut m_p = comps[cp].0.clone();
    m_p.set_basepoint(Some(p_local));
    let mut m_q = comps[cq].0.clone();
    m_q.set_basepoint(Some(q_local));

    // ⟨M⟩ ≤ ⟨K⟩ holds by construction; properness = the reverse lift fails
    debug_assert!(lift(&m_p, &k).is_ok());
    let proper_over_p = lift(&k, &m_p).is_err();
    let proper_over_q = if same_component {
        proper_over_p
    } else {
        debug_assert!({
            let mut kq = k.clone();
            kq.set_basepoint(Some(pi.vertex_map[q_u]));
            lift(&m_q, &kq).is_ok()
        });
        lift(&k, &m_q).is_err()
    };

    let k_matches_join = if same_component {
        None
    } else {
        let join = m_p.join(&m_q)?;
        let (kc, _) = k.core(k.basepoint());
        Some(kc.is_isomorphic(&join))
    };

    Ok(BigonResolution {
        vertex_space: i,
        edge_pair: (f, g),
        same_component,
        k,
        m_p,
        m_q,
        nu: [nu.remove(0), nu.remove(0)],
        proper_over_p,
        proper_over_q,
        k_matches_join,
    })
}

// ---------------------------------------------------------------------------
// random generation

/// A nonempty freely reduced word of length in 1..=max_len.
pub fn random_word<R: Rng>(rng: &mut R, rank: u32, max_len: usize) -> Word {
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut w = Word::identity();
        for _ in 0..len {
            let gen = rng.gen_range(0..rank);
            let positive = rng.gen_bool(0.5);
            w.push(Letter::new(gen, positive));
        }
        if !w.is_empty() {
            return w;
        }
    }
}

/// Generators whose Stallings graph has the requested first betti number.
pub fn random_subgroup<R: Rng>(
    rng: &mut R,
    rank: u32,
    target_rank: i64,
    n_words: usize,
    max_len: usize,
) -> Vec<Word> {
    loop {
        let ws: Vec<Word> = (0..n_words)
            .map(|_| random_word(rng, rank, max_len))
            .collect();
        let g = LabeledGraph::from_words(&ws, rank).unwrap();
        if g.num_edges() > 0 && g.first_betti() == target_rank {
            return ws;
        }
    }
}

// ---------------------------------------------------------------------------
// rank experiment

#[derive(Clone, Debug)]
pub struct RankTrial {
    pub h1: Vec<Word>,
    pub h2: Vec<Word>,
    pub intersection_rank: i64,
    pub underlying_chi: i64,
    pub valence_counts: BTreeMap<usize, usize>,
    pub mid_max_valence: usize,
    pub mid_max_betti: i64,
    pub side_valence3: [usize; 2],
}

impl fmt::Display for RankTrial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h1: Vec<String> = self.h1.iter().map(|w| w.to_string()).collect();
        let h2: Vec<String> = self.h2.iter().map(|w| w.to_string()).collect();
        write!(
            f,
            "H1=<{}> H2=<{}> m_rank={} chi_u={} valences={:?} mid_max_val={} mid_max_betti={}",
            h1.join(","),
            h2.join(","),
            self.intersection_rank,
            self.underlying_chi,
            self.valence_counts,
            self.mid_max_valence,
            self.mid_max_betti
        )
    }
}

#[derive(Clone, Debug)]
pub struct RankReport {
    pub seed: u64,
    pub trials: Vec<RankTrial>,
    pub all_rank_at_most_one: bool,
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.trials.iter().enumerate() {
            writeln!(f, "trial {i}: {t}")?;
        }
        write!(
            f,
            "seed={} trials={} intersection rank <= 1: {}",
            self.seed,
            self.trials.len(),
            if self.all_rank_at_most_one { "all" } else { "VIOLATED" }
        )
    }
}

fn subgroup_rank(g: &LabeledGraph) -> i64 {
    if g.num_edges() == 0 {
        0
    } else {
        g.first_betti()
    }
}

/// Seeded experiment: rank-two subgroups H₁, H₂ of the rank-three free
/// group whose join is the whole group. Records the intersection rank (the
/// claim is ≤ 1) and a census of the reduced instance built over
/// M = H₁ ∩ H₂.
pub fn rank_experiment(seed: u64, trials: usize) -> Result<RankReport, GogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rose = LabeledGraph::rose(3);
    let mut out = Vec::new();
    for _ in 0..trials {
        let (h1w, h2w, g1, g2) = loop {
            let h1w = random_subgroup(&mut rng, 3, 2, 2, 4);
            let h2w = random_subgroup(&mut rng, 3, 2, 2, 4);
            let g1 = LabeledGraph::from_words(&h1w, 3)?;
            let g2 = LabeledGraph::from_words(&h2w, 3)?;
            if g1.join(&g2)?.is_isomorphic(&rose) {
                break (h1w, h2w, g1, g2);
            }
        };
        let m = intersection_subgroup(&g1, &g2)?;
        let intersection_rank = subgroup_rank(&m);
        let m_gens = m.generators()?;
        let built = build_representing(
            &[h1w.clone(), h2w.clone()],
            &[(0, 1, m_gens)],
            3,
        )?;
        let reduced = reduce_to_valence_three(&built.gog, true)?.result;
        let mut valence_counts = BTreeMap::new();
        for v in reduced.underlying_valences() {
            *valence_counts.entry(v).or_insert(0) += 1;
        }
        let gm = reduced.mid_graph();
        let mid_max_valence = gm.graph.valences().into_iter().max().unwrap_or(0);
        let mid_max_betti = gm
            .graph
            .components()
            .iter()
            .filter(|(c, _)| c.num_edges() > 0)
            .map(|(c, _)| c.first_betti())
            .max()
            .unwrap_or(0);
        let gh = reduced.horizontal_graph();
        let hval = gh.graph.valences();
        let mut side_valence3 = [0usize; 2];
        for (v, &s) in gh.side.iter().enumerate() {
            if hval[v] == 3 {
                if let Some(t @ (0 | 1)) = s {
                    side_valence3[t as usize] += 1;
                }
            }
        }
        out.push(RankTrial {
            h1: h1w,
            h2: h2w,
            intersection_rank,
            underlying_chi: reduced.underlying_euler(),
            valence_counts,
            mid_max_valence,
            mid_max_betti,
            side_valence3,
        });
    }
    let all_rank_at_most_one = out.iter().all(|t| t.intersection_rank <= 1);
    Ok(RankReport {
        seed,
        trials: out,
        all_rank_at_most_one,
    })
}

// ---------------------------------------------------------------------------
// inequality sweep

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: Vec<InequalityCase>,
    pub all_hold: bool,
    pub min_slack: i64,
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cases.iter().enumerate() {
            writeln!(f, "case {i}: {c}")?;
        }
        write!(
            f,
            "seed={} cases={} min_slack={} {}",
            self.seed,
            self.cases.len(),
            self.min_slack,
            if self.all_hold { "all hold" } else { "VIOLATED" }
        )
    }
}

/// Seeded sweep of the inequality over random subgroup pairs.
pub fn inequality_sweep(
    seed: u64,
    trials: usize,
    rank: u32,
) -> Result<SweepReport, GogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for _ in 0..trials {
        let r1 = rng.gen_range(2..=3);
        let r2 = rng.gen_range(2..=3);
        let h1w = random_subgroup(&mut rng, rank, r1, r1 as usize, 4);
        let h2w = random_subgroup(&mut rng, rank, r2, r2 as usize, 4);
        let g1 = LabeledGraph::from_words(&h1w, rank)?;
        let g2 = LabeledGraph::from_words(&h2w, rank)?;
        cases.push(inequality_case(&g1, &g2)?);
    }
    let all_hold = cases.iter().all(|c| c.holds);
    let min_slack = cases.iter().map(|c| c.slack).min().unwrap_or(0);
    Ok(SweepReport { seed, cases, all_hold, min_slack })
}

// ---------------------------------------------------------------------------
// identity sweep over random instances

#[derive(Clone, Debug)]
pub struct IdentitySweep {
    pub seed: u64,
    pub attempted: usize,
    pub checked: usize,
    pub excluded: BTreeMap<String, usize>,
    pub all_hold: bool,
}

impl fmt::Display for IdentitySweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "seed={} attempted={} checked={}",
            self.seed, self.attempted, self.checked
        )?;
        for (why, n) in &self.excluded {
            writeln!(f, "excluded {n}: {why}")?;
        }
        write!(
            f,
            "identity {}",
            if self.all_hold { "holds on all checked instances" } else { "VIOLATED" }
        )
    }
}

/// Builds random two-subgroup instances over their intersection, reduces
/// them, and checks the identity on every instance satisfying its
/// hypotheses; the rest are tallied by exclusion reason.
pub fn identity_sweep(seed: u64, trials: usize) -> Result<IdentitySweep, GogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut excluded: BTreeMap<String, usize> = BTreeMap::new();
    let mut checked = 0;
    let mut all_hold = true;
    for _ in 0..trials {
        let rank = rng.gen_range(2..=3u32);
        let r1 = rng.gen_range(2..=3);
        let r2 = rng.gen_range(2..=3);
        let h1w = random_subgroup(&mut rng, rank, r1, r1 as usize, 4);
        let h2w = random_subgroup(&mut rng, rank, r2, r2 as usize, 4);
        let g1 = LabeledGraph::from_words(&h1w, rank)?;
        let g2 = LabeledGraph::from_words(&h2w, rank)?;
        let m = intersection_subgroup(&g1, &g2)?;
        if m.num_edges() == 0 {
            *excluded.entry("trivial intersection".into()).or_insert(0) += 1;
            continue;
        }
        let built = build_representing(&[h1w, h2w], &[(0, 1, m.generators()?)], rank)?;
        let reduced = match reduce_to_valence_three(&built.gog, false) {
            Ok(o) => o.result,
            Err(e) => {
                *excluded.entry(e.to_string()).or_insert(0) += 1;
                continue;
            }
        };
        match check_identity(&reduced) {
            Ok(report) => {
                checked += 1;
                all_hold &= report.holds;
            }
            Err(GogError::Hypothesis(why)) => {
                *excluded.entry(why).or_insert(0) += 1;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(IdentitySweep {
        seed,
        attempted: trials,
        checked,
        excluded,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    fn reduced_example() -> GraphOfGraphs {
        let built = build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, words(&["b"]))],
            3,
        )
        .unwrap();
        reduce_to_valence_three(&built.gog, false).unwrap().result
    }

    #[test]
    fn identity_on_reduced_example() {
        let x = reduced_example();
        match check_identity(&x) {
            Ok(report) => assert!(report.holds, "{report}"),
            Err(GogError::Hypothesis(why)) => {
                panic!("example unexpectedly excluded: {why}")
            }
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn statistics_reject_unreduced_input() {
        let built = build_representing(
            &[words(&["a", "b"]), words(&["b", "c"])],
            &[(0, 1, words(&["b"]))],
            3,
        )
        .unwrap();
        assert!(matches!(
            delta_statistics(&built.gog),
            Err(GogError::Hypothesis(_))
        ));
    }

    #[test]
    fn inequality_examples() {
        let g1 = LabeledGraph::from_words(&words(&["a", "bab"]), 2).unwrap();
        let g2 = LabeledGraph::from_words(&words(&["a", "Bab"]), 2).unwrap();
        let c = inequality_case(&g1, &g2).unwrap();
        assert!(c.holds, "{c}");
        // identical factors: slack chi^2 + chi >= 0
        let c = inequality_case(&g1, &g1).unwrap();
        assert_eq!(c.slack, c.chi1 * c.chi1 + c.chi1);
        assert!(c.holds);
    }

    #[test]
    fn inequality_sweep_deterministic_and_holds() {
        let a = inequality_sweep(7, 20, 3).unwrap();
        let b = inequality_sweep(7, 20, 3).unwrap();
        assert!(a.all_hold);
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn rank_experiment_small() {
        let r = rank_experiment(11, 3).unwrap();
        assert!(r.all_rank_at_most_one, "{r}");
        for t in &r.trials {
            assert!(t.mid_max_betti <= 1, "{t}");
        }
        // determinism
        assert_eq!(r.to_string(), rank_experiment(11, 3).unwrap().to_string());
    }

    #[test]
    fn identity_sweep_small() {
        let s = identity_sweep(3, 10).unwrap();
        assert!(s.all_hold, "{s}");
        assert_eq!(s.attempted, 10);
        assert_eq!(s.checked + s.excluded.values().sum::<usize>(), 10);
    }

    #[test]
    fn bigon_resolution_distinct_components() {
        // two edge groups over the same pair make the basepoint strip a bigon
        let built = build_representing(
            &[words(&["a", "b"]), words(&["a", "b"])],
            &[
                (0, 1, words(&["a", "b"])),
                (0, 1, words(&["ab"])),
            ],
            2,
        )
        .unwrap();
        let res = resolve_bigon(&built.gog).unwrap();
        assert!(!res.same_component);
        assert!(res.proper_over_q, "K should exceed the second edge group");
        assert_eq!(res.k_matches_join, Some(true));
        let gh = built.gog.horizontal_graph();
        for side in 0..2 {
            assert!(res.nu[side].is_immersion(&res.k, &gh.graph));
        }
    }

    #[test]
    fn bigon_resolution_rejects_simple_edged() {
        let x = reduced_example();
        if x.find_bigon().is_none() {
            assert!(matches!(resolve_bigon(&x), Err(GogError::Hypothesis(_))));
        }
    }
}
