//! Deciding whether at most `k` edge deletions remove every conflict pair.
//!
//! The pipeline condenses the graph (all monochromatic vertices of colour `c`
//! merge into one hub `v_c`, parallel edges merge into one weighted edge),
//! rejects the instance when the condensed graph exceeds `4k` vertices or
//! `2k^2 + k` edges, and otherwise searches for a vertex cover of weight at
//! most `k` in the weighted conflict graph of the condensed graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::conflict::{build_weighted_conflict_graph, ConflictGraph};
use crate::error::Result;
use crate::graph::{
    colouring_from_stable_subgraph, has_conflict_pair, Colour, EdgeColouredGraph, VertexColouring,
};

/// What a condensed vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondensedVertex {
    /// A colourful vertex of the source graph.
    Colourful(usize),
    /// The hub of all monochromatic source vertices of this colour.
    Hub(Colour),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedGraph {
    base: EdgeColouredGraph,
    weights: Vec<u64>,
    vertices: Vec<CondensedVertex>,
    hub_of_colour: BTreeMap<Colour, usize>,
    origin: Vec<Vec<usize>>,
    baseline_stable: usize,
}

impl CondensedGraph {
    pub fn base(&self) -> &EdgeColouredGraph {
        &self.base
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> u64 {
        self.weights[edge]
    }

    pub fn vertex(&self, v: usize) -> CondensedVertex {
        self.vertices[v]
    }

    pub fn hub(&self, colour: Colour) -> Option<usize> {
        self.hub_of_colour.get(&colour).copied()
    }

    pub fn hubs(&self) -> impl Iterator<Item = (Colour, usize)> + '_ {
        self.hub_of_colour.iter().map(|(&c, &v)| (c, v))
    }

    /// Source edges merged into condensed edge `edge`.
    pub fn origin(&self, edge: usize) -> &[usize] {
        &self.origin[edge]
    }

    /// Source edges joining two monochromatic vertices. They are stable
    /// under the canonical colouring and never take part in a conflict pair.
    pub fn baseline_stable(&self) -> usize {
        self.baseline_stable
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }
}

/// Condenses `g`. Monochromatic vertices of colour `c` merge into a hub
/// `v_c`; edges between two monochromatic vertices are dropped and counted in
/// [`CondensedGraph::baseline_stable`]; parallel edges merge into one weighted
/// edge. Isolated vertices, including hubs left without edges, are dropped.
pub fn condense(g: &EdgeColouredGraph) -> CondensedGraph {
    let n = g.vertex_count();
    let mono: Vec<Option<Colour>> = (0..n).map(|v| g.monochromatic_colour(v)).collect();

    // Hubs only for colours with a monochromatic vertex next to a colourful one.
    let mut hub_colours = BTreeSet::new();
    for e in g.edges() {
        match (mono[e.u], mono[e.v]) {
            (Some(c), None) | (None, Some(c)) => {
                hub_colours.insert(c);
            }
            _ => {}
        }
    }

    let mut vertices = Vec::new();
    let mut new_id: Vec<Option<usize>> = vec![None; n];
    for (v, id) in new_id.iter_mut().enumerate() {
        if g.is_colourful(v) {
            *id = Some(vertices.len());
            vertices.push(CondensedVertex::Colourful(v));
        }
    }
    let mut hub_of_colour = BTreeMap::new();
    for c in hub_colours {
        hub_of_colour.insert(c, vertices.len());
        vertices.push(CondensedVertex::Hub(c));
    }
    for v in 0..n {
        if let Some(c) = mono[v] {
            new_id[v] = hub_of_colour.get(&c).copied();
        }
    }

    let mut baseline_stable = 0;
    let mut merged: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize, Colour)> = Vec::new();
    let mut weights = Vec::new();
    let mut origin: Vec<Vec<usize>> = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if mono[e.u].is_some() && mono[e.v].is_some() {
            baseline_stable += 1;
            continue;
        }
        let a = new_id[e.u].expect("endpoint next to a colourful vertex is kept");
        let b = new_id[e.v].expect("endpoint next to a colourful vertex is kept");
        let key = (a.min(b), a.max(b));
        match merged.get(&key) {
            Some(&j) => {
                debug_assert_eq!(edges[j].2, e.colour, "merged parallel edges share a colour");
                weights[j] += 1;
                origin[j].push(i);
            }
            None => {
                merged.insert(key, edges.len());
                edges.push((key.0, key.1, e.colour));
                weights.push(1);
                origin.push(vec![i]);
            }
        }
    }
    let base = EdgeColouredGraph::new(vertices.len(), g.colour_count(), edges)
        .expect("condensed graph is simple");
    CondensedGraph { base, weights, vertices, hub_of_colour, origin, baseline_stable }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelVerdict {
    pub n_star: usize,
    pub m_star: usize,
    /// `n_star <= 4k` and `m_star <= 2k^2 + k`. False means the answer is no.
    pub within_bounds: bool,
}

pub fn kernel_vertex_bound(k: usize) -> u128 {
    4 * k as u128
}

pub fn kernel_edge_bound(k: usize) -> u128 {
    let k = k as u128;
    2 * k * k + k
}

pub fn check_kernel(gstar: &CondensedGraph, k: usize) -> KernelVerdict {
    let n_star = gstar.vertex_count();
    let m_star = gstar.edge_count();
    KernelVerdict {
        n_star,
        m_star,
        within_bounds: n_star as u128 <= kernel_vertex_bound(k)
            && m_star as u128 <= kernel_edge_bound(k),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverOutcome {
    pub found: bool,
    /// Cover nodes, ascending, when found.
    pub cover: Option<Vec<usize>>,
    pub weight: Option<u64>,
    /// Search-tree nodes visited.
    pub search_nodes: u64,
}

struct CoverSearch<'a> {
    x: &'a ConflictGraph,
    in_cover: Vec<bool>,
    excluded: Vec<bool>,
    nodes: u64,
}

impl CoverSearch<'_> {
    fn uncovered_degree(&self, v: usize) -> usize {
        self.x.neighbours(v).iter().filter(|&&w| !self.in_cover[w]).count()
    }

    /// An uncovered edge, oriented so the first endpoint has the larger
    /// uncovered degree.
    fn pick_edge(&self) -> Option<(usize, usize)> {
        let &(a, b) = self
            .x
            .edges()
            .iter()
            .filter(|&&(a, b)| !self.in_cover[a] && !self.in_cover[b])
            .max_by_key(|&&(a, b)| self.uncovered_degree(a).max(self.uncovered_degree(b)))?;
        if self.uncovered_degree(b) > self.uncovered_degree(a) {
            Some((b, a))
        } else {
            Some((a, b))
        }
    }

    /// Adds `nodes` to the cover if the budget allows. Returns the spent
    /// weight, or `None` (and changes nothing) if a node is excluded or the
    /// budget would go negative.
    fn take(&mut self, nodes: &[usize], budget: u64) -> Option<u64> {
        let mut spent = 0u64;
        for &v in nodes {
            if self.excluded[v] {
                return None;
            }
            spent += self.x.weight(v);
        }
        if spent > budget {
            return None;
        }
        for &v in nodes {
            self.in_cover[v] = true;
        }
        Some(spent)
    }

    fn untake(&mut self, nodes: &[usize]) {
        for &v in nodes {
            self.in_cover[v] = false;
        }
    }

    fn search(&mut self, budget: u64) -> bool {
        self.nodes += 1;
        let Some((a, b)) = self.pick_edge() else {
            return true;
        };
        // A node heavier than the remaining budget stays out, forcing its
        // uncovered neighbours in; otherwise branch on taking `a` or not.
        let a_fits = !self.excluded[a] && self.x.weight(a) <= budget;
        let b_fits = !self.excluded[b] && self.x.weight(b) <= budget;
        if !a_fits && !b_fits {
            return false;
        }
        let (a, b) = if a_fits { (a, b) } else { (b, a) };

        if let Some(spent) = self.take(&[a], budget) {
            if self.search(budget - spent) {
                return true;
            }
            self.untake(&[a]);
        }

        let forced: Vec<usize> = self
            .x
            .neighbours(a)
            .iter()
            .copied()
            .filter(|&w| !self.in_cover[w])
            .collect();
        debug_assert!(forced.contains(&b));
        self.excluded[a] = true;
        let found = match self.take(&forced, budget) {
            Some(spent) => {
                if self.search(budget - spent) {
                    true
                } else {
                    self.untake(&forced);
                    false
                }
            }
            None => false,
        };
        self.excluded[a] = false;
        found
    }
}

/// Bounded search tree for a vertex cover of total weight at most `budget`.
/// Every branch spends at least one unit of budget, so the tree has at
/// most `2^budget` leaves.
pub fn min_weight_vertex_cover(x: &ConflictGraph, budget: u64) -> CoverOutcome {
    let mut search = CoverSearch {
        x,
        in_cover: vec![false; x.node_count()],
        excluded: vec![false; x.node_count()],
        nodes: 0,
    };
    if search.search(budget) {
        let cover: Vec<usize> = (0..x.node_count()).filter(|&v| search.in_cover[v]).collect();
        let weight = cover.iter().map(|&v| x.weight(v)).sum();
        CoverOutcome { found: true, cover: Some(cover), weight: Some(weight), search_nodes: search.nodes }
    } else {
        CoverOutcome { found: false, cover: None, weight: None, search_nodes: search.nodes }
    }
}

/// Smallest cover weight, found by raising the budget until the search succeeds.
pub fn minimum_cover_weight(x: &ConflictGraph) -> (u64, CoverOutcome) {
    let mut budget = 0;
    loop {
        let out = min_weight_vertex_cover(x, budget);
        if out.found {
            return (budget, out);
        }
        budget += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnstableFptOutcome {
    pub yes: bool,
    /// Source edges to delete, ascending, when the answer is yes.
    pub deleted_edges: Option<Vec<usize>>,
    pub colouring: Option<VertexColouring>,
    /// `None` when `k = 0` skipped condensation.
    pub verdict: Option<KernelVerdict>,
    pub cover_weight: Option<u64>,
    pub search_nodes: u64,
}

pub fn solve_unstable_fpt(g: &EdgeColouredGraph, k: usize) -> Result<UnstableFptOutcome> {
    if k == 0 {
        let yes = !has_conflict_pair(g);
        let colouring = if yes {
            let all: BTreeSet<usize> = (0..g.edge_count()).collect();
            Some(colouring_from_stable_subgraph(g, &all)?)
        } else {
            None
        };
        return Ok(UnstableFptOutcome {
            yes,
            deleted_edges: yes.then(Vec::new),
            colouring,
            verdict: None,
            cover_weight: yes.then_some(0),
            search_nodes: 0,
        });
    }

    let gstar = condense(g);
    let verdict = check_kernel(&gstar, k);
    if !verdict.within_bounds {
        return Ok(UnstableFptOutcome {
            yes: false,
            deleted_edges: None,
            colouring: None,
            verdict: Some(verdict),
            cover_weight: None,
            search_nodes: 0,
        });
    }
    let x = build_weighted_conflict_graph(&gstar);
    let cover = min_weight_vertex_cover(&x, k as u64);
    if !cover.found {
        return Ok(UnstableFptOutcome {
            yes: false,
            deleted_edges: None,
            colouring: None,
            verdict: Some(verdict),
            cover_weight: None,
            search_nodes: cover.search_nodes,
        });
    }
    let deleted: BTreeSet<usize> = cover
        .cover
        .as_deref()
        .unwrap_or_default()
        .iter()
        .flat_map(|&node| gstar.origin(x.origin(node)).iter().copied())
        .collect();
    let kept: BTreeSet<usize> = (0..g.edge_count()).filter(|i| !deleted.contains(i)).collect();
    let colouring = colouring_from_stable_subgraph(g, &kept)?;
    Ok(UnstableFptOutcome {
        yes: true,
        deleted_edges: Some(deleted.into_iter().collect()),
        colouring: Some(colouring),
        verdict: Some(verdict),
        cover_weight: cover.weight,
        search_nodes: cover.search_nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_vertex_monochromatic, stable_count};

    fn graph(n: usize, t: Colour, edges: &[(usize, usize, Colour)]) -> EdgeColouredGraph {
        EdgeColouredGraph::new(n, t, edges.iter().copied()).unwrap()
    }

    #[test]
    fn monochromatic_triangle_condenses_away() {
        let g = graph(3, 1, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        let c = condense(&g);
        // The hub would have no edges left, so it is dropped.
        assert_eq!(c.vertex_count(), 0);
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.hub(1), None);
        assert_eq!(c.baseline_stable(), 3);
    }

    #[test]
    fn star_merges_parallel_edges() {
        let g = graph(4, 2, &[(0, 1, 1), (0, 2, 1), (0, 3, 2)]);
        let c = condense(&g);
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.vertex(0), CondensedVertex::Colourful(0));
        let h1 = c.hub(1).unwrap();
        let h2 = c.hub(2).unwrap();
        let find = |a: usize, b: usize| {
            c.base()
                .edges()
                .iter()
                .position(|e| (e.u, e.v) == (a.min(b), a.max(b)))
                .unwrap()
        };
        let e1 = find(0, h1);
        let e2 = find(0, h2);
        assert_eq!((c.weight(e1), c.base().edge(e1).colour), (2, 1));
        assert_eq!((c.weight(e2), c.base().edge(e2).colour), (1, 2));
        assert_eq!(c.origin(e1), &[0, 1]);
        assert_eq!(c.baseline_stable(), 0);
    }

    #[test]
    fn all_colourful_graph_is_unchanged() {
        // Alternating 4-cycle: every vertex sees both colours.
        let g = graph(4, 2, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]);
        let c = condense(&g);
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.edge_count(), 4);
        assert!(c.weights().iter().all(|&w| w == 1));
        assert_eq!(c.baseline_stable(), 0);
        assert_eq!(c.hubs().count(), 0);
    }

    #[test]
    fn isolated_vertices_are_dropped() {
        let g = graph(6, 2, &[(0, 1, 1), (1, 2, 2)]);
        let c = condense(&g);
        // Colourful 1 plus hubs for colours 1 and 2; 3, 4, 5 vanish.
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.vertex(0), CondensedVertex::Colourful(1));
    }

    #[test]
    fn kernel_bounds() {
        // Alternating cycle of length 2(4k+1) has that many colourful vertices.
        let k = 2;
        let len = 2 * (4 * k + 1);
        let edges: Vec<(usize, usize, Colour)> =
            (0..len).map(|i| (i, (i + 1) % len, (i % 2) as Colour + 1)).collect();
        let g = EdgeColouredGraph::new(len, 2, edges).unwrap();
        let v = check_kernel(&condense(&g), k);
        assert!(v.n_star > 4 * k);
        assert!(!v.within_bounds);

        let empty = condense(&graph(0, 1, &[]));
        assert!(check_kernel(&empty, 0).within_bounds);
    }

    #[test]
    fn cover_examples() {
        let empty = ConflictGraph::from_parts(vec![1; 3], vec![]).unwrap();
        let out = min_weight_vertex_cover(&empty, 0);
        assert!(out.found);
        assert_eq!(out.cover, Some(vec![]));

        let edge = ConflictGraph::from_parts(vec![3, 1], vec![(0, 1)]).unwrap();
        let out = min_weight_vertex_cover(&edge, 1);
        assert_eq!(out.cover, Some(vec![1]));
        assert!(!min_weight_vertex_cover(&edge, 0).found);

        let tri = ConflictGraph::from_parts(vec![1, 1, 1], vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!min_weight_vertex_cover(&tri, 1).found);
        let out = min_weight_vertex_cover(&tri, 2);
        assert!(out.found);
        assert!(tri.is_vertex_cover(out.cover.as_deref().unwrap()));
        assert_eq!(minimum_cover_weight(&tri).0, 2);
    }

    #[test]
    fn pipeline_examples() {
        let mono = graph(3, 2, &[(0, 1, 1), (1, 2, 1)]);
        let out = solve_unstable_fpt(&mono, 0).unwrap();
        assert!(out.yes);
        assert_eq!(out.deleted_edges, Some(vec![]));

        let path = graph(3, 2, &[(0, 1, 1), (1, 2, 2)]);
        assert!(!solve_unstable_fpt(&path, 0).unwrap().yes);
        let out = solve_unstable_fpt(&path, 1).unwrap();
        assert!(out.yes);
        let deleted = out.deleted_edges.unwrap();
        assert_eq!(deleted.len(), 1);
        let f = out.colouring.unwrap();
        assert_eq!(stable_count(&path, &f), 1);
        let removed: BTreeSet<usize> = deleted.into_iter().collect();
        assert!(is_vertex_monochromatic(&path.without_edges(&removed)));
    }

    #[test]
    fn pipeline_expands_weighted_cover() {
        // Centre 0 has two colour-1 leaves and three colour-2 leaves; the
        // cheapest fix deletes both colour-1 edges via one weight-2 node.
        let g = graph(
            6,
            2,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 2), (0, 4, 2), (0, 5, 2)],
        );
        assert!(!solve_unstable_fpt(&g, 1).unwrap().yes);
        let out = solve_unstable_fpt(&g, 2).unwrap();
        assert!(out.yes);
        assert_eq!(out.deleted_edges, Some(vec![0, 1]));
        assert_eq!(out.cover_weight, Some(2));
    }
}
