//! Random instances and the gadget reduction from independent set.
//!
//! The gadget takes a graph of maximum degree three with a proper
//! 3-colouring `psi`, subdivides every edge `{v_i, v_j}` with a new vertex
//! `v_ij` (edges `v_i v_ij` and `v_ij v_j` coloured `psi(v_i)` and
//! `psi(v_j)`), and hangs a pendant `v_i*` off every vertex with an edge
//! coloured differently from `psi(v_i)`. The source has an independent set of
//! size `k` exactly when the gadget has a colouring with `k + |E|` stable edges.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fpt_stable::trial_rng;
use crate::graph::{Colour, EdgeColouredGraph, VertexColouring};

/// `(u, v)` with `u < v` for the `index`-th vertex pair in the order
/// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
fn pair_from_index(index: u64) -> (usize, usize) {
    // Largest v with v(v-1)/2 <= index.
    let mut v = ((1.0 + libm::sqrt(1.0 + 8.0 * index as f64)) / 2.0) as u64;
    while v * (v - 1) / 2 > index {
        v -= 1;
    }
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    let u = index - v * (v - 1) / 2;
    (u as usize, v as usize)
}

/// A uniformly random simple graph with exactly `m` edges, each coloured
/// uniformly from `1..=t`. Edges are listed in ascending `(u, v)` order.
pub fn random_instance(n: usize, m: usize, t: Colour, seed: u64) -> Result<EdgeColouredGraph> {
    if t == 0 {
        return Err(Error::Parameter("t must be at least 1".into()));
    }
    let possible = (n as u64) * (n as u64).saturating_sub(1) / 2;
    if m as u64 > possible {
        return Err(Error::Parameter(format!(
            "{m} edges do not fit in a simple graph on {n} vertices"
        )));
    }
    let mut rng = trial_rng(seed, 0);
    let mut pairs: Vec<(usize, usize)> = index::sample(&mut rng, possible as usize, m)
        .into_iter()
        .map(|i| pair_from_index(i as u64))
        .collect();
    pairs.sort_unstable();
    let edges: Vec<(usize, usize, Colour)> =
        pairs.into_iter().map(|(u, v)| (u, v, rng.gen_range(1..=t))).collect();
    EdgeColouredGraph::new(n, t, edges)
}

/// A complete graph on `n` vertices with uniformly random colours from `1..=2`.
pub fn random_complete_bicoloured(n: usize, seed: u64) -> EdgeColouredGraph {
    let mut rng = trial_rng(seed, 0);
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            edges.push((u, v, rng.gen_range(1..=2)));
        }
    }
    EdgeColouredGraph::new(n, 2, edges).expect("complete graph is simple")
}

/// Uncoloured simple graph, used as the source of the gadget reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let coloured = EdgeColouredGraph::new(n, 1, edges.into_iter().map(|(u, v)| (u, v, 1)))?;
        let edges: Vec<(usize, usize)> = coloured.edges().iter().map(|e| (e.u, e.v)).collect();
        let adjacency = (0..n)
            .map(|v| coloured.incident(v).iter().map(|i| i.neighbour).collect())
            .collect();
        Ok(Self { n, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_independent(&self, set: &BTreeSet<usize>) -> bool {
        self.edges.iter().all(|(u, v)| !(set.contains(u) && set.contains(v)))
    }
}

/// A random graph of maximum degree at most three: `attempts` random pairs,
/// each kept when it is new and both ends still have degree below three.
pub fn random_subcubic_graph(n: usize, attempts: usize, seed: u64) -> SimpleGraph {
    let mut rng = trial_rng(seed, 0);
    let mut degree = vec![0usize; n];
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let key = (u.min(v), u.max(v));
            if u != v && degree[u] < 3 && degree[v] < 3 && seen.insert(key) {
                degree[u] += 1;
                degree[v] += 1;
                edges.push(key);
            }
        }
    }
    SimpleGraph::new(n, edges).expect("generated graph is simple")
}

/// Order in which vertices are coloured: the reverse of repeatedly removing
/// a vertex of minimum remaining degree (ties: largest id first).
fn degeneracy_order(g: &SimpleGraph) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..g.n).map(|v| g.adjacency[v].len()).collect();
    let mut removed = vec![false; g.n];
    let mut order = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], core::cmp::Reverse(v)))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for &w in &g.adjacency[v] {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Proper vertex colouring with labels `1..=3`, by backtracking in
/// degeneracy order.
pub fn proper_3_colouring(g: &SimpleGraph) -> Result<Vec<Colour>> {
    if g.max_degree() > 3 {
        return Err(Error::ReductionInapplicable(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let order = degeneracy_order(g);
    let mut colour = vec![0 as Colour; g.n];

    fn assign(g: &SimpleGraph, order: &[usize], pos: usize, colour: &mut [Colour]) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        for c in 1..=3 {
            if g.adjacency[v].iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                if assign(g, order, pos + 1, colour) {
                    return true;
                }
            }
        }
        colour[v] = 0;
        false
    }

    if assign(g, &order, 0, &mut colour) {
        Ok(colour)
    } else {
        Err(Error::ReductionInapplicable("graph has no proper 3-colouring".into()))
    }
}

/// Where each source object lives in the gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    /// Gadget id of source vertex `i`.
    pub original: Vec<usize>,
    /// Gadget id of the pendant attached to source vertex `i`.
    pub pendant: Vec<usize>,
    /// Gadget id of the subdivision vertex of source edge `e`.
    pub subdivision: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub gprime: EdgeColouredGraph,
    pub source: SimpleGraph,
    pub source_edge_count: usize,
    pub vertex_map: ReductionMap,
    pub psi: Vec<Colour>,
}

impl ReductionOutput {
    /// Gadget edge index of the pendant edge at source vertex `i`.
    pub fn pendant_edge(&self, i: usize) -> usize {
        2 * self.source_edge_count + i
    }

    /// Gadget edge indices `(v_i v_ij, v_ij v_j)` for source edge `e = (i, j)`.
    pub fn subdivision_edges(&self, e: usize) -> (usize, usize) {
        (2 * e, 2 * e + 1)
    }
}

/// Builds the gadget. Source vertex `i` keeps id `i`, its pendant is
/// `n + i`, and the subdivision vertex of source edge `e` is `2n + e`.
pub fn hardness_reduction(source: &SimpleGraph) -> Result<ReductionOutput> {
    let psi = proper_3_colouring(source)?;
    let n = source.n;
    let m = source.edges.len();
    let mut edges: Vec<(usize, usize, Colour)> = Vec::with_capacity(2 * m + n);
    for (e, &(i, j)) in source.edges.iter().enumerate() {
        let mid = 2 * n + e;
        edges.push((i, mid, psi[i]));
        edges.push((mid, j, psi[j]));
    }
    for (i, &c) in psi.iter().enumerate() {
        let pendant_colour = if c == 1 { 2 } else { 1 };
        edges.push((i, n + i, pendant_colour));
    }
    let gprime = EdgeColouredGraph::new(2 * n + m, 3, edges)?;
    Ok(ReductionOutput {
        gprime,
        source: source.clone(),
        source_edge_count: m,
        vertex_map: ReductionMap {
            original: (0..n).collect(),
            pendant: (n..2 * n).collect(),
            subdivision: (2 * n..2 * n + m).collect(),
        },
        psi,
    })
}

/// Colouring of the gadget with at least `|I| + |E|` stable edges, built
/// from an independent set `I` of the source.
pub fn forward_witness(red: &ReductionOutput, independent_set: &BTreeSet<usize>) -> Result<VertexColouring> {
    let n = red.source.n;
    if let Some(&v) = independent_set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if !red.source.is_independent(independent_set) {
        return Err(Error::Precondition("vertex set is not independent".into()));
    }
    let mut f = VertexColouring::uniform(red.gprime.vertex_count(), 1);
    for i in 0..n {
        let pendant_colour = red.gprime.edge(red.pendant_edge(i)).colour;
        f.set(red.vertex_map.pendant[i], pendant_colour);
        let own = if independent_set.contains(&i) { pendant_colour } else { red.psi[i] };
        f.set(red.vertex_map.original[i], own);
    }
    for (e, &(i, j)) in red.source.edges.iter().enumerate() {
        let c = if independent_set.contains(&i) { red.psi[j] } else { red.psi[i] };
        f.set(red.vertex_map.subdivision[e], c);
    }
    Ok(f)
}
