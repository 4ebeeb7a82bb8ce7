//! Edge-coloured graphs, vertex colourings and the basic stability predicates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Colour label. Valid labels are `1..=t`.
pub type Colour = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: Colour,
}

impl Edge {
    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

/// One entry of a vertex's adjacency list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub neighbour: usize,
    pub edge: usize,
    pub colour: Colour,
}

/// A simple undirected graph whose edges carry colours in `1..=t`.
///
/// Vertices are the dense ids `0..n`. The colour count `t` is stored rather
/// than inferred, so colourings may use labels no edge carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouredGraph {
    n: usize,
    t: Colour,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Incidence>>,
}

impl EdgeColouredGraph {
    /// Builds a graph, rejecting self-loops, parallel edges, out-of-range
    /// vertices and colours outside `1..=t`.
    pub fn new<I>(n: usize, t: Colour, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Colour)>,
    {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v, colour) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if colour == 0 || colour > t {
                return Err(Error::ColourOutOfRange { u, v, colour, t });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ParallelEdge(u, v));
            }
            let index = list.len();
            adjacency[u].push(Incidence { neighbour: v, edge: index, colour });
            adjacency[v].push(Incidence { neighbour: u, edge: index, colour });
            list.push(Edge { u, v, colour });
        }
        Ok(Self { n, t, edges: list, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn colour_count(&self) -> Colour {
        self.t
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn incident(&self, v: usize) -> &[Incidence] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Distinct colours on the edges at `v`, ascending.
    pub fn incident_colours(&self, v: usize) -> Vec<Colour> {
        let mut colours: Vec<Colour> = self.adjacency[v].iter().map(|i| i.colour).collect();
        colours.sort_unstable();
        colours.dedup();
        colours
    }

    /// `Some(c)` if every edge at `v` has colour `c`, `None` if `v` is
    /// colourful or isolated.
    pub fn monochromatic_colour(&self, v: usize) -> Option<Colour> {
        let first = self.adjacency[v].first()?.colour;
        self.adjacency[v]
            .iter()
            .all(|i| i.colour == first)
            .then_some(first)
    }

    /// A vertex with edges of at least two colours.
    pub fn is_colourful(&self, v: usize) -> bool {
        match self.adjacency[v].first() {
            Some(first) => self.adjacency[v].iter().any(|i| i.colour != first.colour),
            None => false,
        }
    }

    /// Distinct colours carried by edges, ascending.
    pub fn colours_in_use(&self) -> Vec<Colour> {
        let mut colours: Vec<Colour> = self.edges.iter().map(|e| e.colour).collect();
        colours.sort_unstable();
        colours.dedup();
        colours
    }

    /// Number of edges carrying each colour; index 0 is unused.
    pub fn colour_class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.t as usize + 1];
        for e in &self.edges {
            sizes[e.colour as usize] += 1;
        }
        sizes
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n as u128;
        self.edges.len() as u128 == n * n.saturating_sub(1) / 2
    }

    /// Two-colours the vertices so every edge crosses, if possible.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            stack.push(start);
            while let Some(x) = stack.pop() {
                let s = side[x].unwrap_or(false);
                for inc in &self.adjacency[x] {
                    match side[inc.neighbour] {
                        None => {
                            side[inc.neighbour] = Some(!s);
                            stack.push(inc.neighbour);
                        }
                        Some(other) if other == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Same vertices and colour count, without the listed edges. Edge
    /// indices of the result follow the surviving edges in their original order.
    pub fn without_edges(&self, deleted: &BTreeSet<usize>) -> Self {
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !deleted.contains(i))
            .map(|(_, e)| (e.u, e.v, e.colour));
        Self::new(self.n, self.t, kept).expect("subgraph of a valid graph is valid")
    }
}

/// Colour assigned to each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColouring(Vec<Colour>);

impl VertexColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        Self(colours)
    }

    pub fn uniform(n: usize, colour: Colour) -> Self {
        Self(vec![colour; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, colour: Colour) {
        self.0[v] = colour;
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Colour> {
        self.0
    }

    /// Checks the colouring covers every vertex of `g` with a label in `1..=t`.
    pub fn check_against(&self, g: &EdgeColouredGraph) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(Error::ColouringLength { expected: g.vertex_count(), got: self.0.len() });
        }
        let t = g.colour_count();
        if let Some((vertex, &colour)) =
            self.0.iter().enumerate().find(|(_, &c)| c == 0 || c > t)
        {
            return Err(Error::VertexColourOutOfRange { vertex, colour, t });
        }
        Ok(())
    }

    pub fn is_stable(&self, e: &Edge) -> bool {
        self.0[e.u] == e.colour && self.0[e.v] == e.colour
    }
}

/// Stable and unstable edge indices under one colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: Vec<usize>,
    pub unstable: Vec<usize>,
    pub stable_count: usize,
    pub unstable_count: usize,
}

pub fn stability(g: &EdgeColouredGraph, f: &VertexColouring) -> Result<StabilityReport> {
    f.check_against(g)?;
    let (stable, unstable): (Vec<usize>, Vec<usize>) =
        (0..g.edge_count()).partition(|&i| f.is_stable(&g.edges[i]));
    Ok(StabilityReport {
        stable_count: stable.len(),
        unstable_count: unstable.len(),
        stable,
        unstable,
    })
}

/// Number of stable edges, without materializing the edge lists.
pub fn stable_count(g: &EdgeColouredGraph, f: &VertexColouring) -> usize {
    g.edges.iter().filter(|e| f.is_stable(e)).count()
}

/// Unordered pairs `(a, b)`, `a < b`, of adjacent edges with different
/// colours. Two edges of a simple graph share at most one vertex, so
/// scanning each vertex's incidences yields every pair exactly once.
pub fn conflict_pairs(g: &EdgeColouredGraph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 0..g.n {
        let inc = &g.adjacency[v];
        for (i, a) in inc.iter().enumerate() {
            for b in &inc[i + 1..] {
                if a.colour != b.colour {
                    pairs.push((a.edge.min(b.edge), a.edge.max(b.edge)));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

pub fn has_conflict_pair(g: &EdgeColouredGraph) -> bool {
    (0..g.n).any(|v| g.is_colourful(v))
}

/// No vertex sees two edge colours.
pub fn is_vertex_monochromatic(g: &EdgeColouredGraph) -> bool {
    (0..g.n).all(|v| !g.is_colourful(v))
}

/// Every connected component uses a single edge colour.
pub fn components_edge_monochromatic(g: &EdgeColouredGraph) -> bool {
    let mut visited = vec![false; g.n];
    let mut stack = Vec::new();
    for start in 0..g.n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        stack.push(start);
        let mut colour: Option<Colour> = None;
        while let Some(x) = stack.pop() {
            for inc in &g.adjacency[x] {
                match colour {
                    None => colour = Some(inc.colour),
                    Some(c) if c != inc.colour => return false,
                    Some(_) => {}
                }
                if !visited[inc.neighbour] {
                    visited[inc.neighbour] = true;
                    stack.push(inc.neighbour);
                }
            }
        }
    }
    true
}

/// Colours each vertex touched by a kept edge with that edge's colour and
/// every other vertex with colour 1. All kept edges become stable.
pub fn colouring_from_stable_subgraph(
    g: &EdgeColouredGraph,
    kept: &BTreeSet<usize>,
) -> Result<VertexColouring> {
    let mut colours: Vec<Option<Colour>> = vec![None; g.n];
    for &index in kept {
        if index >= g.edge_count() {
            return Err(Error::EdgeOutOfRange { index, m: g.edge_count() });
        }
        let e = g.edges[index];
        for x in [e.u, e.v] {
            match colours[x] {
                Some(c) if c != e.colour => {
                    return Err(Error::Precondition(alloc::format!(
                        "kept edges meet at vertex {x} with colours {c} and {}",
                        e.colour
                    )))
                }
                _ => colours[x] = Some(e.colour),
            }
        }
    }
    Ok(VertexColouring(colours.into_iter().map(|c| c.unwrap_or(1)).collect()))
}
