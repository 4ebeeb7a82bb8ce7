//! Exact solver for graphs using at most two edge colours, by reduction to
//! minimum `(s, t)`-cut.
//!
//! Every edge `e = {u, v}` becomes a node `x_e`. An edge of the source-side
//! colour gets arcs `s -> x_e -> u` and `x_e -> v`; an edge of the sink-side
//! colour gets `u -> x_e`, `v -> x_e -> t`. Each conflict pair at a vertex
//! then yields exactly one `s -> t` path, whose two outer arcs stand for the
//! two edges. Outer (external) arcs have capacity 1 and inner (middle) arcs
//! capacity `m + 1`, so no minimum cut can use a middle arc and the external
//! arcs of a minimum cut are a minimum set of edges to delete.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{colouring_from_stable_subgraph, Colour, EdgeColouredGraph, VertexColouring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcRole {
    /// Unit arc standing for source edge `edge`.
    External { edge: usize },
    /// High-capacity arc between an edge node and one of its endpoints.
    Middle { edge: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    node_count: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
    roles: Vec<ArcRole>,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Self {
        Self { node_count, source, sink, arcs: Vec::new(), roles: Vec::new() }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64, role: ArcRole) -> usize {
        assert!(from < self.node_count && to < self.node_count, "arc endpoint out of range");
        self.arcs.push(Arc { from, to, capacity });
        self.roles.push(role);
        self.arcs.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn role(&self, arc: usize) -> ArcRole {
        self.roles[arc]
    }

    /// Whether `sink` is reachable from `source` using only arcs not in `removed`.
    pub fn connects_without(&self, removed: &BTreeSet<usize>) -> bool {
        let mut out = vec![Vec::new(); self.node_count];
        for (i, a) in self.arcs.iter().enumerate() {
            if a.capacity > 0 && !removed.contains(&i) {
                out[a.from].push(a.to);
            }
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(x) = stack.pop() {
            if x == self.sink {
                return true;
            }
            for &y in &out[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// The two colours of a bicoloured graph, by first occurrence: the first
/// colour seen sits on the source side.
fn colour_roles(g: &EdgeColouredGraph) -> Result<(Option<Colour>, Option<Colour>)> {
    let mut first = None;
    let mut second = None;
    for e in g.edges() {
        match (first, second) {
            (None, _) => first = Some(e.colour),
            (Some(a), _) if a == e.colour => {}
            (Some(_), None) => second = Some(e.colour),
            (Some(_), Some(b)) if b == e.colour => {}
            (Some(a), Some(b)) => {
                return Err(Error::Unsupported(format!(
                    "min-cut engine needs at most two edge colours, found {a}, {b} and {}",
                    e.colour
                )))
            }
        }
    }
    Ok((first, second))
}

/// Node of the flow network standing for source edge `edge`.
pub fn edge_node(g: &EdgeColouredGraph, edge: usize) -> usize {
    g.vertex_count() + edge
}

/// Builds the flow network with `n + m + 2` nodes and `3m` arcs. Vertices keep
/// their ids, edge `e` is node `n + e`, the source is `n + m` and the sink `n + m + 1`.
pub fn build_flow_network(g: &EdgeColouredGraph) -> Result<FlowNetwork> {
    let (source_colour, _) = colour_roles(g)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut net = FlowNetwork::new(n + m + 2, n + m, n + m + 1);
    let middle = m as u64 + 1;
    for (i, e) in g.edges().iter().enumerate() {
        let x = n + i;
        if Some(e.colour) == source_colour {
            net.add_arc(net.source, x, 1, ArcRole::External { edge: i });
            net.add_arc(x, e.u, middle, ArcRole::Middle { edge: i });
            net.add_arc(x, e.v, middle, ArcRole::Middle { edge: i });
        } else {
            net.add_arc(e.u, x, middle, ArcRole::Middle { edge: i });
            net.add_arc(e.v, x, middle, ArcRole::Middle { edge: i });
            net.add_arc(x, net.sink, 1, ArcRole::External { edge: i });
        }
    }
    Ok(net)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u64,
    /// Flow on each arc of the network, indexed like [`FlowNetwork::arcs`].
    pub flow: Vec<u64>,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
    /// Arcs leaving `source_side`, ascending.
    pub cut_arcs: Vec<usize>,
}

/// Residual network in forward-star form. Arc `2i` is the forward copy of
/// network arc `i`, arc `2i + 1` its reverse.
struct Residual {
    adjacency: Vec<Vec<usize>>,
    to: Vec<usize>,
    capacity: Vec<u64>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let mut adjacency = vec![Vec::new(); net.node_count];
        let mut to = Vec::with_capacity(2 * net.arcs.len());
        let mut capacity = Vec::with_capacity(2 * net.arcs.len());
        for (i, a) in net.arcs.iter().enumerate() {
            adjacency[a.from].push(2 * i);
            adjacency[a.to].push(2 * i + 1);
            to.push(a.to);
            capacity.push(a.capacity);
            to.push(a.from);
            capacity.push(0);
        }
        Self { adjacency, to, capacity }
    }

    fn tail(&self, arc: usize) -> usize {
        self.to[arc ^ 1]
    }

    /// BFS distances from `s` over arcs with spare capacity.
    fn levels(&self, s: usize, level: &mut [usize]) {
        level.fill(usize::MAX);
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adjacency[x] {
                let y = self.to[a];
                if self.capacity[a] > 0 && level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    /// Saturates the level graph with augmenting paths (a blocking flow).
    fn blocking_flow(&mut self, s: usize, t: usize, level: &mut [usize], next: &mut [usize]) -> u64 {
        next.fill(0);
        let mut pushed = 0;
        let mut path: Vec<usize> = Vec::new();
        let mut x = s;
        loop {
            if x == t {
                let bottleneck = path.iter().map(|&a| self.capacity[a]).min().unwrap_or(0);
                for &a in &path {
                    self.capacity[a] -= bottleneck;
                    self.capacity[a ^ 1] += bottleneck;
                }
                pushed += bottleneck;
                // Retreat to the tail of the first saturated arc.
                let cut = path.iter().position(|&a| self.capacity[a] == 0).unwrap_or(0);
                x = self.tail(path[cut]);
                path.truncate(cut);
                continue;
            }
            let mut advanced = false;
            while next[x] < self.adjacency[x].len() {
                let a = self.adjacency[x][next[x]];
                let y = self.to[a];
                if self.capacity[a] > 0 && level[y] == level[x].wrapping_add(1) {
                    path.push(a);
                    x = y;
                    advanced = true;
                    break;
                }
                next[x] += 1;
            }
            if !advanced {
                if x == s {
                    return pushed;
                }
                // Dead end: drop it from the level graph.
                level[x] = usize::MAX;
                let a = path.pop().expect("non-source node has an incoming path arc");
                x = self.tail(a);
                next[x] += 1;
            }
        }
    }
}

/// Maximum `s -> t` flow by blocking-flow phases over BFS level graphs, and
/// the minimum cut on the source side of the final residual network.
pub fn max_flow_min_cut(net: &FlowNetwork) -> MaxFlow {
    let (s, t) = (net.source, net.sink);
    let mut residual = Residual::new(net);
    let mut level = vec![usize::MAX; net.node_count];
    let mut next = vec![0usize; net.node_count];
    let mut value = 0;
    if s != t {
        loop {
            residual.levels(s, &mut level);
            if level[t] == usize::MAX {
                break;
            }
            value += residual.blocking_flow(s, t, &mut level, &mut next);
        }
    }
    residual.levels(s, &mut level);
    let source_side: Vec<bool> = level.iter().map(|&l| l != usize::MAX).collect();
    let flow: Vec<u64> = (0..net.arcs.len()).map(|i| residual.capacity[2 * i + 1]).collect();
    let cut_arcs = net
        .arcs
        .iter()
        .enumerate()
        .filter(|(_, a)| source_side[a.from] && !source_side[a.to])
        .map(|(i, _)| i)
        .collect();
    MaxFlow { value, flow, source_side, cut_arcs }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSolution {
    pub cut_value: usize,
    /// Source edges whose deletion leaves no conflict pair, ascending.
    pub deleted_edges: Vec<usize>,
    pub colouring: VertexColouring,
}

impl CutSolution {
    pub fn stable_count(&self, g: &EdgeColouredGraph) -> usize {
        g.edge_count() - self.cut_value
    }
}

/// Optimal colouring of a graph with at most two edge colours.
pub fn solve_bicoloured(g: &EdgeColouredGraph) -> Result<CutSolution> {
    let net = build_flow_network(g)?;
    let flow = max_flow_min_cut(&net);
    let mut deleted = BTreeSet::new();
    for &arc in &flow.cut_arcs {
        match net.role(arc) {
            ArcRole::External { edge } => {
                deleted.insert(edge);
            }
            ArcRole::Middle { .. } => unreachable!("a minimum cut never uses a middle arc"),
        }
    }
    debug_assert_eq!(deleted.len() as u64, flow.value);
    let kept: BTreeSet<usize> = (0..g.edge_count()).filter(|i| !deleted.contains(i)).collect();
    let colouring = colouring_from_stable_subgraph(g, &kept)?;
    Ok(CutSolution {
        cut_value: deleted.len(),
        deleted_edges: deleted.into_iter().collect(),
        colouring,
    })
}
