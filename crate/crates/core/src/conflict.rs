//! The edge-conflict graph: one node per edge of the source graph, one edge
//! per conflict pair.
//!
//! Stable edge sets of a colouring are exactly the independent sets of this
//! graph, and deletion sets that destroy every conflict pair are exactly its
//! vertex covers. The graph can have `O(mn)` edges, so production solvers
//! only build it for condensed kernels.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::fpt_unstable::CondensedGraph;
use crate::graph::{conflict_pairs, EdgeColouredGraph};
use crate::oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    weights: Vec<u64>,
    edges: Vec<(usize, usize)>,
    origin: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    /// Builds a graph directly from node weights and node pairs. Node `i`
    /// is recorded as originating from source edge `i`.
    pub fn from_parts(weights: Vec<u64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = weights.len();
        if weights.contains(&0) {
            return Err(Error::Precondition("node weights must be at least 1".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            let before = list.len();
            list.sort_unstable();
            list.dedup();
            if list.len() != before {
                return Err(Error::Precondition("duplicate conflict edge".into()));
            }
        }
        Ok(Self { origin: (0..n).collect(), weights, edges, adjacency })
    }

    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, node: usize) -> u64 {
        self.weights[node]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// Index of the source edge this node stands for.
    pub fn origin(&self, node: usize) -> usize {
        self.origin[node]
    }

    /// Checks that `nodes` touches every edge.
    pub fn is_vertex_cover(&self, nodes: &[usize]) -> bool {
        let mut chosen = vec![false; self.node_count()];
        for &x in nodes {
            chosen[x] = true;
        }
        self.edges.iter().all(|&(a, b)| chosen[a] || chosen[b])
    }

    /// Graphviz rendering; each node is labelled with its source edge and weight.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph conflict {\n");
        for node in 0..self.node_count() {
            let _ = writeln!(
                out,
                "  n{node} [label=\"e{} w={}\"];",
                self.origin[node], self.weights[node]
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_conflict_graph(g: &EdgeColouredGraph) -> ConflictGraph {
    ConflictGraph::from_parts(vec![1; g.edge_count()], conflict_pairs(g))
        .expect("conflict pairs of a simple graph form a simple graph")
}

/// Conflict graph of a condensed graph, weighted by edge multiplicity.
pub fn build_weighted_conflict_graph(gstar: &CondensedGraph) -> ConflictGraph {
    ConflictGraph::from_parts(gstar.weights().to_vec(), conflict_pairs(gstar.base()))
        .expect("condensed weights are positive")
}

/// Brute-force optimum stable-edge count of `g` next to the brute-force
/// maximum independent set of its conflict graph. The two must agree.
pub fn independent_set_value_equivalence(g: &EdgeColouredGraph) -> Result<(usize, usize)> {
    if g.edge_count() > oracle::MAX_INDEPENDENT_SET_NODES {
        return Err(Error::SizeLimit {
            space: g.edge_count() as u128,
            bound: oracle::MAX_INDEPENDENT_SET_NODES as u128,
        });
    }
    let opt = oracle::brute_force_clustering(g)?.opt_stable;
    let alpha = oracle::brute_force_independent_set(&build_conflict_graph(g))?;
    Ok((opt, alpha))
}
