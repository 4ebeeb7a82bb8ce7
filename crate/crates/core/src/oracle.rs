//! Brute-force reference solvers.
//!
//! Every function here enumerates its whole search space and refuses inputs
//! above a size guard. Nothing in this module is shared with the engines it
//! is used to check.

use alloc::vec;
use alloc::vec::Vec;

use crate::conflict::ConflictGraph;
use crate::error::{Error, Result};
use crate::fpt_unstable::CondensedGraph;
use crate::graph::{Colour, EdgeColouredGraph, VertexColouring};

/// Default cap on the number of colourings the clustering oracle visits.
pub const DEFAULT_SEARCH_BOUND: u128 = 100_000_000;
pub const MAX_INDEPENDENT_SET_NODES: usize = 24;
pub const MAX_COVER_NODES: usize = 20;
pub const MAX_MATCHING_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub opt_stable: usize,
    pub opt_colouring: VertexColouring,
    pub min_deletion: usize,
}

/// Candidate colours per vertex: the colours of its incident edges, or
/// `[1]` for an isolated vertex. A colour no incident edge carries makes
/// nothing stable at that vertex, so the restriction keeps the optimum.
fn restricted_choices(g: &EdgeColouredGraph) -> Vec<Vec<Colour>> {
    (0..g.vertex_count())
        .map(|v| {
            let c = g.incident_colours(v);
            if c.is_empty() {
                vec![1]
            } else {
                c
            }
        })
        .collect()
}

fn space_of(choices: &[Vec<Colour>]) -> u128 {
    choices
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
}

/// Number of colourings [`brute_force_clustering`] would visit.
pub fn search_space(g: &EdgeColouredGraph) -> u128 {
    space_of(&restricted_choices(g))
}

/// Visits every combination of per-vertex choices, odometer style.
fn for_each_colouring(choices: &[Vec<Colour>], mut visit: impl FnMut(&[Colour])) {
    let mut digit = vec![0usize; choices.len()];
    let mut current: Vec<Colour> = choices.iter().map(|c| c[0]).collect();
    loop {
        visit(&current);
        let mut pos = 0;
        loop {
            if pos == choices.len() {
                return;
            }
            digit[pos] += 1;
            if digit[pos] < choices[pos].len() {
                current[pos] = choices[pos][digit[pos]];
                break;
            }
            digit[pos] = 0;
            current[pos] = choices[pos][0];
            pos += 1;
        }
    }
}

fn best_colouring(g: &EdgeColouredGraph, choices: &[Vec<Colour>], bound: u128) -> Result<OracleResult> {
    let space = space_of(choices);
    if space > bound {
        return Err(Error::SizeLimit { space, bound });
    }
    let mut best = 0usize;
    let mut best_colours: Vec<Colour> = choices.iter().map(|c| c[0]).collect();
    let mut first = true;
    for_each_colouring(choices, |colours| {
        let stable = g
            .edges()
            .iter()
            .filter(|e| colours[e.u] == e.colour && colours[e.v] == e.colour)
            .count();
        if first || stable > best {
            first = false;
            best = stable;
            best_colours.copy_from_slice(colours);
        }
    });
    Ok(OracleResult {
        opt_stable: best,
        opt_colouring: VertexColouring::new(best_colours),
        min_deletion: g.edge_count() - best,
    })
}

pub fn brute_force_clustering(g: &EdgeColouredGraph) -> Result<OracleResult> {
    brute_force_clustering_bounded(g, DEFAULT_SEARCH_BOUND)
}

/// Exact optimum over all colourings, each vertex restricted to its incident colours.
pub fn brute_force_clustering_bounded(g: &EdgeColouredGraph, bound: u128) -> Result<OracleResult> {
    best_colouring(g, &restricted_choices(g), bound)
}

/// Exact optimum over all `t^n` colourings, with no restriction at all.
pub fn brute_force_clustering_unrestricted(
    g: &EdgeColouredGraph,
    bound: u128,
) -> Result<OracleResult> {
    let all: Vec<Colour> = (1..=g.colour_count().max(1)).collect();
    let choices = vec![all; g.vertex_count()];
    best_colouring(g, &choices, bound)
}

/// Minimum total weight of unstable edges of a condensed graph over all
/// colourings of its vertices.
pub fn brute_force_weighted_clustering(gstar: &CondensedGraph, bound: u128) -> Result<u64> {
    let base = gstar.base();
    let choices = restricted_choices(base);
    let space = space_of(&choices);
    if space > bound {
        return Err(Error::SizeLimit { space, bound });
    }
    let weights = gstar.weights();
    let mut best = u64::MAX;
    for_each_colouring(&choices, |colours| {
        let unstable: u64 = base
            .edges()
            .iter()
            .zip(weights)
            .filter(|(e, _)| !(colours[e.u] == e.colour && colours[e.v] == e.colour))
            .map(|(_, &w)| w)
            .sum();
        best = best.min(unstable);
    });
    Ok(best)
}

/// Largest independent set, by exhaustive include/exclude recursion.
pub fn brute_force_independent_set(x: &ConflictGraph) -> Result<usize> {
    let n = x.node_count();
    if n > MAX_INDEPENDENT_SET_NODES {
        return Err(Error::SizeLimit {
            space: n as u128,
            bound: MAX_INDEPENDENT_SET_NODES as u128,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| x.neighbours(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();

    fn go(v: usize, chosen: u32, size: usize, masks: &[u32]) -> usize {
        if v == masks.len() {
            return size;
        }
        let skip = go(v + 1, chosen, size, masks);
        if masks[v] & chosen == 0 {
            skip.max(go(v + 1, chosen | (1 << v), size + 1, masks))
        } else {
            skip
        }
    }
    Ok(go(0, 0, 0, &masks))
}

/// Minimum total weight over all vertex covers, scanning every subset.
pub fn brute_force_weighted_cover(x: &ConflictGraph) -> Result<u64> {
    let n = x.node_count();
    if n > MAX_COVER_NODES {
        return Err(Error::SizeLimit { space: n as u128, bound: MAX_COVER_NODES as u128 });
    }
    let mut best = u64::MAX;
    for mask in 0u32..(1u32 << n) {
        let covers = x
            .edges()
            .iter()
            .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0);
        if covers {
            let w: u64 = (0..n).filter(|&v| mask & (1 << v) != 0).map(|v| x.weight(v)).sum();
            best = best.min(w);
        }
    }
    Ok(best)
}

/// Maximum matching size over all edge subsets.
pub fn brute_force_max_matching(g: &EdgeColouredGraph) -> Result<usize> {
    let m = g.edge_count();
    if m > MAX_MATCHING_EDGES {
        return Err(Error::SizeLimit { space: m as u128, bound: MAX_MATCHING_EDGES as u128 });
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << m) {
        let mut used = vec![false; g.vertex_count()];
        let is_matching = (0..m).filter(|&i| mask & (1 << i) != 0).all(|i| {
            let e = g.edge(i);
            if used[e.u] || used[e.v] {
                return false;
            }
            used[e.u] = true;
            used[e.v] = true;
            true
        });
        if is_matching {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}
