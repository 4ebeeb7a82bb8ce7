//! `O(n^2)` solver for complete graphs with two edge colours.
//!
//! Colour a set `V1` with the first colour and the rest `V2` with the second.
//! On a complete graph the number of stable edges is
//! `sum_{v in V1} d1(v) + C(|V2|, 2) - m1`, where `d1(v)` counts first-colour
//! edges at `v` and `m1` counts all first-colour edges. For a fixed `|V1| = k`
//! the best choice is the `k` vertices of largest `d1`, so one sort and a
//! sweep over `k` finds the optimum.
//!
//! Using any third colour on a vertex never helps: every edge at it carries
//! one of the two colours, so the vertex could take that colour instead
//! without losing a stable edge.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Colour, EdgeColouredGraph, VertexColouring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteInstanceSummary {
    /// Number of first-colour edges at each vertex.
    pub d1: Vec<usize>,
    /// Total number of first-colour edges.
    pub m1: usize,
    pub n: usize,
    /// Label playing the first colour.
    pub first: Colour,
    /// Label playing the second colour.
    pub second: Colour,
}

impl CompleteInstanceSummary {
    /// Summarizes a complete graph using at most two colours. The smaller
    /// label in use plays the first colour; when only one label is used, label
    /// 1 is first and the used label (or 2) second.
    pub fn from_graph(g: &EdgeColouredGraph) -> Result<Self> {
        if !g.is_complete() {
            return Err(Error::Unsupported(format!(
                "complete engine needs a complete graph; {} vertices but {} edges",
                g.vertex_count(),
                g.edge_count()
            )));
        }
        let used = g.colours_in_use();
        let (first, second) = match used.as_slice() {
            [] | [1] => (1, 2),
            [c] => (1, *c),
            [a, b] => (*a, *b),
            _ => {
                return Err(Error::Unsupported(format!(
                    "complete engine needs at most two edge colours, found {}",
                    used.len()
                )))
            }
        };
        let mut d1 = vec![0; g.vertex_count()];
        let mut m1 = 0;
        for e in g.edges().iter().filter(|e| e.colour == first) {
            d1[e.u] += 1;
            d1[e.v] += 1;
            m1 += 1;
        }
        Ok(Self { d1, m1, n: g.vertex_count(), first, second })
    }
}

fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Stable edges when exactly the vertices flagged in `in_v1` take the first colour.
pub fn stable_count_formula(summary: &CompleteInstanceSummary, in_v1: &[bool]) -> Result<usize> {
    if in_v1.len() != summary.n {
        return Err(Error::ColouringLength { expected: summary.n, got: in_v1.len() });
    }
    let degree_sum: usize = (0..summary.n).filter(|&v| in_v1[v]).map(|v| summary.d1[v]).sum();
    let v2 = in_v1.iter().filter(|&&b| !b).count();
    Ok(degree_sum + pairs(v2) - summary.m1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteSolution {
    pub opt: usize,
    pub colouring: VertexColouring,
}

/// Optimal colouring of a bicoloured complete graph. Ties between sizes of
/// the first-colour side go to the larger side.
pub fn solve_complete(g: &EdgeColouredGraph) -> Result<CompleteSolution> {
    if g.vertex_count() == 0 {
        return Err(Error::Unsupported("complete engine needs at least one vertex".into()));
    }
    let summary = CompleteInstanceSummary::from_graph(g)?;
    let n = summary.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| summary.d1[b].cmp(&summary.d1[a]).then(a.cmp(&b)));

    // Value for k = 0 is C(n, 2) - m1; each step adds d1 of the next vertex
    // and shrinks the pair term.
    let mut prefix = 0usize;
    let mut best = (pairs(n) - summary.m1, 0usize);
    for (k, &v) in order.iter().enumerate().map(|(i, v)| (i + 1, v)) {
        prefix += summary.d1[v];
        let value = prefix + pairs(n - k) - summary.m1;
        if value >= best.0 {
            best = (value, k);
        }
    }
    let mut colouring = VertexColouring::uniform(n, summary.second);
    for &v in &order[..best.1] {
        colouring.set(v, summary.first);
    }
    Ok(CompleteSolution { opt: best.0, colouring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::stable_count;

    fn complete(n: usize, t: Colour, colour: impl Fn(usize, usize) -> Colour) -> EdgeColouredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, colour(u, v)));
            }
        }
        EdgeColouredGraph::new(n, t, edges).unwrap()
    }

    #[test]
    fn formula_examples() {
        let k3 = complete(3, 1, |_, _| 1);
        let s = CompleteInstanceSummary::from_graph(&k3).unwrap();
        assert_eq!(stable_count_formula(&s, &[true; 3]).unwrap(), 3);

        let g = complete(3, 2, |u, v| if (u, v) == (0, 1) { 2 } else { 1 });
        let s = CompleteInstanceSummary::from_graph(&g).unwrap();
        assert_eq!(s.d1, vec![1, 1, 2]);
        assert_eq!(stable_count_formula(&s, &[true; 3]).unwrap(), 2);
        // Empty V1 stabilizes exactly the second-colour edges.
        assert_eq!(stable_count_formula(&s, &[false; 3]).unwrap(), 1);
    }

    #[test]
    fn summary_degree_sum_is_twice_m1() {
        let g = complete(6, 2, |u, v| if (u + 2 * v) % 3 == 0 { 1 } else { 2 });
        let s = CompleteInstanceSummary::from_graph(&g).unwrap();
        assert_eq!(s.d1.iter().sum::<usize>(), 2 * s.m1);
        assert!(s.d1.iter().all(|&d| d <= 5));
    }

    #[test]
    fn monochromatic_cliques() {
        let k4 = complete(4, 2, |_, _| 1);
        let sol = solve_complete(&k4).unwrap();
        assert_eq!(sol.opt, 6);
        assert_eq!(sol.colouring, VertexColouring::uniform(4, 1));

        let k4 = complete(4, 2, |_, _| 2);
        let sol = solve_complete(&k4).unwrap();
        assert_eq!(sol.opt, 6);
        assert_eq!(sol.colouring, VertexColouring::uniform(4, 2));
    }

    #[test]
    fn single_vertex() {
        let g = EdgeColouredGraph::new(1, 2, []).unwrap();
        let sol = solve_complete(&g).unwrap();
        assert_eq!(sol.opt, 0);
        assert_eq!(sol.colouring.as_slice(), &[1]);
    }

    #[test]
    fn rejects_unsupported_inputs() {
        let path = EdgeColouredGraph::new(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert!(matches!(solve_complete(&path), Err(Error::Unsupported(_))));
        let k3 = complete(3, 3, |u, v| (u + v) as Colour);
        assert!(matches!(solve_complete(&k3), Err(Error::Unsupported(_))));
        let empty = EdgeColouredGraph::new(0, 1, []).unwrap();
        assert!(solve_complete(&empty).is_err());
    }

    #[test]
    fn reported_opt_matches_its_colouring() {
        let g = complete(7, 2, |u, v| if (u * v + u) % 3 == 1 { 2 } else { 1 });
        let sol = solve_complete(&g).unwrap();
        assert_eq!(stable_count(&g, &sol.colouring), sol.opt);
    }
}
