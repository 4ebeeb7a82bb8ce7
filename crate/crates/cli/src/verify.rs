//! Certificate checking. Uses only the graph primitives, never a solver.

use std::collections::BTreeSet;

use colclust_core::graph::{has_conflict_pair, stable_count};
use colclust_core::EdgeColouredGraph;

use crate::format::Certificate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Colouring { stable: usize, meets_k: bool },
    Deletion { deleted: usize, conflict_free: bool, meets_k: bool },
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        match *self {
            Verdict::Colouring { meets_k, .. } => meets_k,
            Verdict::Deletion { conflict_free, meets_k, .. } => conflict_free && meets_k,
        }
    }

    pub fn summary(&self) -> String {
        match *self {
            Verdict::Colouring { stable, .. } => format!("stable={stable}"),
            Verdict::Deletion { deleted, conflict_free, .. } => {
                format!("deleted={deleted} conflict_free={conflict_free}")
            }
        }
    }
}

/// Checks a parsed certificate. For colourings `k` is a lower bound on the
/// stable edges, for deletion sets an upper bound on their size. Without
/// `k` only the structural part is checked.
pub fn verify(g: &EdgeColouredGraph, cert: &Certificate, k: Option<usize>) -> Verdict {
    match cert {
        Certificate::Colouring(f) => {
            let stable = stable_count(g, f);
            Verdict::Colouring { stable, meets_k: k.is_none_or(|k| stable >= k) }
        }
        Certificate::Deletion(deleted) => {
            let set: BTreeSet<usize> = deleted.iter().copied().collect();
            let rest = g.without_edges(&set);
            Verdict::Deletion {
                deleted: set.len(),
                conflict_free: !has_conflict_pair(&rest),
                meets_k: k.is_none_or(|k| set.len() <= k),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use colclust_core::VertexColouring;

    #[test]
    fn triangle_examples() {
        let g = EdgeColouredGraph::new(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let cert = Certificate::Colouring(VertexColouring::uniform(3, 1));
        assert!(verify(&g, &cert, Some(3)).accepted());
        assert!(!verify(&g, &cert, Some(4)).accepted());
        assert_eq!(verify(&g, &cert, None).summary(), "stable=3");
    }

    #[test]
    fn deletion_sets() {
        let path = EdgeColouredGraph::new(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert!(!verify(&path, &Certificate::Deletion(vec![]), None).accepted());
        let one = Certificate::Deletion(vec![1]);
        assert!(verify(&path, &one, Some(1)).accepted());
        assert!(!verify(&path, &one, Some(0)).accepted());
        assert_eq!(verify(&path, &one, None).summary(), "deleted=1 conflict_free=true");
    }
}
