//! The ground-truth facet-Hamiltonicity verifier.
//!
//! A walk is facet-Hamiltonian when every facet's intersection with it is
//! nonempty and forms a single interval (cyclic for cycles, linear for
//! paths). Interval here means: the positions at which the facet is
//! visited are contiguous.

use crate::skeleton::{FacetedSkeleton, Walk};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Per-facet visit data in a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetVisit {
    pub visited: bool,
    /// Number of maximal contiguous runs of positions on this facet.
    pub interval_count: usize,
    /// Number of walk edges lying on this facet.
    pub edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Consecutive vertices adjacent, closure edge present for cycles,
    /// no repeated vertices, all vertex ids known.
    pub valid_walk: bool,
    /// Human-readable reason when `valid_walk` is false.
    pub walk_defect: Option<String>,
    pub per_facet: BTreeMap<String, FacetVisit>,
    pub is_facet_hamiltonian: bool,
    /// Edge count of the walk.
    pub length: usize,
    /// For simple skeletons: whether every facet contributes at least one
    /// walk edge (holds for every facet-Hamiltonian cycle there).
    pub every_facet_has_edge: Option<bool>,
}

pub fn verify_walk(skeleton: &FacetedSkeleton, walk: &Walk) -> VerificationReport {
    let mut defect = None;
    let vs = &walk.vertices;
    if vs.is_empty() {
        defect = Some("walk is empty".to_string());
    }
    if defect.is_none() {
        if let Some(&bad) = vs.iter().find(|&&v| v >= skeleton.n) {
            defect = Some(format!("unknown vertex {bad}"));
        }
    }
    if defect.is_none() {
        let mut seen = std::collections::BTreeSet::new();
        if let Some(&dup) = vs.iter().find(|&&v| !seen.insert(v)) {
            defect = Some(format!("repeated vertex {dup}"));
        }
    }
    if defect.is_none() {
        for w in vs.windows(2) {
            if !skeleton.has_edge(w[0], w[1]) {
                defect = Some(format!("non-adjacent step {} -> {}", w[0], w[1]));
                break;
            }
        }
    }
    if defect.is_none() && walk.closed {
        if vs.len() < 3 {
            defect = Some("closed walk needs at least 3 vertices".to_string());
        } else if !skeleton.has_edge(*vs.last().unwrap(), vs[0]) {
            defect = Some("closure edge missing".to_string());
        }
    }
    let valid_walk = defect.is_none();

    let mut per_facet = BTreeMap::new();
    let mut all_once = true;
    for (label, facet) in &skeleton.facets {
        let on: Vec<bool> = vs.iter().map(|v| facet.binary_search(v).is_ok()).collect();
        let mut runs = 0;
        for i in 0..on.len() {
            let prev = if i == 0 {
                if walk.closed {
                    on[on.len() - 1]
                } else {
                    false
                }
            } else {
                on[i - 1]
            };
            if on[i] && !prev {
                runs += 1;
            }
        }
        // a cycle entirely on one facet is one cyclic interval
        if walk.closed && runs == 0 && on.iter().any(|&b| b) {
            runs = 1;
        }
        let visited = on.iter().any(|&b| b);
        let mut edge_count = 0;
        for i in 0..vs.len() {
            let j = (i + 1) % vs.len();
            if j == 0 && !walk.closed {
                break;
            }
            if on[i] && on[j] {
                edge_count += 1;
            }
        }
        if !(visited && runs == 1) {
            all_once = false;
        }
        per_facet.insert(
            label.clone(),
            FacetVisit { visited, interval_count: runs, edge_count },
        );
    }

    let every_facet_has_edge = skeleton
        .simple_dimension()
        .map(|_| per_facet.values().all(|f| f.edge_count >= 1));

    VerificationReport {
        valid_walk,
        walk_defect: defect,
        is_facet_hamiltonian: valid_walk && all_once,
        per_facet,
        length: walk.len_edges(),
        every_facet_has_edge,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::skeleton::skeleton_from_graph_associahedron;
    use crate::graph::LabeledGraph;

    #[test]
    fn hexagon_full_cycle_is_fh() {
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::complete(3)).unwrap();
        // the hexagon is a single cycle; walk it in adjacency order
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        while order.len() < 6 {
            let cur = *order.last().unwrap();
            let next = *sk.adj[cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            order.push(next);
        }
        let rep = verify_walk(&sk, &Walk::cycle(order));
        assert!(rep.valid_walk);
        assert!(rep.is_facet_hamiltonian);
        assert_eq!(rep.length, 6);
        assert_eq!(rep.every_facet_has_edge, Some(true));
    }

    #[test]
    fn cube_hamiltonian_cycle_reentering_a_face_is_rejected() {
        let sk = fixtures::cube();
        // brute force over all Hamiltonian cycles of the cube: find one with
        // some face visited in two intervals
        let mut found = false;
        let mut perm = (1..8usize).collect::<Vec<_>>();
        let heap = &mut perm;
        fn permutations(v: &mut Vec<usize>) -> Vec<Vec<usize>> {
            fn rec(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
                if k == v.len() {
                    out.push(v.clone());
                }
                for i in k..v.len() {
                    v.swap(k, i);
                    rec(v, k + 1, out);
                    v.swap(k, i);
                }
            }
            let mut out = Vec::new();
            rec(v, 0, &mut out);
            out
        }
        for p in permutations(heap) {
            let mut cyc = vec![0];
            cyc.extend(p);
            let walk = Walk::cycle(cyc);
            let rep = verify_walk(&sk, &walk);
            if rep.valid_walk && !rep.is_facet_hamiltonian {
                if rep.per_facet.values().any(|f| f.interval_count == 2) {
                    found = true;
                    break;
                }
            }
        }
        assert!(found, "some Hamiltonian cube cycle re-enters a face");
    }

    #[test]
    fn truncated_walk_reports_missing_facet() {
        let sk = fixtures::cube();
        let rep = verify_walk(&sk, &Walk::path(vec![0, 1]));
        assert!(rep.valid_walk);
        assert!(!rep.is_facet_hamiltonian);
        assert!(rep.per_facet.values().any(|f| !f.visited));
    }

    #[test]
    fn unknown_vertex_is_invalid_not_panic() {
        let sk = fixtures::tetrahedron();
        let rep = verify_walk(&sk, &Walk::path(vec![0, 99]));
        assert!(!rep.valid_walk);
        assert!(!rep.is_facet_hamiltonian);
    }

    #[test]
    fn cycle_on_single_facet_counts_one_interval() {
        let sk = fixtures::tetrahedron();
        // triangle 0,1,2 lies entirely on one facet
        let rep = verify_walk(&sk, &Walk::cycle(vec![0, 1, 2]));
        assert!(rep.valid_walk);
        assert!(rep.is_facet_hamiltonian, "tetrahedron 3-cycle is FH");
        assert_eq!(rep.length, 3);
    }
}
