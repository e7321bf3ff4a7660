//! Exhaustive search for facet-Hamiltonian walks.
//!
//! Depth-first search over simple walks. The dominant prune: a facet whose
//! interval has ended may never be touched again. A facet's interval has
//! ended exactly when the facet was touched but does not contain the
//! current endpoint, so one touch counter per facet suffices. For cycles,
//! facets of the (canonical, minimal) start vertex are exempt because
//! their interval may wrap; the closing verification rejects any walk the
//! relaxation lets through.
//!
//! Exploration order is ascending everywhere, so results and exhaustion
//! certificates are deterministic and reproducible.

use crate::skeleton::{FacetedSkeleton, Walk};
use crate::verify::verify_walk;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Cycle,
    Path,
}

/// Search outcome: a verified walk, verified exhaustion, or budget out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Walk),
    None,
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchStats {
    pub expansions: u64,
}

struct Ctx<'a> {
    sk: &'a FacetedSkeleton,
    facets_of: Vec<Vec<usize>>,
    mode: SearchMode,
    budget: u64,
    expansions: u64,
    max_vertices: Option<usize>,
    start: usize,
    min_allowed: usize,
    facet_count: usize,
}

enum Signal {
    Found(Walk),
    Exhausted,
    BudgetOut,
}

pub fn search_fh(
    sk: &FacetedSkeleton,
    mode: SearchMode,
    budget: u64,
) -> (SearchOutcome, SearchStats) {
    let facets_of = sk.facets_of_vertex();
    let k = sk.facet_count();
    // On a simple d-polytope a facet-Hamiltonian cycle has at most k edges,
    // and a facet-Hamiltonian path has exactly k + 1 - d vertices: the
    // first vertex touches d facets and every further step touches exactly
    // one facet not seen before (re-entries are pruned).
    let max_vertices = sk.simple_dimension().map(|d| match mode {
        SearchMode::Cycle => k,
        SearchMode::Path => k + 1 - d,
    });
    let mut total = 0u64;
    for start in 0..sk.n {
        let mut ctx = Ctx {
            sk,
            facets_of: facets_of.clone(),
            mode,
            budget: budget.saturating_sub(total),
            expansions: 0,
            max_vertices,
            start,
            min_allowed: if mode == SearchMode::Cycle { start } else { 0 },
            facet_count: k,
        };
        let mut visited = vec![false; sk.n];
        visited[start] = true;
        let mut touches = vec![0u32; k];
        let mut touched_total = 0usize;
        for &f in &facets_of[start] {
            touches[f] += 1;
            touched_total += 1;
        }
        let mut walk = vec![start];
        let sig = dfs(&mut ctx, &mut walk, &mut visited, &mut touches, &mut touched_total);
        total += ctx.expansions;
        match sig {
            Signal::Found(w) => return (SearchOutcome::Found(w), SearchStats { expansions: total }),
            Signal::BudgetOut => {
                return (SearchOutcome::Unknown, SearchStats { expansions: total })
            }
            Signal::Exhausted => {}
        }
    }
    (SearchOutcome::None, SearchStats { expansions: total })
}

fn dfs(
    ctx: &mut Ctx,
    walk: &mut Vec<usize>,
    visited: &mut [bool],
    touches: &mut [u32],
    touched_total: &mut usize,
) -> Signal {
    ctx.expansions += 1;
    if ctx.expansions > ctx.budget {
        return Signal::BudgetOut;
    }
    let cur = *walk.last().unwrap();

    if ctx.mode == SearchMode::Path
        && walk.len() >= 2
        && *touched_total == ctx.facet_count
    {
        let cand = Walk::path(walk.clone());
        if verify_walk(ctx.sk, &cand).is_facet_hamiltonian {
            return Signal::Found(cand);
        }
    }

    for idx in 0..ctx.sk.adj[cur].len() {
        let next = ctx.sk.adj[cur][idx];
        if next < ctx.min_allowed {
            continue;
        }
        if ctx.mode == SearchMode::Cycle
            && next == ctx.start
            && walk.len() >= 3
            && *touched_total == ctx.facet_count
        {
            let cand = Walk::cycle(walk.clone());
            if verify_walk(ctx.sk, &cand).is_facet_hamiltonian {
                return Signal::Found(cand);
            }
        }
        if visited[next] {
            continue;
        }
        if let Some(m) = ctx.max_vertices {
            if walk.len() + 1 > m {
                continue;
            }
        }
        // re-entry prune
        let mut dead = false;
        for &f in &ctx.facets_of[next] {
            if touches[f] > 0 && !ctx.facets_of[cur].contains(&f) {
                let wrap_exempt =
                    ctx.mode == SearchMode::Cycle && ctx.facets_of[ctx.start].contains(&f);
                if !wrap_exempt {
                    dead = true;
                    break;
                }
            }
        }
        if dead {
            continue;
        }
        visited[next] = true;
        walk.push(next);
        for &f in &ctx.facets_of[next] {
            if touches[f] == 0 {
                *touched_total += 1;
            }
            touches[f] += 1;
        }
        let sig = dfs(ctx, walk, visited, touches, touched_total);
        for &f in &ctx.facets_of[next] {
            touches[f] -= 1;
            if touches[f] == 0 {
                *touched_total -= 1;
            }
        }
        walk.pop();
        visited[next] = false;
        if let Signal::Found(_) | Signal::BudgetOut = sig {
            return sig;
        }
    }
    Signal::Exhausted
}

/// Converts a facet-Hamiltonian cycle on a simple 3-polytope with a planar
/// embedding into a facet-Hamiltonian path.
///
/// If some facet contains the whole cycle, two consecutive edges are
/// deleted. Otherwise two consecutive cycle vertices whose non-cycle edges
/// lie on opposite sides of the cycle are located (the last two vertices
/// seeing a facet met in two or more edges have this property), and the
/// three cycle edges incident to them are deleted.
pub fn cycle_to_path_simple3(
    sk: &FacetedSkeleton,
    cycle: &Walk,
) -> Result<Walk, Cycle2PathError> {
    if sk.simple_dimension() != Some(3) {
        return Err(Cycle2PathError::NotSimple3);
    }
    let embedding = sk.embedding.as_ref().ok_or(Cycle2PathError::MissingEmbedding)?;
    if !cycle.closed || !verify_walk(sk, cycle).is_facet_hamiltonian {
        return Err(Cycle2PathError::InputNotFacetHamiltonian);
    }
    let vs = &cycle.vertices;
    let l = vs.len();

    // never-left facet: a facet containing every cycle vertex
    let never_left = sk
        .facets
        .values()
        .any(|f| vs.iter().all(|v| f.binary_search(v).is_ok()));
    if never_left {
        // delete the two edges around vs[0]
        let path: Vec<usize> = vs[1..].to_vec();
        let walk = Walk::path(path);
        let rep = verify_walk(sk, &walk);
        debug_assert!(rep.is_facet_hamiltonian);
        return Ok(walk);
    }

    // classify the non-cycle edge at each cycle vertex as left or right of
    // the cycle, using the rotation system
    let side = |i: usize| -> bool {
        let v = vs[i];
        let prev = vs[(i + l - 1) % l];
        let next = vs[(i + 1) % l];
        let rot = &embedding[v];
        let other = *rot.iter().find(|&&w| w != prev && w != next).unwrap();
        // position of `other` relative to the oriented corner prev -> next
        let p = rot.iter().position(|&w| w == prev).unwrap();
        let mut q = rot.iter().position(|&w| w == other).unwrap();
        let mut r = rot.iter().position(|&w| w == next).unwrap();
        q = (q + rot.len() - p) % rot.len();
        r = (r + rot.len() - p) % rot.len();
        q < r
    };
    for i in 0..l {
        let j = (i + 1) % l;
        if side(i) != side(j) {
            // delete edges (i-1,i), (i,i+1), (i+1,i+2): path from i+2 around to i-1
            let mut path = Vec::with_capacity(l - 2);
            let mut p = (j + 1) % l;
            loop {
                path.push(vs[p]);
                if p == (i + l - 1) % l {
                    break;
                }
                p = (p + 1) % l;
            }
            let walk = Walk::path(path);
            if verify_walk(sk, &walk).is_facet_hamiltonian {
                return Ok(walk);
            }
        }
    }
    Err(Cycle2PathError::NoOppositePair)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Cycle2PathError {
    #[error("skeleton is not a simple 3-polytope")]
    NotSimple3,
    #[error("planar embedding required")]
    MissingEmbedding,
    #[error("input cycle is not facet-Hamiltonian")]
    InputNotFacetHamiltonian,
    #[error("no consecutive pair with opposite-side chords found")]
    NoOppositePair,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::LabeledGraph;
    use crate::skeleton::skeleton_from_graph_associahedron;

    const BUDGET: u64 = 50_000_000;

    #[test]
    fn dodecahedron_has_fh_cycle_of_length_12() {
        let sk = fixtures::dodecahedron();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        match out {
            SearchOutcome::Found(w) => {
                assert_eq!(w.len_edges(), 12);
                assert!(verify_walk(&sk, &w).is_facet_hamiltonian);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn non_fh_fixture_returns_none() {
        let sk = fixtures::non_facet_hamiltonian_fixture();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        assert_eq!(out, SearchOutcome::None);
    }

    #[test]
    fn tetrahedron_cycles_of_length_3_and_4() {
        let sk = fixtures::tetrahedron();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        let found = match out {
            SearchOutcome::Found(w) => w,
            other => panic!("{other:?}"),
        };
        assert!(found.len_edges() == 3 || found.len_edges() == 4);
        // both lengths are realizable
        let r3 = verify_walk(&sk, &Walk::cycle(vec![0, 1, 2]));
        assert!(r3.is_facet_hamiltonian);
        let r4 = verify_walk(&sk, &Walk::cycle(vec![0, 1, 2, 3]));
        assert!(r4.is_facet_hamiltonian);
    }

    #[test]
    fn cyclohedron_c4_cycle_of_length_12() {
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::cycle(4)).unwrap();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        match out {
            SearchOutcome::Found(w) => assert_eq!(w.len_edges(), 12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let sk = fixtures::dodecahedron();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, 5);
        assert_eq!(out, SearchOutcome::Unknown);
    }

    #[test]
    fn search_results_verify_on_small_graph_associahedra() {
        for g in [
            LabeledGraph::complete(4),
            LabeledGraph::path(5),
            LabeledGraph::cycle(5),
            LabeledGraph::star(5),
        ] {
            let (sk, _) = skeleton_from_graph_associahedron(&g).unwrap();
            let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
            match out {
                SearchOutcome::Found(w) => {
                    assert!(verify_walk(&sk, &w).is_facet_hamiltonian)
                }
                other => panic!("expected cycle on graph associahedron, got {other:?}"),
            }
        }
    }

    #[test]
    fn fh_cycle_length_equals_facet_count_without_universal_facets() {
        // A(P_4): no universal tube, simple; every returned cycle has length k
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::path(4)).unwrap();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        match out {
            SearchOutcome::Found(w) => assert_eq!(w.len_edges(), sk.facet_count()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dodecahedron_cycle_to_path() {
        let sk = fixtures::dodecahedron();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        let cycle = match out {
            SearchOutcome::Found(w) => w,
            other => panic!("{other:?}"),
        };
        let path = cycle_to_path_simple3(&sk, &cycle).unwrap();
        assert_eq!(path.len_edges(), 9); // k - 3 with k = 12
        assert!(verify_walk(&sk, &path).is_facet_hamiltonian);
        // endpoints share no facet
        let fov = sk.facets_of_vertex();
        let (a, b) = (path.vertices[0], *path.vertices.last().unwrap());
        assert!(fov[a].iter().all(|f| !fov[b].contains(f)));
    }

    #[test]
    fn cube_petrie_cycle_to_path() {
        let sk = fixtures::cube();
        let (out, _) = search_fh(&sk, SearchMode::Cycle, BUDGET);
        let cycle = match out {
            SearchOutcome::Found(w) => w,
            other => panic!("{other:?}"),
        };
        assert_eq!(cycle.len_edges(), 6);
        let path = cycle_to_path_simple3(&sk, &cycle).unwrap();
        assert_eq!(path.len_edges(), 3);
        assert!(verify_walk(&sk, &path).is_facet_hamiltonian);
    }

    #[test]
    fn tetrahedron_two_edge_deletion_branch() {
        let sk = fixtures::tetrahedron();
        let cycle = Walk::cycle(vec![0, 1, 2]); // lies on a never-left facet
        let path = cycle_to_path_simple3(&sk, &cycle).unwrap();
        assert_eq!(path.len_edges(), 1);
        assert!(verify_walk(&sk, &path).is_facet_hamiltonian);
    }
}
