//! Base constructions: paths, cycles and stars, with the endpoint pairs
//! the universal-vertex lifting needs (start = rot of end).

use super::engine::WalkBuilder;
use super::GrassocError;
use crate::graph::{LabeledGraph, VertexSet};
use crate::perm::{rotation_path_positions, rotation_path};
use crate::walks::TubingWalk;

/// Interval [a,b] over vertex indices a..=b as a bitmask.
fn interval(a: usize, b: usize) -> VertexSet {
    debug_assert!(a <= b);
    ((1u64 << (b + 1)) - 1) & !((1u64 << a) - 1)
}

fn as_interval(t: VertexSet) -> (usize, usize) {
    let a = t.trailing_zeros() as usize;
    let b = 63 - t.leading_zeros() as usize;
    debug_assert_eq!(t, interval(a, b), "tube of a path graph is an interval");
    (a, b)
}

/// The downward (or upward) interval-shifting phase of the path-graph
/// construction, restricted to tubes strictly inside vertex range
/// [lo, hi] (0-based, inclusive). A tube [a,b] whose chain successor is
/// [a, b+1] (downward; [a-1, b] upward) shifts one step; ties are broken
/// by increasing tube size. Runs until nothing is flippable.
fn shift_phase(
    builder: &mut WalkBuilder,
    lo: usize,
    hi: usize,
    down: bool,
) -> Result<(), GrassocError> {
    loop {
        let tubes: Vec<VertexSet> = builder
            .current()
            .tubes()
            .iter()
            .copied()
            .filter(|&t| {
                let (a, b) = as_interval(t);
                lo <= a && b <= hi && !(a == lo && b == hi)
            })
            .collect();
        // chain successor inside the range: smallest strict superset, or
        // the full range
        let successor = |t: VertexSet| -> VertexSet {
            tubes
                .iter()
                .copied()
                .filter(|&u| u != t && u & t == t)
                .min_by_key(|u| u.count_ones())
                .unwrap_or_else(|| interval(lo, hi))
        };
        let mut candidates: Vec<VertexSet> = tubes
            .iter()
            .copied()
            .filter(|&t| {
                let (a, b) = as_interval(t);
                let u = successor(t);
                let (c, d) = as_interval(u);
                if down {
                    c == a && d == b + 1
                } else {
                    d == b && c + 1 == a
                }
            })
            .collect();
        candidates.sort_by_key(|t| t.count_ones());
        match candidates.first() {
            None => return Ok(()),
            Some(&t) => {
                let (a, b) = as_interval(t);
                let new = builder.flip_tube(t)?;
                let expect = if down { interval(a + 1, b + 1) } else { interval(a - 1, b - 1) };
                debug_assert_eq!(new, expect, "shift moves the interval one step");
            }
        }
    }
}

/// Facet-Hamiltonian cycle on A(P_n): the downward shifting walk from
/// the identity chain to the reversed chain, closed by flipping the
/// suffix tubes largest-first back into prefixes.
pub fn path_graph_cycle(n: usize) -> Result<TubingWalk, GrassocError> {
    assert!(n >= 3);
    let g = LabeledGraph::path(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    shift_phase(&mut b, 0, n - 1, true)?;
    debug_assert_eq!(b.current_perm().unwrap(), (0..n).rev().collect::<Vec<_>>());
    // closing: suffix [k, n-1] flips to prefix [0, k-1], largest first
    for k in 1..n {
        let new = b.flip_tube(interval(k, n - 1))?;
        debug_assert_eq!(new, interval(0, k - 1), "suffixes close into prefixes");
    }
    let mut walk = b.finish(true);
    debug_assert_eq!(walk.tubings.last(), walk.tubings.first());
    walk.tubings.pop();
    Ok(walk)
}

/// Facet-Hamiltonian path on A(P_n) from chain(1,..,n) to
/// chain(2,..,n,1): prefixes flip to their complements largest-first,
/// then the upward shifting phase runs inside vertices 2..n with the
/// tube {2,..,n} pinned. Start = rot(end), as universal lifting needs.
pub fn fan_base_path(n: usize) -> Result<TubingWalk, GrassocError> {
    assert!(n >= 3);
    let g = LabeledGraph::path(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    for k in (1..n).rev() {
        let new = b.flip_tube(interval(0, k - 1))?;
        debug_assert_eq!(new, interval(k, n - 1), "prefix flips to complement");
    }
    shift_phase(&mut b, 1, n - 1, false)?;
    let mut expect = vec![1];
    expect.extend(2..n);
    expect.push(0);
    debug_assert_eq!(b.current_perm().unwrap(), expect);
    Ok(b.finish(false))
}

/// Facet-Hamiltonian cycle on A(C_n): n phases; each phase flips the
/// tubes by increasing size and cyclically left-shifts the permutation.
pub fn cycle_graph_cycle(n: usize) -> Result<TubingWalk, GrassocError> {
    assert!(n >= 3);
    let g = LabeledGraph::cycle(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    for phase in 0..n {
        let before = b.current_perm().ok_or(GrassocError::NotNested(b.len() - 1))?;
        for size in 1..n {
            b.flip_prefix(size)?;
        }
        let after = b.current_perm().ok_or(GrassocError::NotNested(b.len() - 1))?;
        let mut shifted = before[1..].to_vec();
        shifted.push(before[0]);
        debug_assert_eq!(after, shifted, "phase {phase} is a cyclic left-shift");
    }
    let mut b = b;
    let last = b.tubings().len() - 1;
    debug_assert_eq!(b.tubings()[last], b.tubings()[0]);
    let walk = {
        let mut t = b.finish(true);
        t.tubings.pop();
        t
    };
    Ok(walk)
}

/// Facet-Hamiltonian path on A(C_n) from chain(n,1,..,n-1) to
/// chain(1,..,n): the cycle-graph phases without the last one, reversed.
pub fn cycle_graph_ii_path(n: usize) -> Result<TubingWalk, GrassocError> {
    let g = LabeledGraph::cycle(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    for _phase in 0..n - 1 {
        for size in 1..n {
            b.flip_prefix(size)?;
        }
    }
    let mut expect = vec![n - 1];
    expect.extend(0..n - 1);
    debug_assert_eq!(b.current_perm().unwrap(), expect);
    let mut walk = b.finish(false);
    walk.tubings.reverse();
    Ok(walk)
}

/// Facet-Hamiltonian path on the stellohedron A(S_n) (center vertex
/// index 0) from chain(1,2,..,n) down to the all-leaf-singleton tubing:
/// the lifted clique path on the leaves followed by expelling the center.
pub fn star_fh_path(n: usize) -> Result<TubingWalk, GrassocError> {
    assert!(n >= 3);
    let g = LabeledGraph::star(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    // walk the rotation path on the leaves, center pinned in front
    for p in rotation_path_positions(n - 1) {
        b.flip_prefix(p + 1)?;
    }
    let mut expect = vec![0, n - 1];
    expect.extend(1..n - 1);
    debug_assert_eq!(b.current_perm().unwrap(), expect);
    super::engine::expel(&mut b, 0)?;
    debug_assert!(b.current().tubes().iter().all(|t| t.count_ones() == 1));
    Ok(b.finish(false))
}

/// Closes [`star_fh_path`] into a facet-Hamiltonian cycle: from the
/// all-singleton tubing the leaves fold back into the identity chain.
pub fn star_fh_cycle(n: usize) -> Result<TubingWalk, GrassocError> {
    let path = star_fh_path(n)?;
    let g = path.graph.clone();
    let mut b = WalkBuilder::start(&g, path.tubings.last().unwrap().clone())?;
    // fold the leaf singletons n-1, n-2, .., 1 into prefixes
    for leaf in (1..n).rev() {
        let new = b.flip_tube(1 << leaf)?;
        debug_assert_eq!(new, interval(0, leaf - 1));
    }
    debug_assert_eq!(b.current_perm().unwrap(), (0..n).collect::<Vec<_>>());
    let mut walk = path;
    let mut tail = b.finish(false);
    tail.tubings.remove(0);
    tail.tubings.pop(); // the start chain closes the cycle
    walk.tubings.extend(tail.tubings);
    walk.closed = true;
    Ok(walk)
}

/// Facet-Hamiltonian path on the stellohedron from chain(1,2,..,n) to
/// chain(n,1,..,n-1) (so its reverse satisfies start = rot(end)):
/// kernel phases j = 2..n, each a block of chains (j,1,sigma,..) whose
/// tails walk a reversed rotation path, joined by three-flip bridges.
pub fn star_ii_path(n: usize) -> Result<TubingWalk, GrassocError> {
    assert!(n >= 3);
    let g = LabeledGraph::star(n);
    let mut b = WalkBuilder::start_chain(&g, &(0..n).collect::<Vec<_>>())?;
    for j in 2..=n {
        // bridge into kernel j (vertex index j-1)
        if j == 2 {
            b.flip_prefix(1)?; // {1} -> {2}
        } else if j == 3 {
            b.flip_prefix(2)?; // {1,2} -> {3}
            b.flip_tube(1 << 1)?; // {2} -> {1,3}
        } else {
            b.flip_prefix(j - 1)?; // [1..j-1] -> {1, j-1, j}
            b.flip_tube((1 << 0) | (1 << (j - 2)))?; // {1,j-1} -> {j}
            b.flip_tube(1 << (j - 2))?; // {j-1} -> {1,j}
        }
        // sigma path on {2..j-1}: reversed rotation path positions
        if j >= 4 {
            let mut pos = rotation_path_positions(j - 2);
            pos.reverse();
            for p in pos {
                b.flip_prefix(p + 2)?;
            }
        }
        let perm = b.current_perm().ok_or(GrassocError::NotNested(b.len() - 1))?;
        debug_assert_eq!(perm[0], j - 1, "kernel phase {j}");
    }
    let mut expect = vec![n - 1, 0];
    expect.extend(1..n - 1);
    debug_assert_eq!(b.current_perm().unwrap(), expect);
    Ok(b.finish(false))
}

/// Permutahedron path on a clique as a tubing walk (for lifting tests).
pub fn clique_rotation_walk(n: usize) -> Result<TubingWalk, GrassocError> {
    let g = LabeledGraph::complete(n);
    let perms = rotation_path(&(0..n).collect::<Vec<_>>());
    let mut b = WalkBuilder::start_chain(&g, &perms[0])?;
    for p in rotation_path_positions(n) {
        b.flip_prefix(p)?;
    }
    Ok(b.finish(false))
}
