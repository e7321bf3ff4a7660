//! Facet-Hamiltonian paths on complete bipartite graph associahedra by
//! iterated shaving.
//!
//! One phase visits every tube containing the current kernel x: the
//! active block is shifted (covering one maximal-partner class), the next
//! opposite-side element is absorbed to second position, and so on; the
//! 2-tube is then flipped and x expelled past the processed region. When
//! one side is down to a single vertex the kernel singleton is flipped
//! and the roles of the sides swap. The walk stops as soon as every tube
//! has been introduced.

use super::engine::{absorb_to, expel, position_of, WalkBuilder};
use super::GrassocError;
use crate::graph::{LabeledGraph, VertexSet};
use crate::perm::rotation_path_positions;
use crate::tubing::enumerate_tubes;
use crate::walks::TubingWalk;
use std::collections::BTreeSet;

/// Direction of one active-block shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    Left,
    Right,
}

/// Records the walk plus the milestone permutations of the first shaving
/// phase and the shift direction log.
pub struct ShavingOutcome {
    pub walk: TubingWalk,
    /// permutation snapshots of the first phase: start, then after each
    /// shift and each absorption
    pub first_phase_milestones: Vec<Vec<usize>>,
    pub shift_log: Vec<Shift>,
    /// tube classes visited by the first phase, in visiting order: the
    /// tubes containing the kernel grouped by the partner absorbed last
    pub first_phase_classes: Vec<BTreeSet<VertexSet>>,
}

struct Tracker {
    seen: BTreeSet<VertexSet>,
    total: usize,
}

impl Tracker {
    fn update(&mut self, b: &WalkBuilder) -> bool {
        for &t in b.current().tubes() {
            self.seen.insert(t);
        }
        self.seen.len() == self.total
    }
}

/// Shifts the active block at chain positions 3..2+len one rotation step
/// (left = reversed rotation path, right = forward), flip by flip.
/// Returns early (true) when every tube has been introduced.
fn shift_block(
    b: &mut WalkBuilder,
    len: usize,
    dir: Shift,
    tracker: &mut Tracker,
) -> Result<bool, GrassocError> {
    if len < 2 {
        return Ok(tracker.update(b));
    }
    let mut pos = rotation_path_positions(len);
    if dir == Shift::Left {
        pos.reverse();
    }
    for p in pos {
        b.flip_prefix(p + 2)?;
        if tracker.update(b) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The shaving path on the complete bipartite graph K_{n,m}, shifting in
/// the directions supplied by `dirs` (the proof allows any sequence;
/// always-left reproduces the reference trace).
pub fn complete_bipartite_fh_path_with_shifts(
    n: usize,
    m: usize,
    mut dirs: impl FnMut(usize) -> Shift,
) -> Result<ShavingOutcome, GrassocError> {
    assert!(n >= 1 && m >= 1 && n + m >= 3);
    let g = LabeledGraph::complete_bipartite(n, m);
    let a = |i: usize| i; // A-side indices 0..n-1
    let bx = |j: usize| n + j; // B-side indices n..n+m-1
    // start: a1, b1, a2, .., an, b2, .., bm
    let mut start = vec![a(0), bx(0)];
    start.extend((1..n).map(a));
    start.extend((1..m).map(bx));
    let mut builder = WalkBuilder::start_chain(&g, &start)?;
    let mut tracker = Tracker {
        seen: BTreeSet::new(),
        total: enumerate_tubes(&g)?.len(),
    };
    let a_side: VertexSet = (0..n).fold(0, |acc, i| acc | (1 << a(i)));
    let mut expelled: VertexSet = 0;
    let mut shift_log = Vec::new();
    let mut shift_count = 0usize;
    let mut milestones = Vec::new();
    let mut classes: Vec<BTreeSet<VertexSet>> = Vec::new();
    let mut first_phase = true;
    let mut done = tracker.update(&builder);

    let mut class_snapshot = |tracker: &Tracker, classes: &mut Vec<BTreeSet<VertexSet>>,
                              kernel: usize| {
        let covered: BTreeSet<VertexSet> = tracker
            .seen
            .iter()
            .copied()
            .filter(|t| t & (1 << kernel) != 0)
            .collect();
        let prior: BTreeSet<VertexSet> = classes.iter().flatten().copied().collect();
        classes.push(covered.difference(&prior).copied().collect());
    };

    'outer: while !done {
        let perm = builder
            .current_perm()
            .ok_or(GrassocError::NotNested(builder.len() - 1))?;
        let left_len = perm.len() - (expelled.count_ones() as usize);
        if left_len < 2 {
            break;
        }
        let x = perm[0];
        let my_side = |v: usize| ((1 << v) & a_side != 0) == ((1 << x) & a_side != 0);
        let side_count = perm[..left_len]
            .iter()
            .filter(|&&v| my_side(v) && expelled & (1 << v) == 0)
            .count();
        if first_phase {
            milestones.push(perm.clone());
        }
        // the active block: the kernel's side, minus the kernel
        let mut block_len = side_count - 1;
        let dir = dirs(shift_count);
        shift_count += 1;
        shift_log.push(dir);
        if shift_block(&mut builder, block_len, dir, &mut tracker)? {
            break 'outer;
        }
        if first_phase {
            milestones.push(builder.current_perm().unwrap());
            class_snapshot(&tracker, &mut classes, x);
        }
        // absorb pending opposite-side elements one by one
        loop {
            let perm = builder
                .current_perm()
                .ok_or(GrassocError::NotNested(builder.len() - 1))?;
            let next_pos = 2 + block_len; // 0-based index just after the block
            if next_pos >= left_len {
                break;
            }
            let cand = perm[next_pos];
            if my_side(cand) || expelled & (1 << cand) != 0 {
                break;
            }
            absorb_to(&mut builder, cand, 2)?;
            if tracker.update(&builder) {
                break 'outer;
            }
            block_len += 1;
            if first_phase {
                milestones.push(builder.current_perm().unwrap());
            }
            let dir = dirs(shift_count);
            shift_count += 1;
            shift_log.push(dir);
            if shift_block(&mut builder, block_len, dir, &mut tracker)? {
                break 'outer;
            }
            if first_phase {
                milestones.push(builder.current_perm().unwrap());
                class_snapshot(&tracker, &mut classes, x);
            }
        }
        first_phase = false;
        if side_count >= 2 {
            // flip the 2-tube, then expel the kernel
            builder.flip_prefix(2)?;
            if tracker.update(&builder) {
                break;
            }
        }
        expel(&mut builder, x)?;
        expelled |= 1 << x;
        done = tracker.update(&builder);
        if done {
            break;
        }
        // when the kernel's side is down to one vertex, flip its
        // singleton to hand the kernel to the other side
        let perm = builder
            .current_perm()
            .ok_or(GrassocError::NotNested(builder.len() - 1))?;
        let remaining = perm
            .iter()
            .filter(|&&v| my_side(v) && expelled & (1 << v) == 0)
            .count();
        if remaining == 1 {
            builder.flip_prefix(1)?;
            done = tracker.update(&builder);
        }
    }

    Ok(ShavingOutcome {
        walk: builder.finish(false),
        first_phase_milestones: milestones,
        shift_log,
        first_phase_classes: classes,
    })
}

/// The shaving path with the reference always-left shift schedule.
pub fn complete_bipartite_fh_path(n: usize, m: usize) -> Result<ShavingOutcome, GrassocError> {
    complete_bipartite_fh_path_with_shifts(n, m, |_| Shift::Left)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_fh(outcome: &ShavingOutcome) {
        outcome.walk.validate_flips().unwrap();
        let per_step: Vec<Vec<u64>> =
            outcome.walk.tubings.iter().map(|t| t.tubes().to_vec()).collect();
        let distinct = crate::walks::check_interval_cover(&per_step, false).unwrap();
        let total = enumerate_tubes(&outcome.walk.graph).unwrap().len();
        assert_eq!(distinct, total);
    }

    #[test]
    fn small_bipartite_paths_are_fh() {
        for (n, m) in [(1, 2), (2, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (3, 4)] {
            let out = complete_bipartite_fh_path(n, m)
                .unwrap_or_else(|e| panic!("K_{{{n},{m}}}: {e}"));
            check_fh(&out);
        }
    }

    #[test]
    fn k44_first_phase_reproduces_reference_milestones() {
        let out = complete_bipartite_fh_path(4, 4).unwrap();
        let a = |i: usize| i - 1;
        let b = |j: usize| 4 + j - 1;
        let want: Vec<Vec<usize>> = vec![
            vec![a(1), b(1), a(2), a(3), a(4), b(2), b(3), b(4)],
            vec![a(1), b(1), a(3), a(4), a(2), b(2), b(3), b(4)],
            vec![a(1), b(2), b(1), a(3), a(4), a(2), b(3), b(4)],
            vec![a(1), b(2), a(3), a(4), a(2), b(1), b(3), b(4)],
            vec![a(1), b(3), b(2), a(3), a(4), a(2), b(1), b(4)],
            vec![a(1), b(3), a(3), a(4), a(2), b(1), b(2), b(4)],
            vec![a(1), b(4), b(3), a(3), a(4), a(2), b(1), b(2)],
            vec![a(1), b(4), a(3), a(4), a(2), b(1), b(2), b(3)],
        ];
        assert_eq!(out.first_phase_milestones, want);
        check_fh(&out);
    }

    #[test]
    fn first_phase_partitions_kernel_tubes_by_partner() {
        // the classes T_1^{b_1}, T_1^{b_2}, .. partition the tubes
        // containing a_1
        let (n, m) = (3, 3);
        let out = complete_bipartite_fh_path(n, m).unwrap();
        let g = LabeledGraph::complete_bipartite(n, m);
        let all_a1: BTreeSet<VertexSet> = enumerate_tubes(&g)
            .unwrap()
            .into_iter()
            .filter(|t| t & 1 != 0)
            .collect();
        let union: BTreeSet<VertexSet> =
            out.first_phase_classes.iter().flatten().copied().collect();
        assert_eq!(union, all_a1, "classes cover the kernel tubes");
        let sum: usize = out.first_phase_classes.iter().map(|c| c.len()).sum();
        assert_eq!(sum, all_a1.len(), "classes are disjoint");
        // each class after the first is tagged by a new partner b_j
        assert_eq!(out.first_phase_classes.len(), m);
    }

    #[test]
    fn right_shifts_also_give_fh_paths() {
        let out =
            complete_bipartite_fh_path_with_shifts(3, 3, |_| Shift::Right).unwrap();
        check_fh(&out);
        let alternating =
            complete_bipartite_fh_path_with_shifts(3, 3, |k| {
                if k % 2 == 0 {
                    Shift::Left
                } else {
                    Shift::Right
                }
            })
            .unwrap();
        check_fh(&alternating);
    }

    #[test]
    fn k22_matches_cyclohedron_facet_count() {
        // K_{2,2} = C_4: the walk covers all 12 tubes
        let out = complete_bipartite_fh_path(2, 2).unwrap();
        let total = enumerate_tubes(&out.walk.graph).unwrap().len();
        assert_eq!(total, 12);
        check_fh(&out);
    }
}
