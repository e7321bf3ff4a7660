//! The flip engine: records tubing walks step by step, with the
//! absorption/expulsion primitives the constructions are made of.

use super::GrassocError;
use crate::graph::{LabeledGraph, VertexSet};
use crate::perm::Permutation;
use crate::tubing::{enumerate_tubes, flip, nested_tubing_from_permutation, Tube, Tubing};
use crate::walks::TubingWalk;

pub struct WalkBuilder {
    g: LabeledGraph,
    universe: Vec<Tube>,
    tubings: Vec<Tubing>,
}

impl WalkBuilder {
    pub fn start(g: &LabeledGraph, first: Tubing) -> Result<Self, GrassocError> {
        let universe = enumerate_tubes(g)?;
        Ok(Self { g: g.clone(), universe, tubings: vec![first] })
    }

    /// Starts from the nested tubing of a permutation (vertex indices).
    pub fn start_chain(g: &LabeledGraph, perm: &[usize]) -> Result<Self, GrassocError> {
        let t = nested_tubing_from_permutation(&Permutation(perm.to_vec()), g)?;
        Self::start(g, t)
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.g
    }

    pub fn current(&self) -> &Tubing {
        self.tubings.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.tubings.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Current tubing as a permutation, when nested.
    pub fn current_perm(&self) -> Option<Vec<usize>> {
        crate::tubing::permutation_from_nested_tubing(self.current(), &self.g)
            .ok()
            .map(|p| p.0)
    }

    /// Applies the unique flip of `tube`, records, returns the new tube.
    pub fn flip_tube(&mut self, tube: Tube) -> Result<Tube, GrassocError> {
        let (next, new_tube) = flip(&self.g, self.current(), tube, &self.universe)
            .map_err(|e| GrassocError::StepFailed(self.tubings.len(), e.to_string()))?;
        self.tubings.push(next);
        Ok(new_tube)
    }

    /// Flips the prefix tube of the given size in the current chain.
    pub fn flip_prefix(&mut self, size: usize) -> Result<Tube, GrassocError> {
        let t = *self
            .current()
            .tubes()
            .iter()
            .find(|t| t.count_ones() as usize == size)
            .ok_or_else(|| {
                GrassocError::StepFailed(self.tubings.len(), format!("no size-{size} tube"))
            })?;
        self.flip_tube(t)
    }

    /// Appends another builder's trail (must start at the current tubing).
    pub fn append(&mut self, tail: &[Tubing]) -> Result<(), GrassocError> {
        let mut iter = tail.iter();
        match iter.next() {
            Some(first) if first == self.current() => {}
            _ => {
                return Err(GrassocError::StepFailed(
                    self.tubings.len(),
                    "appended walk does not start at the current tubing".into(),
                ))
            }
        }
        self.tubings.extend(iter.cloned());
        Ok(())
    }

    pub fn tubings(&self) -> &[Tubing] {
        &self.tubings
    }

    pub fn finish(self, closed: bool) -> TubingWalk {
        TubingWalk::new(self.g, self.tubings, closed)
    }
}

/// Position (1-based) of vertex v in the permutation of a nested chain.
pub fn position_of(perm: &[usize], v: usize) -> usize {
    perm.iter().position(|&x| x == v).unwrap() + 1
}

/// Absorbs `v` leftward to `target` position (1-based): repeatedly flips
/// the prefix just below `v`, which moves `v` one place left. Requires
/// nested states throughout.
pub fn absorb_to(builder: &mut WalkBuilder, v: usize, target: usize) -> Result<(), GrassocError> {
    loop {
        let perm = builder
            .current_perm()
            .ok_or(GrassocError::NotNested(builder.len() - 1))?;
        let p = position_of(&perm, v);
        if p <= target {
            return Ok(());
        }
        builder.flip_prefix(p - 1)?;
        let next = builder.current_perm().ok_or(GrassocError::NotNested(builder.len() - 1))?;
        debug_assert_eq!(position_of(&next, v), p - 1, "absorb moves v one left");
    }
}

/// Absorbs a fresh vertex `v` (currently last) all the way to the front:
/// the walk through pi_{n+1}, .., pi_1. The kernel must be adjacent to v.
pub fn absorb(builder: &mut WalkBuilder, v: usize) -> Result<(), GrassocError> {
    let perm = builder.current_perm().ok_or(GrassocError::NotNested(builder.len() - 1))?;
    let kernel = perm[0];
    if !builder.graph().has_edge(kernel, v) {
        return Err(GrassocError::KernelNotAdjacent);
    }
    absorb_to(builder, v, 1)
}

/// Expels `v`: flips the v-containing tubes in ascending size order until
/// v lies in no tube. The flip replacements are whatever the flip oracle
/// forces (singletons on stars, rightward swaps on cliques).
pub fn expel(builder: &mut WalkBuilder, v: usize) -> Result<(), GrassocError> {
    loop {
        let t = builder
            .current()
            .tubes()
            .iter()
            .copied()
            .filter(|t| t & (1 << v) != 0)
            .min_by_key(|t| t.count_ones());
        match t {
            None => return Ok(()),
            Some(t) => {
                builder.flip_tube(t)?;
            }
        }
    }
}

/// Lifts a path of nested tubings into the supergraph with an added
/// vertex `v`: every tube gains v and the tube {v} is added. Valid when
/// each tubing is nested with kernel adjacent to v.
pub fn lift_path_with_apex(
    walk: &[Tubing],
    v: usize,
    supergraph: &LabeledGraph,
) -> Result<Vec<Tubing>, GrassocError> {
    let mut out = Vec::with_capacity(walk.len());
    for (i, t) in walk.iter().enumerate() {
        if !t.is_nested() {
            return Err(GrassocError::NotNested(i));
        }
        let kernel = t.kernel().ok_or(GrassocError::NotNested(i))?;
        if !supergraph.has_edge(kernel, v) {
            return Err(GrassocError::KernelNotAdjacent);
        }
        let mut tubes: Vec<VertexSet> = t.tubes().iter().map(|&x| x | (1 << v)).collect();
        tubes.push(1 << v);
        out.push(
            Tubing::new(supergraph, tubes)
                .map_err(|e| GrassocError::StepFailed(i, e.to_string()))?,
        );
    }
    Ok(out)
}
