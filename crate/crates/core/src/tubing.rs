//! Tubes, tubings and flips.
//!
//! A tube of `G` is a nonempty proper vertex subset inducing a connected
//! subgraph. Two distinct tubes are compatible if they are nested or if the
//! union induces a disconnected subgraph. A maximal tubing of a connected
//! n-vertex graph has exactly n-1 pairwise compatible tubes; replacing one
//! tube of a maximal tubing yields a unique other maximal tubing (a flip).

use crate::graph::{set_members, LabeledGraph, VertexSet};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A tube: nonempty proper connected vertex subset, as a bitmask.
pub type Tube = VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TubingError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("not a tube of this graph")]
    NotATube,
    #[error("tubing is not maximal")]
    NotMaximal,
    #[error("tube not present in tubing")]
    TubeAbsent,
    #[error("tubing is not nested")]
    NotNested,
    #[error("permutation prefix {0:#b} induces a disconnected subgraph")]
    DisconnectedPrefix(VertexSet),
    #[error("invalid tubing: {0}")]
    Invalid(String),
}

/// A tubing: set of pairwise compatible tubes, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tubing(Vec<Tube>);

pub fn is_tube(g: &LabeledGraph, set: VertexSet) -> bool {
    set != 0 && set != g.full_set() && (set & !g.full_set()) == 0 && g.is_connected_subset(set)
}

/// Compatibility of two distinct tubes: nested, or union disconnected.
///
/// Calling this on equal tubes is a contract violation.
pub fn are_compatible(t1: Tube, t2: Tube, g: &LabeledGraph) -> bool {
    assert_ne!(t1, t2, "are_compatible requires distinct tubes");
    if t1 & t2 == t1 || t1 & t2 == t2 {
        return true; // nested
    }
    if t1 & t2 != 0 {
        return false; // overlapping but not nested
    }
    !g.is_connected_subset(t1 | t2)
}

/// All tubes of a connected graph: connected nonempty proper subsets.
pub fn enumerate_tubes(g: &LabeledGraph) -> Result<Vec<Tube>, TubingError> {
    if !g.is_connected() {
        return Err(TubingError::Disconnected);
    }
    let full = g.full_set();
    let mut out = Vec::new();
    // Grow connected sets: BFS over (set, candidate extension) is overkill at
    // these sizes; filtering all subsets is fine for n <= 20 and we never go
    // near that for tubings.
    if g.n() <= 20 {
        for set in 1..full {
            if g.is_connected_subset(set) {
                out.push(set);
            }
        }
    } else {
        unreachable!("tube enumeration is only used for small graphs");
    }
    Ok(out)
}

impl Tubing {
    pub fn new(g: &LabeledGraph, tubes: Vec<Tube>) -> Result<Self, TubingError> {
        let mut sorted = tubes;
        sorted.sort_unstable();
        sorted.dedup();
        for &t in &sorted {
            if !is_tube(g, t) {
                return Err(TubingError::NotATube);
            }
        }
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                if !are_compatible(sorted[i], sorted[j], g) {
                    return Err(TubingError::Invalid(format!(
                        "incompatible tubes {:#b} and {:#b}",
                        sorted[i], sorted[j]
                    )));
                }
            }
        }
        Ok(Self(sorted))
    }

    /// Unchecked constructor for internal use on already-valid data.
    pub(crate) fn from_sorted_unchecked(mut tubes: Vec<Tube>) -> Self {
        tubes.sort_unstable();
        Self(tubes)
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: Tube) -> bool {
        self.0.binary_search(&t).is_ok()
    }

    pub fn is_maximal(&self, g: &LabeledGraph) -> bool {
        self.0.len() == g.n() - 1
    }

    /// True iff all pairs of tubes are nested (a chain).
    pub fn is_nested(&self) -> bool {
        // sorted by value; a chain sorted by value is sorted by inclusion
        // only after sorting by popcount, so check pairwise
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                let (a, b) = (self.0[i], self.0[j]);
                if a & b != a && a & b != b {
                    return false;
                }
            }
        }
        true
    }

    /// The kernel (unique singleton) of a nested maximal tubing.
    pub fn kernel(&self) -> Option<usize> {
        let mut smallest = None;
        for &t in &self.0 {
            if t.count_ones() == 1 {
                if smallest.is_some() {
                    return None;
                }
                smallest = Some(t.trailing_zeros() as usize);
            }
        }
        smallest
    }

    /// Serializes as sorted list of sorted label lists.
    pub fn to_labels(&self, g: &LabeledGraph) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|&t| {
                let mut v: Vec<String> =
                    set_members(t).map(|i| g.label(i).to_string()).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    pub fn from_labels(g: &LabeledGraph, tubes: &[Vec<String>]) -> Result<Self, TubingError> {
        let mut sets = Vec::with_capacity(tubes.len());
        for tube in tubes {
            let mut set = 0u64;
            for l in tube {
                let i = g
                    .index_of(l)
                    .ok_or_else(|| TubingError::Invalid(format!("unknown label {l:?}")))?;
                set |= 1 << i;
            }
            sets.push(set);
        }
        Tubing::new(g, sets)
    }
}

/// Flips `tube` in a maximal `tubing`: returns the unique other maximal
/// tubing differing only there, together with the replacement tube.
pub fn flip(
    g: &LabeledGraph,
    tubing: &Tubing,
    tube: Tube,
    universe: &[Tube],
) -> Result<(Tubing, Tube), TubingError> {
    if !tubing.is_maximal(g) {
        return Err(TubingError::NotMaximal);
    }
    if !tubing.contains(tube) {
        return Err(TubingError::TubeAbsent);
    }
    let rest: Vec<Tube> = tubing.0.iter().copied().filter(|&t| t != tube).collect();
    let mut found = None;
    'cand: for &cand in universe {
        if cand == tube || rest.contains(&cand) {
            continue;
        }
        for &r in &rest {
            if !are_compatible(cand, r, g) {
                continue 'cand;
            }
        }
        debug_assert!(found.is_none(), "flip replacement must be unique");
        found = Some(cand);
        #[cfg(not(debug_assertions))]
        break;
    }
    let replacement = found.ok_or(TubingError::NotMaximal)?;
    let mut tubes = rest;
    tubes.push(replacement);
    Ok((Tubing::from_sorted_unchecked(tubes), replacement))
}

/// All maximal tubings, by recursive kernel choice (elimination trees).
pub fn enumerate_maximal_tubings(g: &LabeledGraph) -> Result<Vec<Tubing>, TubingError> {
    if !g.is_connected() {
        return Err(TubingError::Disconnected);
    }
    // tubings_of(S): for connected S, all tube-sets of elimination forests,
    // excluding S itself.
    fn tubings_of(
        g: &LabeledGraph,
        set: VertexSet,
        memo: &mut std::collections::HashMap<VertexSet, Vec<Vec<Tube>>>,
    ) -> Vec<Vec<Tube>> {
        if set.count_ones() == 1 {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let mut out = Vec::new();
        for root in set_members(set) {
            let rest = set & !(1 << root);
            let comps = g.components(rest);
            // cartesian product over per-component choices
            let mut partials: Vec<Vec<Tube>> = vec![vec![]];
            for &c in &comps {
                let sub = tubings_of(g, c, memo);
                let mut next = Vec::with_capacity(partials.len() * sub.len());
                for p in &partials {
                    for s in &sub {
                        let mut q = p.clone();
                        q.push(c);
                        q.extend_from_slice(s);
                        next.push(q);
                    }
                }
                partials = next;
            }
            out.extend(partials);
        }
        memo.insert(set, out.clone());
        out
    }
    let mut memo = std::collections::HashMap::new();
    let sets = tubings_of(g, g.full_set(), &mut memo);
    let mut out: Vec<Tubing> = sets.into_iter().map(Tubing::from_sorted_unchecked).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Nested maximal tubing from a permutation with connected prefixes.
pub fn nested_tubing_from_permutation(
    perm: &Permutation,
    g: &LabeledGraph,
) -> Result<Tubing, TubingError> {
    let prefixes = perm.prefix_sets();
    for &p in &prefixes {
        if !g.is_connected_subset(p) {
            return Err(TubingError::DisconnectedPrefix(p));
        }
    }
    Ok(Tubing::from_sorted_unchecked(prefixes))
}

/// Permutation from a nested maximal tubing (inverse of the above).
pub fn permutation_from_nested_tubing(
    tubing: &Tubing,
    g: &LabeledGraph,
) -> Result<Permutation, TubingError> {
    if !tubing.is_maximal(g) {
        return Err(TubingError::NotMaximal);
    }
    if !tubing.is_nested() {
        return Err(TubingError::NotNested);
    }
    let mut chain: Vec<Tube> = tubing.0.clone();
    chain.sort_by_key(|t| t.count_ones());
    // a nested maximal tubing is a full chain: sizes 1..n-1
    for (i, t) in chain.iter().enumerate() {
        if t.count_ones() as usize != i + 1 {
            return Err(TubingError::NotNested);
        }
    }
    let mut seq = Vec::with_capacity(g.n());
    let mut prev = 0u64;
    for &t in &chain {
        seq.push((t & !prev).trailing_zeros() as usize);
        prev = t;
    }
    seq.push((g.full_set() & !prev).trailing_zeros() as usize);
    Ok(Permutation(seq))
}
