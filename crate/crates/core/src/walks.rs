//! Walk containers for the construction modules, plus the lightweight
//! interval bookkeeping used to validate walks too large for a skeleton.

use crate::graph::LabeledGraph;
use crate::tubing::{enumerate_tubes, flip, Tubing};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("steps {0} and {1} do not differ by a single flip")]
    NotAFlip(usize, usize),
    #[error("facet {0} occurs in more than one interval")]
    BrokenInterval(String),
    #[error("walk is empty")]
    Empty,
    #[error("{0}")]
    Other(String),
}

/// Checks that every item occurs in exactly one contiguous block of
/// positions (cyclically if `closed`). Returns the number of distinct
/// items. This is the facet bookkeeping for walks whose skeletons are too
/// large to build.
pub fn check_interval_cover<X: Clone + Eq + Hash + Ord + std::fmt::Debug>(
    items_per_step: &[Vec<X>],
    closed: bool,
) -> Result<usize, WalkError> {
    if items_per_step.is_empty() {
        return Err(WalkError::Empty);
    }
    let mut positions: BTreeMap<X, Vec<usize>> = BTreeMap::new();
    for (i, items) in items_per_step.iter().enumerate() {
        for x in items {
            positions.entry(x.clone()).or_default().push(i);
        }
    }
    let len = items_per_step.len();
    for (x, occ) in &positions {
        let mut runs = 0;
        for (i, &p) in occ.iter().enumerate() {
            let has_prev = if i > 0 {
                occ[i - 1] == p - 1
            } else {
                false
            };
            if !has_prev {
                runs += 1;
            }
        }
        // cyclic merge of a run ending at len-1 with one starting at 0
        if closed && runs > 1 && occ[0] == 0 && *occ.last().unwrap() == len - 1 {
            runs -= 1;
        }
        if runs != 1 {
            return Err(WalkError::BrokenInterval(format!("{x:?}")));
        }
    }
    Ok(positions.len())
}

/// A walk of maximal tubings on a fixed graph; consecutive tubings differ
/// by one flip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubingWalk {
    pub graph: LabeledGraph,
    pub tubings: Vec<Tubing>,
    pub closed: bool,
}

impl TubingWalk {
    pub fn new(graph: LabeledGraph, tubings: Vec<Tubing>, closed: bool) -> Self {
        Self { graph, tubings, closed }
    }

    pub fn len(&self) -> usize {
        self.tubings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubings.is_empty()
    }

    /// Consecutive (and closing) steps differ by exactly one flip.
    pub fn validate_flips(&self) -> Result<(), WalkError> {
        let universe = enumerate_tubes(&self.graph).map_err(|e| WalkError::Other(e.to_string()))?;
        let pairs = self.step_pairs();
        for (i, j) in pairs {
            let a = &self.tubings[i];
            let b = &self.tubings[j];
            let removed: Vec<_> =
                a.tubes().iter().filter(|t| !b.contains(**t)).collect();
            if removed.len() != 1 {
                return Err(WalkError::NotAFlip(i, j));
            }
            let (flipped, _) = flip(&self.graph, a, *removed[0], &universe)
                .map_err(|e| WalkError::Other(e.to_string()))?;
            if &flipped != b {
                return Err(WalkError::NotAFlip(i, j));
            }
        }
        Ok(())
    }

    fn step_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> =
            (0..self.tubings.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
        if self.closed && self.tubings.len() > 1 {
            pairs.push((self.tubings.len() - 1, 0));
        }
        pairs
    }

    /// Facet bookkeeping: every tube of the graph in exactly one interval.
    pub fn check_facet_hamiltonian(&self) -> Result<(), WalkError> {
        let per_step: Vec<Vec<u64>> =
            self.tubings.iter().map(|t| t.tubes().to_vec()).collect();
        let distinct = check_interval_cover(&per_step, self.closed)?;
        let all = enumerate_tubes(&self.graph).map_err(|e| WalkError::Other(e.to_string()))?;
        if distinct != all.len() {
            return Err(WalkError::Other(format!(
                "walk introduces {distinct} tubes, graph has {}",
                all.len()
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "tubing_walk",
            "graph": self.graph.to_json(),
            "closed": self.closed,
            "tubings": self.tubings.iter().map(|t| t.to_labels(&self.graph)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let graph = LabeledGraph::from_json(&v["graph"])?;
        let closed = v["closed"].as_bool().ok_or("missing closed flag")?;
        let raw: Vec<Vec<Vec<String>>> =
            serde_json::from_value(v["tubings"].clone()).map_err(|e| e.to_string())?;
        let tubings = raw
            .iter()
            .map(|t| Tubing::from_labels(&graph, t).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { graph, tubings, closed })
    }
}

/// A walk of permutations (1-based values), consecutive ones differing by
/// one adjacent transposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationWalk {
    pub perms: Vec<Vec<usize>>,
    pub closed: bool,
}

impl PermutationWalk {
    pub fn validate_steps(&self) -> Result<(), WalkError> {
        let n = self.perms.first().map_or(0, |p| p.len());
        let pairs: Vec<(usize, usize)> = {
            let mut v: Vec<(usize, usize)> =
                (0..self.perms.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
            if self.closed && self.perms.len() > 1 {
                v.push((self.perms.len() - 1, 0));
            }
            v
        };
        for (i, j) in pairs {
            let a = &self.perms[i];
            let b = &self.perms[j];
            if a.len() != n || b.len() != n {
                return Err(WalkError::Other("ragged permutation walk".into()));
            }
            let diffs: Vec<usize> = (0..n).filter(|&x| a[x] != b[x]).collect();
            let ok = diffs.len() == 2
                && diffs[1] == diffs[0] + 1
                && a[diffs[0]] == b[diffs[1]]
                && a[diffs[1]] == b[diffs[0]];
            if !ok {
                return Err(WalkError::NotAFlip(i, j));
            }
        }
        Ok(())
    }

    /// Prefix-set bookkeeping: every proper nonempty subset of [n] appears
    /// as a prefix in exactly one (cyclic) interval.
    pub fn check_facet_hamiltonian(&self) -> Result<(), WalkError> {
        let per_step: Vec<Vec<u64>> = self
            .perms
            .iter()
            .map(|p| {
                let mut acc = 0u64;
                let mut out = Vec::with_capacity(p.len() - 1);
                for &x in &p[..p.len() - 1] {
                    acc |= 1 << (x - 1);
                    out.push(acc);
                }
                out
            })
            .collect();
        let n = self.perms[0].len();
        let distinct = check_interval_cover(&per_step, self.closed)?;
        if distinct != (1usize << n) - 2 {
            return Err(WalkError::Other(format!(
                "{distinct} prefix sets, expected {}",
                (1usize << n) - 2
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"kind": "perm_walk", "closed": self.closed, "perms": self.perms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let closed = v["closed"].as_bool().ok_or("missing closed flag")?;
        let perms: Vec<Vec<usize>> =
            serde_json::from_value(v["perms"].clone()).map_err(|e| e.to_string())?;
        Ok(Self { perms, closed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_cover_detects_breaks() {
        let steps = vec![vec!["a"], vec!["b"], vec!["a"]];
        assert!(matches!(
            check_interval_cover(&steps, false),
            Err(WalkError::BrokenInterval(_))
        ));
        // cyclically the same walk is fine
        assert_eq!(check_interval_cover(&steps, true).unwrap(), 2);
    }
}
