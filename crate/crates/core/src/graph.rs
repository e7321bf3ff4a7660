//! Simple undirected graphs with stable vertex labels.
//!
//! Vertices are referred to by index internally; the ordered label list is
//! kept for serialization. Vertex sets are bitmasks, which bounds graphs to
//! 64 vertices — far beyond anything the tubing machinery enumerates.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Vertex subset of a [`LabeledGraph`], as a bitmask over vertex indices.
pub type VertexSet = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("loop edge at {0:?}")]
    LoopEdge(String),
    #[error("graph has {0} vertices; at most 64 supported")]
    TooLarge(usize),
    #[error("graph is not connected")]
    Disconnected,
}

/// Simple undirected graph with ordered, distinct vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<String>,
    /// adjacency[v] = bitmask of neighbors of v
    adj: Vec<VertexSet>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl LabeledGraph {
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 64 {
            return Err(GraphError::TooLarge(labels.len()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![0u64; labels.len()];
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(labels[a].clone()));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { labels, adj })
    }

    /// Builds a graph from labels and labeled edges.
    pub fn from_labeled_edges<S: Into<String> + Clone>(
        labels: Vec<S>,
        edges: &[(S, S)],
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = |l: &str| -> Result<usize, GraphError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| GraphError::UnknownLabel(l.to_string()))
        };
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.clone().into(), b.clone().into());
            idx_edges.push((index(&a)?, index(&b)?));
        }
        Self::new(labels, &idx_edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in (a + 1)..self.n() {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn full_set(&self) -> VertexSet {
        if self.n() == 64 {
            !0
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// True iff the subgraph induced by `set` is connected (and nonempty).
    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        if set == 0 {
            return false;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & set & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.is_connected_subset(self.full_set())
    }

    /// Connected components of the subgraph induced by `set`.
    pub fn components(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut comps = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v] & set & !seen;
                }
                seen |= next;
                frontier = next;
            }
            comps.push(seen);
            rest &= !seen;
        }
        comps
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<(String, String)> = self
            .edges()
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect();
        serde_json::json!({ "vertices": self.labels, "edges": edges })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let parsed: GraphJson = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        Self::from_labeled_edges(parsed.vertices, &parsed.edges).map_err(|e| e.to_string())
    }

    // --- standard families, labeled 1..n as the constructions expect ---

    /// Complete graph on labels "1".."n".
    pub fn complete(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                edges.push((a, b));
            }
        }
        Self::new(labels, &edges).unwrap()
    }

    /// Path 1-2-...-n.
    pub fn path(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::new(labels, &edges).unwrap()
    }

    /// Cycle 1-2-...-n-1.
    pub fn cycle(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Self::new(labels, &edges).unwrap()
    }

    /// Star with center "1" and leaves "2".."n".
    pub fn star(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::new(labels, &edges).unwrap()
    }

    /// Complete bipartite graph on sides "a1".."an" and "b1".."bm".
    pub fn complete_bipartite(n: usize, m: usize) -> Self {
        let mut labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        labels.extend((1..=m).map(|i| format!("b{i}")));
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..m {
                edges.push((a, n + b));
            }
        }
        Self::new(labels, &edges).unwrap()
    }

    /// Adds a fresh universal vertex with the given label.
    pub fn with_universal_vertex(&self, label: &str) -> Result<Self, GraphError> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let v = self.n();
        let mut edges = self.edges();
        for u in 0..v {
            edges.push((u, v));
        }
        Self::new(labels, &edges)
    }
}

/// Iterates over the elements (vertex indices) of a bitmask set.
pub fn set_members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_loops() {
        assert!(matches!(
            LabeledGraph::new(vec!["a", "a"], &[]),
            Err(GraphError::DuplicateLabel(_))
        ));
        assert!(matches!(
            LabeledGraph::new(vec!["a", "b"], &[(0, 0)]),
            Err(GraphError::LoopEdge(_))
        ));
    }

    #[test]
    fn connectivity_queries() {
        let g = LabeledGraph::path(4);
        assert!(g.is_connected());
        assert!(g.is_connected_subset(0b0110));
        assert!(!g.is_connected_subset(0b1001));
        assert_eq!(g.components(0b1001).len(), 2);
    }

    #[test]
    fn families_have_expected_edges() {
        assert_eq!(LabeledGraph::complete(5).edges().len(), 10);
        assert_eq!(LabeledGraph::cycle(5).edges().len(), 5);
        assert_eq!(LabeledGraph::star(5).edges().len(), 4);
        assert_eq!(LabeledGraph::complete_bipartite(3, 3).edges().len(), 9);
    }

    #[test]
    fn json_round_trip() {
        let g = LabeledGraph::cycle(4);
        let j = g.to_json();
        let back = LabeledGraph::from_json(&j).unwrap();
        assert_eq!(g, back);
    }
}
