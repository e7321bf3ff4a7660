//! Abstract facet-labeled polytope skeletons.
//!
//! A skeleton is a connected graph together with facets stored
//! extensionally as vertex sets. This is the common substrate for the
//! verifier and the search: graph associahedra, cluster complexes,
//! triangulation flip graphs and planar fixtures all reduce to it.

use crate::graph::LabeledGraph;
use crate::tubing::{enumerate_maximal_tubings, enumerate_tubes, flip, TubingError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeletonError {
    #[error("skeleton adjacency graph is not connected")]
    Disconnected,
    #[error("facet {0:?} induces a disconnected subgraph")]
    FacetDisconnected(String),
    #[error("vertex {0} lies on no facet")]
    UncoveredVertex(usize),
    #[error("edge ({0},{1}) endpoints out of range")]
    BadEdge(usize, usize),
    #[error("rotation system is not planar (Euler check failed: v={v} e={e} f={f})")]
    NotPlanar { v: usize, e: usize, f: usize },
    #[error("graph is not 3-connected (cut: {0:?})")]
    Not3Connected(Vec<usize>),
    #[error("rotation system incomplete at vertex {0}")]
    BadRotation(usize),
    #[error("tubing error: {0}")]
    Tubing(#[from] TubingError),
}

/// Abstract polytope skeleton with facets as vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetedSkeleton {
    /// Number of vertices; vertex ids are `0..n`.
    pub n: usize,
    /// Sorted adjacency lists.
    pub adj: Vec<Vec<usize>>,
    /// Facet label -> sorted vertex list.
    pub facets: BTreeMap<String, Vec<usize>>,
    /// Optional rotation system: cyclic neighbor order per vertex.
    pub embedding: Option<Vec<Vec<usize>>>,
}

/// A walk in a skeleton: a vertex sequence, closed or open.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    pub closed: bool,
    pub vertices: Vec<usize>,
}

impl Walk {
    pub fn cycle(vertices: Vec<usize>) -> Self {
        Self { closed: true, vertices }
    }

    pub fn path(vertices: Vec<usize>) -> Self {
        Self { closed: false, vertices }
    }

    pub fn len_edges(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len().saturating_sub(1)
        }
    }
}

impl FacetedSkeleton {
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        facets: BTreeMap<String, Vec<usize>>,
        embedding: Option<Vec<Vec<usize>>>,
    ) -> Result<Self, SkeletonError> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(SkeletonError::BadEdge(a, b));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut facets = facets;
        for vs in facets.values_mut() {
            vs.sort_unstable();
            vs.dedup();
        }
        let sk = Self { n, adj, facets, embedding };
        sk.validate()?;
        Ok(sk)
    }

    fn validate(&self) -> Result<(), SkeletonError> {
        if !self.connected_without(&[]) {
            return Err(SkeletonError::Disconnected);
        }
        let mut covered = vec![false; self.n];
        for (label, vs) in &self.facets {
            if !self.subset_connected(vs) {
                return Err(SkeletonError::FacetDisconnected(label.clone()));
            }
            for &v in vs {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(SkeletonError::UncoveredVertex(v));
        }
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Facet labels incident to a vertex.
    pub fn facets_of_vertex(&self) -> Vec<Vec<usize>> {
        // indexed facet ids in label order
        let mut out = vec![Vec::new(); self.n];
        for (i, vs) in self.facets.values().enumerate() {
            for &v in vs {
                out[v].push(i);
            }
        }
        out
    }

    pub fn facet_labels(&self) -> Vec<&str> {
        self.facets.keys().map(|s| s.as_str()).collect()
    }

    /// True iff every vertex has degree d and lies on exactly d facets,
    /// and adjacent vertices share exactly d-1 facets (the local picture
    /// of a simple d-polytope).
    pub fn is_simple_of_dimension(&self, d: usize) -> bool {
        let fov = self.facets_of_vertex();
        if !(0..self.n).all(|v| self.adj[v].len() == d && fov[v].len() == d) {
            return false;
        }
        (0..self.n).all(|a| {
            self.adj[a].iter().all(|&b| {
                fov[a].iter().filter(|f| fov[b].contains(f)).count() == d - 1
            })
        })
    }

    /// Detects simplicity: constant degree equal to facet membership count
    /// with the edge-sharing condition above.
    pub fn simple_dimension(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        if self.is_simple_of_dimension(d) {
            Some(d)
        } else {
            None
        }
    }

    fn subset_connected(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return false;
        }
        let inset: BTreeSet<usize> = vs.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![vs[0]];
        seen.insert(vs[0]);
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inset.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == inset.len()
    }

    fn connected_without(&self, removed: &[usize]) -> bool {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let start = match (0..self.n).find(|v| !gone.contains(v)) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !gone.contains(&w) && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n - gone.len()
    }

    /// Checks 3-connectivity by removing all vertex pairs.
    pub fn check_3_connected(&self) -> Result<(), SkeletonError> {
        if self.n < 4 {
            return Err(SkeletonError::Not3Connected(vec![]));
        }
        for a in 0..self.n {
            if !self.connected_without(&[a]) {
                return Err(SkeletonError::Not3Connected(vec![a]));
            }
        }
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if !self.connected_without(&[a, b]) {
                    return Err(SkeletonError::Not3Connected(vec![a, b]));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect();
        let mut j = serde_json::json!({
            "vertices": (0..self.n).collect::<Vec<_>>(),
            "edges": edges,
            "facets": self.facets,
        });
        if let Some(emb) = &self.embedding {
            j["embedding"] = serde_json::json!(emb
                .iter()
                .enumerate()
                .map(|(v, rot)| (v.to_string(), rot.clone()))
                .collect::<BTreeMap<String, Vec<usize>>>());
        }
        j
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let vertices: Vec<usize> = serde_json::from_value(v["vertices"].clone())
            .map_err(|e| format!("vertices: {e}"))?;
        let n = vertices.len();
        if vertices != (0..n).collect::<Vec<_>>() {
            return Err("vertices must be 0..n".into());
        }
        let edges: Vec<(usize, usize)> =
            serde_json::from_value(v["edges"].clone()).map_err(|e| format!("edges: {e}"))?;
        let facets: BTreeMap<String, Vec<usize>> =
            serde_json::from_value(v["facets"].clone()).map_err(|e| format!("facets: {e}"))?;
        let embedding = if v.get("embedding").map_or(false, |e| !e.is_null()) {
            let m: BTreeMap<String, Vec<usize>> =
                serde_json::from_value(v["embedding"].clone())
                    .map_err(|e| format!("embedding: {e}"))?;
            let mut emb = vec![Vec::new(); n];
            for (k, rot) in m {
                let i: usize = k.parse().map_err(|_| "bad embedding key".to_string())?;
                emb[i] = rot;
            }
            Some(emb)
        } else {
            None
        };
        Self::new(n, &edges, facets, embedding).map_err(|e| e.to_string())
    }

    /// DOT export for visual inspection.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph skeleton {\n  node [shape=point];\n");
        for v in 0..self.n {
            s.push_str(&format!("  v{v};\n"));
        }
        for a in 0..self.n {
            for &b in &self.adj[a] {
                if b > a {
                    s.push_str(&format!("  v{a} -- v{b};\n"));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Skeleton of the graph associahedron A(G): vertices are maximal tubings,
/// edges are flips, and each tube contributes the facet of all maximal
/// tubings containing it.
pub fn skeleton_from_graph_associahedron(
    g: &LabeledGraph,
) -> Result<(FacetedSkeleton, Vec<crate::tubing::Tubing>), SkeletonError> {
    let tubings = enumerate_maximal_tubings(g)?;
    let universe = enumerate_tubes(g)?;
    let index: BTreeMap<&crate::tubing::Tubing, usize> =
        tubings.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = Vec::new();
    for (i, t) in tubings.iter().enumerate() {
        for &tube in t.tubes() {
            let (t2, _) = flip(g, t, tube, &universe)?;
            let j = index[&t2];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let mut facets = BTreeMap::new();
    for &tube in &universe {
        let mut label: Vec<String> = crate::graph::set_members(tube)
            .map(|v| g.label(v).to_string())
            .collect();
        label.sort();
        let vs: Vec<usize> = tubings
            .iter()
            .enumerate()
            .filter(|(_, t)| t.contains(tube))
            .map(|(i, _)| i)
            .collect();
        facets.insert(format!("{{{}}}", label.join(",")), vs);
    }
    let sk = FacetedSkeleton::new(tubings.len(), &edges, facets, None)?;
    Ok((sk, tubings))
}

/// Skeleton of a 3-polytope from a planar rotation system.
///
/// Faces are recovered by tracing the rotation system; the outer face is a
/// facet like any other. Planarity (via Euler's formula) and
/// 3-connectivity are checked and reported distinctly.
pub fn skeleton_from_planar_embedding(
    n: usize,
    rotation: &[Vec<usize>],
) -> Result<FacetedSkeleton, SkeletonError> {
    let mut edges = Vec::new();
    for (v, rot) in rotation.iter().enumerate() {
        for &w in rot {
            if w >= n {
                return Err(SkeletonError::BadEdge(v, w));
            }
            if v < w {
                edges.push((v, w));
            }
        }
    }
    // symmetric check
    for (v, rot) in rotation.iter().enumerate() {
        for &w in rot {
            if !rotation[w].contains(&v) {
                return Err(SkeletonError::BadRotation(w));
            }
        }
    }
    let faces = trace_faces(rotation);
    let e: usize = rotation.iter().map(|r| r.len()).sum::<usize>() / 2;
    let f = faces.len();
    if n + f != e + 2 {
        return Err(SkeletonError::NotPlanar { v: n, e, f });
    }
    let mut facets = BTreeMap::new();
    for (i, face) in faces.iter().enumerate() {
        let mut vs: Vec<usize> = face.clone();
        vs.sort_unstable();
        vs.dedup();
        facets.insert(format!("f{i}"), vs);
    }
    let sk = FacetedSkeleton::new(n, &edges, facets, Some(rotation.to_vec()))?;
    sk.check_3_connected()?;
    Ok(sk)
}

/// Traces the face cycles of a rotation system.
///
/// Convention: from directed edge (u, v), the next directed edge is
/// (v, w) where w follows u in the rotation at v. Each face is returned as
/// its vertex cycle.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (u0, rot) in rotation.iter().enumerate() {
        for &v0 in rot {
            if used.contains(&(u0, v0)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                used.insert((u, v));
                face.push(u);
                let pos = rotation[v].iter().position(|&x| x == u).unwrap();
                let w = rotation[v][(pos + 1) % rotation[v].len()];
                u = v;
                v = w;
                if (u, v) == (u0, v0) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hexagon_from_k3() {
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::complete(3)).unwrap();
        assert_eq!(sk.n, 6);
        assert_eq!(sk.facet_count(), 6);
        assert_eq!(sk.edge_count(), 6);
        assert!(sk.is_simple_of_dimension(2));
    }

    #[test]
    fn pentagon_from_p3() {
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::path(3)).unwrap();
        assert_eq!(sk.n, 5);
        assert_eq!(sk.facet_count(), 5);
        assert!(sk.is_simple_of_dimension(2));
    }

    #[test]
    fn cyclohedron_c4() {
        let (sk, _) = skeleton_from_graph_associahedron(&LabeledGraph::cycle(4)).unwrap();
        assert_eq!(sk.n, 20);
        assert_eq!(sk.facet_count(), 12);
        assert!(sk.is_simple_of_dimension(3));
    }

    #[test]
    fn graph_assoc_edges_are_flip_pairs() {
        let (sk, tubings) =
            skeleton_from_graph_associahedron(&LabeledGraph::path(4)).unwrap();
        for a in 0..sk.n {
            for &b in &sk.adj[a] {
                let shared = tubings[a]
                    .tubes()
                    .iter()
                    .filter(|t| tubings[b].contains(**t))
                    .count();
                assert_eq!(shared, tubings[a].len() - 1);
            }
        }
    }

    #[test]
    fn cube_skeleton() {
        let sk = fixtures::cube();
        assert_eq!(sk.n, 8);
        assert_eq!(sk.facet_count(), 6);
        assert!(sk.is_simple_of_dimension(3));
        assert!(sk.check_3_connected().is_ok());
    }

    #[test]
    fn dodecahedron_skeleton() {
        let sk = fixtures::dodecahedron();
        assert_eq!(sk.n, 20);
        assert_eq!(sk.edge_count(), 30);
        assert_eq!(sk.facet_count(), 12);
        assert!(sk.is_simple_of_dimension(3));
        for vs in sk.facets.values() {
            assert_eq!(vs.len(), 5, "dodecahedron facets are pentagons");
        }
    }

    #[test]
    fn euler_holds_for_planar_inputs() {
        for sk in [fixtures::cube(), fixtures::dodecahedron(), fixtures::tetrahedron()] {
            let f = sk.facet_count();
            assert_eq!(sk.n + f, sk.edge_count() + 2);
            // every edge lies on exactly two facets
            let fov = sk.facets_of_vertex();
            for a in 0..sk.n {
                for &b in &sk.adj[a] {
                    if b > a {
                        let shared =
                            fov[a].iter().filter(|f| fov[b].contains(f)).count();
                        assert_eq!(shared, 2);
                    }
                }
            }
        }
    }

    #[test]
    fn non_planar_rotation_rejected() {
        // K5 with arbitrary rotations cannot satisfy Euler
        let rot: Vec<Vec<usize>> = (0..5)
            .map(|v| (0..5).filter(|&w| w != v).collect())
            .collect();
        assert!(matches!(
            skeleton_from_planar_embedding(5, &rot),
            Err(SkeletonError::NotPlanar { .. })
        ));
    }

    #[test]
    fn not_3_connected_reported() {
        // two triangles sharing a vertex: planar but 1-cut at the shared vertex
        let rot = vec![
            vec![1, 2, 3, 4],
            vec![2, 0],
            vec![0, 1],
            vec![4, 0],
            vec![0, 3],
        ];
        assert!(matches!(
            skeleton_from_planar_embedding(5, &rot),
            Err(SkeletonError::Not3Connected(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let sk = fixtures::cube();
        let j = sk.to_json();
        let back = FacetedSkeleton::from_json(&j).unwrap();
        assert_eq!(sk, back);
    }
}
