//! Checked-in combinatorial fixtures.
//!
//! The upstream drawings these correspond to are not machine-readable, so
//! each fixture is reconstructed combinatorially and verified by the test
//! suite (exhaustive search where a negative property is claimed).

use crate::skeleton::{FacetedSkeleton, SkeletonError};
use std::collections::BTreeMap;

/// Builds a 3-polytope skeleton from its face cycles.
///
/// Face cycles may be given with arbitrary orientations; they are
/// reoriented so that every directed edge is used exactly once, then the
/// rotation system is assembled from the corners.
pub fn skeleton_from_face_cycles(
    n: usize,
    faces: &[Vec<usize>],
) -> Result<FacetedSkeleton, SkeletonError> {
    // orient faces consistently: each undirected edge in both directions
    let mut oriented: Vec<Option<Vec<usize>>> = vec![None; faces.len()];
    let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for w in 0..f.len() {
            let (a, b) = (f[w], f[(w + 1) % f.len()]);
            let key = (a.min(b), a.max(b));
            edge_faces.entry(key).or_default().push(i);
        }
    }
    oriented[0] = Some(faces[0].clone());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let fi = oriented[i].clone().unwrap();
        for w in 0..fi.len() {
            let (a, b) = (fi[w], fi[(w + 1) % fi.len()]);
            let key = (a.min(b), a.max(b));
            for &j in &edge_faces[&key] {
                if j == i || oriented[j].is_some() {
                    continue;
                }
                // neighbor must traverse the shared edge in the opposite direction
                let fj = &faces[j];
                let mut chosen = fj.clone();
                let uses_same_dir = (0..fj.len())
                    .any(|w2| fj[w2] == a && fj[(w2 + 1) % fj.len()] == b);
                if uses_same_dir {
                    chosen.reverse();
                }
                oriented[j] = Some(chosen);
                queue.push(j);
            }
        }
    }
    let oriented: Vec<Vec<usize>> = oriented.into_iter().map(Option::unwrap).collect();
    // rotation: at each corner [.., a, v, b, ..] record successor(v): a -> b
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in &oriented {
        let k = f.len();
        for w in 0..k {
            let a = f[w];
            let v = f[(w + 1) % k];
            let b = f[(w + 2) % k];
            succ[v].insert(a, b);
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let map = &succ[v];
        if map.is_empty() {
            return Err(SkeletonError::BadRotation(v));
        }
        let start = *map.keys().next().unwrap();
        let mut cur = start;
        loop {
            rotation[v].push(cur);
            cur = *map.get(&cur).ok_or(SkeletonError::BadRotation(v))?;
            if cur == start {
                break;
            }
        }
        if rotation[v].len() != map.len() {
            return Err(SkeletonError::BadRotation(v));
        }
    }
    crate::skeleton::skeleton_from_planar_embedding(n, &rotation)
}

/// The tetrahedron.
pub fn tetrahedron() -> FacetedSkeleton {
    skeleton_from_face_cycles(
        4,
        &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]],
    )
    .unwrap()
}

/// The cube, vertices indexed by the bits of (x, y, z).
pub fn cube() -> FacetedSkeleton {
    let faces = vec![
        vec![0b000, 0b001, 0b011, 0b010], // x = 0
        vec![0b100, 0b101, 0b111, 0b110], // x = 1
        vec![0b000, 0b001, 0b101, 0b100], // y = 0
        vec![0b010, 0b011, 0b111, 0b110], // y = 1
        vec![0b000, 0b010, 0b110, 0b100], // z = 0
        vec![0b001, 0b011, 0b111, 0b101], // z = 1
    ];
    skeleton_from_face_cycles(8, &faces).unwrap()
}

/// The octahedron (non-simple: vertex degree 4).
pub fn octahedron() -> FacetedSkeleton {
    let faces = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 1],
        vec![5, 2, 1],
        vec![5, 3, 2],
        vec![5, 4, 3],
        vec![5, 1, 4],
    ];
    skeleton_from_face_cycles(6, &faces).unwrap()
}

/// The dodecahedron, built in four layers of five vertices:
/// top pentagon `a = 0..5`, upper band `b = 5..10`, lower band `c = 10..15`,
/// bottom pentagon `d = 15..20`.
pub fn dodecahedron() -> FacetedSkeleton {
    let a = |i: usize| i % 5;
    let b = |i: usize| 5 + i % 5;
    let c = |i: usize| 10 + i % 5;
    let d = |i: usize| 15 + i % 5;
    let mut faces = vec![
        (0..5).map(a).collect::<Vec<_>>(),
        (0..5).map(d).collect::<Vec<_>>(),
    ];
    for i in 0..5 {
        faces.push(vec![a(i), a(i + 1), b(i + 1), c(i), b(i)]);
        faces.push(vec![d(i), d(i + 1), c(i + 1), b(i + 1), c(i)]);
    }
    skeleton_from_face_cycles(20, &faces).unwrap()
}

/// The Goldner–Harary graph: the smallest non-Hamiltonian planar
/// triangulation. Returned as its face list over 11 vertices.
///
/// Construction: the triangular bipyramid (equator 0,1,2; apexes 3,4) with
/// a vertex stacked into each of its six faces.
pub fn goldner_harary_faces() -> (usize, Vec<Vec<usize>>) {
    let bipyramid_faces = [
        [0, 1, 3],
        [1, 2, 3],
        [2, 0, 3],
        [0, 1, 4],
        [1, 2, 4],
        [2, 0, 4],
    ];
    let mut faces = Vec::new();
    for (k, f) in bipyramid_faces.iter().enumerate() {
        let w = 5 + k;
        faces.push(vec![f[0], f[1], w]);
        faces.push(vec![f[1], f[2], w]);
        faces.push(vec![f[2], f[0], w]);
    }
    (11, faces)
}

/// Dual of the Goldner–Harary graph: a simple 3-polytope with 18 vertices
/// and 11 facets that has no facet-Hamiltonian cycle (a simple 3-polytope
/// is facet-Hamiltonian exactly when its dual triangulation is
/// Hamiltonian, and Goldner–Harary is not). Verified by exhaustive search
/// in the test suite.
pub fn non_facet_hamiltonian_fixture() -> FacetedSkeleton {
    let (n, faces) = goldner_harary_faces();
    // dual vertices = faces; adjacency = shared edges; facets = one per
    // original vertex (the faces around it)
    let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for w in 0..f.len() {
            let (x, y) = (f[w], f[(w + 1) % f.len()]);
            edge_faces.entry((x.min(y), x.max(y))).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for fs in edge_faces.values() {
        assert_eq!(fs.len(), 2, "triangulation edge must bound two faces");
        edges.push((fs[0].min(fs[1]), fs[0].max(fs[1])));
    }
    let mut facets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let around: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&v))
            .map(|(i, _)| i)
            .collect();
        facets.insert(format!("v{v}"), around);
    }
    FacetedSkeleton::new(faces.len(), &edges, facets, None).unwrap()
}

/// A non-simple 3-polytope with a facet-Hamiltonian cycle but no
/// facet-Hamiltonian path. Verified by exhaustive search in both modes.
///
/// Construction: central triangle u0,u1,u2 (its boundary is the cycle);
/// over each central edge a ladder of three rung vertices with side
/// triangles; an apex joins the three ladder tops with quadrilaterals.
/// Every facet touches the central triangle, so the triangle boundary is
/// facet-Hamiltonian, but any path must spend two edges at a visited
/// central vertex inside each incident ladder, which exceeds path degree.
pub fn cycle_without_path_fixture() -> FacetedSkeleton {
    let depth = 3;
    let u = |i: usize| i % 3;
    let r = |i: usize, d: usize| 3 + (i % 3) * depth + d;
    let t = 3 + 3 * depth;
    let mut faces = vec![vec![0, 1, 2]];
    for i in 0..3 {
        faces.push(vec![u(i), u(i + 1), r(i, 0)]);
        for d in 0..depth - 1 {
            faces.push(vec![u(i), r(i, d), r(i, d + 1)]);
            faces.push(vec![u(i + 1), r(i, d), r(i, d + 1)]);
        }
        faces.push(vec![u(i + 1), r(i, depth - 1), t, r(i + 1, depth - 1)]);
    }
    skeleton_from_face_cycles(t + 1, &faces).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_shape() {
        let sk = octahedron();
        assert_eq!(sk.n, 6);
        assert_eq!(sk.edge_count(), 12);
        assert_eq!(sk.facet_count(), 8);
        assert!(sk.simple_dimension().is_none());
    }

    #[test]
    fn goldner_harary_counts() {
        let (n, faces) = goldner_harary_faces();
        assert_eq!(n, 11);
        assert_eq!(faces.len(), 18);
        let mut edges = std::collections::BTreeSet::new();
        for f in &faces {
            for w in 0..3 {
                let (a, b) = (f[w], f[(w + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        assert_eq!(edges.len(), 27);
    }

    #[test]
    fn cycle_without_path_fixture_shape() {
        let sk = cycle_without_path_fixture();
        assert_eq!(sk.n, 13);
        assert_eq!(sk.facet_count(), 19);
        assert!(sk.simple_dimension().is_none(), "fixture is non-simple");
        assert!(sk.check_3_connected().is_ok());
    }

    #[test]
    fn cycle_without_path_fixture_behaviour() {
        use crate::search::{search_fh, SearchMode, SearchOutcome};
        let sk = cycle_without_path_fixture();
        let (c, _) = search_fh(&sk, SearchMode::Cycle, 10_000_000);
        assert!(matches!(c, SearchOutcome::Found(_)));
        let (p, _) = search_fh(&sk, SearchMode::Path, 10_000_000);
        assert_eq!(p, SearchOutcome::None);
    }

    #[test]
    fn gh_dual_is_simple_3_polytope() {
        let sk = non_facet_hamiltonian_fixture();
        assert_eq!(sk.n, 18);
        assert_eq!(sk.facet_count(), 11);
        assert!(sk.is_simple_of_dimension(3));
        assert!(sk.check_3_connected().is_ok());
        assert_eq!(sk.n + sk.facet_count(), sk.edge_count() + 2);
    }
}
