//! Triangulations of convex polygons: flip walks for type A associahedra
//! and (via centrally symmetric triangulations of the 2n-gon) cyclohedra,
//! plus the bijections onto tubings of paths and cycles.

use crate::graph::VertexSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriError {
    #[error("{0} is not a diagonal of the {1}-gon")]
    NotADiagonal(String, usize),
    #[error("diagonals cross")]
    Crossing,
    #[error("not a full triangulation")]
    NotFull,
    #[error("flip target not found")]
    NoFlip,
    #[error("not centrally symmetric")]
    NotSymmetric,
}

/// A (partial) triangulation of a convex m-gon with corners `0..m-1`
/// in clockwise order. Stores the diagonal set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PolygonTriangulation {
    pub m: usize,
    pub diagonals: BTreeSet<(usize, usize)>,
}

/// Normalizes a corner pair.
fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

pub fn is_diagonal(m: usize, (a, b): (usize, usize)) -> bool {
    a != b && a < m && b < m && (a + 1) % m != b % m && (b + 1) % m != a % m
}

/// Two diagonals cross iff exactly one endpoint of the second lies
/// strictly between the endpoints of the first.
pub fn diagonals_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = norm(a, b);
    let inside = |x: usize| a < x && x < b;
    if c == a || c == b || d == a || d == b {
        return false;
    }
    inside(c) != inside(d)
}

impl PolygonTriangulation {
    pub fn new(m: usize, diagonals: &[(usize, usize)]) -> Result<Self, TriError> {
        let mut set = BTreeSet::new();
        for &(a, b) in diagonals {
            if !is_diagonal(m, (a, b)) {
                return Err(TriError::NotADiagonal(format!("{{{a},{b}}}"), m));
            }
            set.insert(norm(a, b));
        }
        let v: Vec<(usize, usize)> = set.iter().copied().collect();
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if diagonals_cross(v[i], v[j]) {
                    return Err(TriError::Crossing);
                }
            }
        }
        Ok(Self { m, diagonals: set })
    }

    pub fn is_full(&self) -> bool {
        self.diagonals.len() == self.m - 3
    }

    /// True for corner pairs connected by a polygon side or a diagonal.
    fn connected(&self, a: usize, b: usize) -> bool {
        (a + 1) % self.m == b || (b + 1) % self.m == a || self.diagonals.contains(&norm(a, b))
    }

    /// Flips a diagonal of a full triangulation; the replacement is the
    /// other diagonal of the quadrilateral left by removing it.
    pub fn flip(&self, d: (usize, usize)) -> Result<(Self, (usize, usize)), TriError> {
        let d = norm(d.0, d.1);
        if !self.is_full() {
            return Err(TriError::NotFull);
        }
        if !self.diagonals.contains(&d) {
            return Err(TriError::NoFlip);
        }
        let (a, b) = d;
        // the two triangle apexes over d, one on each side
        let mut apexes = Vec::new();
        for x in 0..self.m {
            if x != a && x != b && self.connected(a, x) && self.connected(b, x) {
                // x forms a triangle with d iff no diagonal crosses a leg
                let tri_ok = self
                    .diagonals
                    .iter()
                    .all(|&e| e == d || (!diagonals_cross((a, x), e) && !diagonals_cross((b, x), e)));
                if tri_ok {
                    apexes.push(x);
                }
            }
        }
        if apexes.len() != 2 {
            return Err(TriError::NoFlip);
        }
        let new_d = norm(apexes[0], apexes[1]);
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(&d);
        diagonals.insert(new_d);
        let out = Self { m: self.m, diagonals };
        debug_assert!(
            PolygonTriangulation::new(out.m, &out.diagonals.iter().copied().collect::<Vec<_>>())
                .is_ok()
        );
        Ok((out, new_d))
    }
}

/// Walk of full triangulations; consecutive steps differ by one flip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationWalk {
    pub m: usize,
    pub closed: bool,
    pub steps: Vec<PolygonTriangulation>,
}

impl TriangulationWalk {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "triangulation_walk",
            "polygon": self.m,
            "closed": self.closed,
            "steps": self
                .steps
                .iter()
                .map(|t| t.diagonals.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// The bistar triangulation S_i of the (n+2)-gon (0-based i in 0..n):
/// diagonals {i,k} for k in i+2..=n+1 plus {k,n+1} for k in 1..=i.
pub fn bistar(n: usize, i: usize) -> PolygonTriangulation {
    let m = n + 2;
    let mut d = Vec::new();
    for k in (i + 2)..=(n + 1) {
        if is_diagonal(m, (i, k)) {
            d.push((i, k));
        }
    }
    for k in 1..=i {
        if is_diagonal(m, (k, n + 1)) {
            d.push((k, n + 1));
        }
    }
    PolygonTriangulation::new(m, &d).unwrap()
}

/// Facet-Hamiltonian cycle on the type A associahedron by sweeping
/// bistars: block i rotates the star center from corner i to i+1, and the
/// terminal block moves the star from corner n+1 back to corner 0.
pub fn assoc_cycle_bistar(n: usize) -> TriangulationWalk {
    assert!(n >= 3);
    let mut cur = bistar(n, 0);
    let mut steps = vec![cur.clone()];
    for i in 0..n - 1 {
        // replace {i, i+k} by {i+1, i+k+1} for increasing k
        for k in 2..=(n - i) {
            let (next, introduced) = cur.flip((i, i + k)).unwrap();
            debug_assert_eq!(introduced, norm(i + 1, i + k + 1));
            cur = next;
            steps.push(cur.clone());
        }
        debug_assert_eq!(cur, bistar(n, i + 1));
    }
    // terminal block: replace {k, n+1} by {0, k+1} for increasing k
    for k in 1..=(n - 1) {
        let (next, introduced) = cur.flip((k, n + 1)).unwrap();
        debug_assert_eq!(introduced, norm(0, k + 1));
        cur = next;
        steps.push(cur.clone());
    }
    assert_eq!(cur, steps[0]);
    steps.pop();
    TriangulationWalk { m: n + 2, closed: true, steps }
}

/// Slope class c of the m-gon: diagonals {a,b} with a+b = c (mod m).
pub fn slope_class(m: usize, c: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            if (a + b) % m == c % m && is_diagonal(m, (a, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn diag_len(m: usize, (a, b): (usize, usize)) -> usize {
    let g = b - a;
    g.min(m - g)
}

/// Facet-Hamiltonian cycle on the type A associahedron by sweeping
/// classes of parallel diagonals: T_i = P_i u P_{i+1}; block i removes
/// P_i and introduces P_{i+2}, shortest introduced diagonal first.
pub fn assoc_cycle_parallel(n: usize) -> TriangulationWalk {
    assert!(n >= 3);
    let m = n + 2;
    let class_union = |i: usize, j: usize| -> PolygonTriangulation {
        let mut d = slope_class(m, i % m);
        d.extend(slope_class(m, j % m));
        PolygonTriangulation::new(m, &d).unwrap()
    };
    let mut cur = class_union(0, 1);
    assert!(cur.is_full());
    let mut steps = vec![cur.clone()];
    for i in 0..m {
        let mut to_remove = slope_class(m, i);
        to_remove.sort_by_key(|&d| diag_len(m, cur.flip(d).unwrap().1));
        for d in to_remove {
            let (next, intro) = cur.flip(d).unwrap();
            debug_assert_eq!((intro.0 + intro.1) % m, (i + 2) % m);
            cur = next;
            steps.push(cur.clone());
        }
        debug_assert_eq!(cur, class_union(i + 1, i + 2));
    }
    assert_eq!(cur, steps[0]);
    steps.pop();
    TriangulationWalk { m, closed: true, steps }
}

// ---------------------------------------------------------------------
// Type B / cyclohedron: centrally symmetric triangulations of the 2n-gon
// ---------------------------------------------------------------------

/// The antipodal image of a corner of the m-gon (m even).
pub fn antipode(m: usize, p: usize) -> usize {
    (p + m / 2) % m
}

pub fn antipode_diag(m: usize, (a, b): (usize, usize)) -> (usize, usize) {
    norm(antipode(m, a), antipode(m, b))
}

/// A centrally symmetric full triangulation of a convex 2n-gon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymmetricTriangulation(pub PolygonTriangulation);

impl SymmetricTriangulation {
    pub fn new(t: PolygonTriangulation) -> Result<Self, TriError> {
        if t.m % 2 != 0 {
            return Err(TriError::NotSymmetric);
        }
        for &d in &t.diagonals {
            if !t.diagonals.contains(&antipode_diag(t.m, d)) {
                return Err(TriError::NotSymmetric);
            }
        }
        Ok(Self(t))
    }

    /// One cyclohedron step: flip a symmetric pair, or a long diagonal.
    pub fn flip_orbit(&self, d: (usize, usize)) -> Result<(Self, Vec<(usize, usize)>), TriError> {
        let m = self.0.m;
        let d = norm(d.0, d.1);
        let sd = antipode_diag(m, d);
        let (t1, i1) = self.0.flip(d)?;
        if sd == d {
            // long diagonal flips alone
            return Ok((Self(t1), vec![i1]));
        }
        let (t2, i2) = t1.flip(sd)?;
        debug_assert_eq!(antipode_diag(m, i1), i2);
        Ok((Self(t2), vec![i1, i2]))
    }
}

/// The bistar-style symmetric triangulation S_i of the 2n-gon:
/// clockwise diagonals {i, i+k} for k in 2..=n together with their
/// antipodal copies (0-based positions).
pub fn cyclo_bistar(n: usize, i: usize) -> SymmetricTriangulation {
    let m = 2 * n;
    let mut d = Vec::new();
    for k in 2..=n {
        let dd = norm(i % m, (i + k) % m);
        d.push(dd);
        d.push(antipode_diag(m, dd));
    }
    SymmetricTriangulation::new(PolygonTriangulation::new(m, &d).unwrap()).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycloStrategy {
    Bistar,
    Parallel,
}

/// Walk of symmetric triangulations; each step is one cyclohedron flip
/// (a symmetric diagonal pair, or a long diagonal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricWalk {
    pub m: usize,
    pub closed: bool,
    pub steps: Vec<SymmetricTriangulation>,
}

impl SymmetricWalk {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "symmetric_triangulation_walk",
            "polygon": self.m,
            "closed": self.closed,
            "steps": self
                .steps
                .iter()
                .map(|t| t.0.diagonals.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Facet-Hamiltonian cycle on the cyclohedron, length n(n-1).
pub fn cyclo_cycle(n: usize, strategy: CycloStrategy) -> SymmetricWalk {
    assert!(n >= 3);
    match strategy {
        CycloStrategy::Bistar => cyclo_cycle_bistar(n),
        CycloStrategy::Parallel => cyclo_cycle_parallel(n),
    }
}

fn cyclo_cycle_bistar(n: usize) -> SymmetricWalk {
    let m = 2 * n;
    let mut cur = cyclo_bistar(n, 0);
    let mut steps = vec![cur.clone()];
    for i in 0..n {
        // pairs by increasing introduced length, then the long diagonal
        for k in 2..n {
            let d = norm(i % m, (i + k) % m);
            let (next, _) = cur.flip_orbit(d).unwrap();
            cur = next;
            steps.push(cur.clone());
        }
        let long = norm(i % m, (i + n) % m);
        let (next, _) = cur.flip_orbit(long).unwrap();
        cur = next;
        steps.push(cur.clone());
        debug_assert_eq!(cur, cyclo_bistar(n, i + 1));
    }
    assert_eq!(cur, steps[0]);
    steps.pop();
    SymmetricWalk { m, closed: true, steps }
}

fn cyclo_cycle_parallel(n: usize) -> SymmetricWalk {
    let m = 2 * n;
    let class_union = |i: usize, j: usize| -> SymmetricTriangulation {
        let mut d = slope_class(m, i % m);
        d.extend(slope_class(m, j % m));
        SymmetricTriangulation::new(PolygonTriangulation::new(m, &d).unwrap()).unwrap()
    };
    let mut cur = class_union(0, 1);
    assert!(cur.0.is_full());
    let mut steps = vec![cur.clone()];
    for i in 0..m {
        // orbits of class i under the antipodal map, shortest first
        let mut orbits: Vec<(usize, usize)> = slope_class(m, i)
            .into_iter()
            .filter(|&d| d <= antipode_diag(m, d))
            .collect();
        orbits.sort_by_key(|&d| diag_len(m, d));
        for d in orbits {
            let (next, _) = cur.flip_orbit(d).unwrap();
            cur = next;
            steps.push(cur.clone());
        }
        debug_assert_eq!(cur, class_union(i + 1, i + 2));
    }
    assert_eq!(cur, steps[0]);
    steps.pop();
    SymmetricWalk { m, closed: true, steps }
}

// ---------------------------------------------------------------------
// Bijections with tubings
// ---------------------------------------------------------------------

/// Type A: diagonal {i,j} of the (n+2)-gon (corners 0..n+1, j > i+1)
/// corresponds to the tube {i+1,..,j-1} of the path P_n (labels 1..n).
pub fn diagonal_to_path_tube(n: usize, (a, b): (usize, usize)) -> VertexSet {
    let (a, b) = norm(a, b);
    debug_assert!(is_diagonal(n + 2, (a, b)));
    let mut set = 0u64;
    for label in (a + 1)..b {
        set |= 1 << (label - 1); // label l has vertex index l-1
    }
    debug_assert_ne!(set, 0);
    set
}

pub fn path_tube_to_diagonal(_n: usize, tube: VertexSet) -> (usize, usize) {
    let lo = tube.trailing_zeros() as usize; // index
    let hi = 63 - tube.leading_zeros() as usize;
    debug_assert_eq!(tube, ((1u64 << (hi + 1)) - 1) & !((1u64 << lo) - 1));
    (lo, hi + 2)
}

/// Type B: a symmetric diagonal orbit of the 2n-gon corresponds to the
/// cyclic-interval tube of C_n spanned by the corners on its short side
/// (position p carries the 0-indexed vertex p mod n).
pub fn orbit_to_cycle_tube(n: usize, d: (usize, usize)) -> VertexSet {
    let m = 2 * n;
    let (a, b) = norm(d.0, d.1);
    let g = b - a;
    let (from, count) = if g <= n { (a + 1, g - 1) } else { (b + 1, m - g - 1) };
    let mut set = 0u64;
    for k in 0..count {
        set |= 1 << ((from + k) % m % n);
    }
    debug_assert_eq!(set.count_ones() as usize, count, "labels must be distinct");
    set
}

/// Inverse of [`orbit_to_cycle_tube`]: the canonical (smaller) member of
/// the symmetric orbit spanning the tube.
pub fn cycle_tube_to_orbit(n: usize, tube: VertexSet) -> (usize, usize) {
    let m = 2 * n;
    let members: Vec<usize> = crate::graph::set_members(tube).collect();
    let size = members.len();
    debug_assert!(size < n);
    let start = members
        .iter()
        .copied()
        .find(|&v| tube & (1 << ((v + n - 1) % n)) == 0)
        .expect("tube must be a proper cyclic interval");
    // the interval occupies positions start..start+size-1; the chord runs
    // from the predecessor position to the successor position
    let p = (start + m - 1) % m;
    let q = (start + size) % m;
    let d = norm(p, q);
    let sd = antipode_diag(m, d);
    d.min(sd)
}
