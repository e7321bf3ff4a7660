//! Type D associahedra via centrally symmetric pseudotriangulations of a
//! 2n-gon with a small disk at its center.
//!
//! Chords are the polygon diagonals disjoint from the disk (all but the n
//! long ones) together with two tangents from each corner to the disk.
//! Crossing is decided by a finite combinatorial rule (the small-disk
//! limit of the geometry), so no floating point is involved:
//!
//! - diagonals cross as usual;
//! - a tangent from corner p crosses a diagonal iff the diagonal
//!   separates p from the center, i.e. p lies strictly on the minor side;
//! - equal-handed tangents never cross;
//! - a left tangent at p crosses a right tangent at q iff q lies in the
//!   open half-turn starting at p (q - p mod 2n in 1..n).
//!
//! Vertices of the polytope are the centrally symmetric
//! pseudotriangulations: maximal symmetric sets of pairwise non-crossing
//! chords, each of size 2n. Facets are the n^2 symmetric chord orbits.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeDError {
    #[error("invalid chord for 2n-gon")]
    BadChord,
    #[error("chords cross")]
    Crossing,
    #[error("not centrally symmetric")]
    NotSymmetric,
    #[error("flip target not found")]
    NoFlip,
}

/// A chord of the disk-punctured 2n-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Chord {
    /// Polygon diagonal avoiding the disk (not a long diagonal).
    Diag(usize, usize),
    /// Left tangent from a corner to the central disk.
    TanL(usize),
    /// Right tangent from a corner to the central disk.
    TanR(usize),
}

pub fn all_chords(n: usize) -> Vec<Chord> {
    let m = 2 * n;
    let mut out = Vec::new();
    for a in 0..m {
        for b in (a + 2)..m {
            if b - a != n && !(a == 0 && b == m - 1) && b - a >= 2 {
                out.push(Chord::Diag(a, b));
            }
        }
    }
    for p in 0..m {
        out.push(Chord::TanL(p));
        out.push(Chord::TanR(p));
    }
    out
}

/// The antipodal map on chords.
pub fn sigma(n: usize, c: Chord) -> Chord {
    let m = 2 * n;
    match c {
        Chord::Diag(a, b) => {
            let (x, y) = ((a + n) % m, (b + n) % m);
            Chord::Diag(x.min(y), x.max(y))
        }
        Chord::TanL(p) => Chord::TanL((p + n) % m),
        Chord::TanR(p) => Chord::TanR((p + n) % m),
    }
}

/// Canonical representative of the symmetric orbit of a chord.
pub fn orbit(n: usize, c: Chord) -> Chord {
    c.min(sigma(n, c))
}

/// True iff corner p lies strictly on the minor side (away from the
/// center) of diagonal {a,b}.
fn separates(m: usize, (a, b): (usize, usize), p: usize) -> bool {
    let g = b - a;
    debug_assert!(g != m / 2, "long diagonals are not chords");
    if g < m / 2 {
        a < p && p < b
    } else {
        p > b || p < a
    }
}

pub fn chords_cross(n: usize, c1: Chord, c2: Chord) -> bool {
    let m = 2 * n;
    match (c1, c2) {
        (Chord::Diag(a, b), Chord::Diag(c, d)) => {
            crate::triangulation::diagonals_cross((a, b), (c, d))
        }
        (Chord::Diag(a, b), Chord::TanL(p) | Chord::TanR(p))
        | (Chord::TanL(p) | Chord::TanR(p), Chord::Diag(a, b)) => {
            p != a && p != b && separates(m, (a, b), p)
        }
        (Chord::TanL(_), Chord::TanL(_)) | (Chord::TanR(_), Chord::TanR(_)) => false,
        (Chord::TanL(p), Chord::TanR(q)) | (Chord::TanR(q), Chord::TanL(p)) => {
            let d = (q + m - p) % m;
            (1..n).contains(&d)
        }
    }
}

/// A centrally symmetric pseudotriangulation: a maximal symmetric set of
/// pairwise non-crossing chords (2n of them).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PseudoTriangulation {
    pub n: usize,
    pub chords: BTreeSet<Chord>,
}

impl PseudoTriangulation {
    pub fn new(n: usize, chords: &[Chord]) -> Result<Self, TypeDError> {
        let set: BTreeSet<Chord> = chords.iter().copied().collect();
        for &c in &set {
            if !all_chords(n).contains(&c) {
                return Err(TypeDError::BadChord);
            }
            if !set.contains(&sigma(n, c)) {
                return Err(TypeDError::NotSymmetric);
            }
        }
        let v: Vec<Chord> = set.iter().copied().collect();
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if chords_cross(n, v[i], v[j]) {
                    return Err(TypeDError::Crossing);
                }
            }
        }
        Ok(Self { n, chords: set })
    }

    pub fn orbits(&self) -> BTreeSet<Chord> {
        self.chords.iter().map(|&c| orbit(self.n, c)).collect()
    }

    /// Flips the symmetric orbit of `c`: removes {c, sigma c} and inserts
    /// the unique other orbit completing a pseudotriangulation.
    pub fn flip_orbit(&self, c: Chord) -> Result<(Self, Chord), TypeDError> {
        let n = self.n;
        let sc = sigma(n, c);
        if !self.chords.contains(&c) {
            return Err(TypeDError::NoFlip);
        }
        let rest: Vec<Chord> =
            self.chords.iter().copied().filter(|&x| x != c && x != sc).collect();
        let mut found = None;
        'cand: for cand in all_chords(n) {
            if cand == c || cand == sc || rest.contains(&cand) {
                continue;
            }
            let scand = sigma(n, cand);
            if chords_cross(n, cand, scand) {
                continue;
            }
            for &r in &rest {
                if chords_cross(n, cand, r) || chords_cross(n, scand, r) {
                    continue 'cand;
                }
            }
            if orbit(n, cand) != cand {
                continue; // consider each orbit once, via its representative
            }
            debug_assert!(found.is_none(), "flip replacement must be unique");
            found = Some(cand);
            #[cfg(not(debug_assertions))]
            break;
        }
        let new = found.ok_or(TypeDError::NoFlip)?;
        let mut chords: BTreeSet<Chord> = rest.into_iter().collect();
        chords.insert(new);
        chords.insert(sigma(n, new));
        Ok((Self { n, chords }, new))
    }

    pub fn rotate(&self, by: usize) -> Self {
        let m = 2 * self.n;
        let chords = self
            .chords
            .iter()
            .map(|&c| match c {
                Chord::Diag(a, b) => {
                    let (x, y) = ((a + by) % m, (b + by) % m);
                    Chord::Diag(x.min(y), x.max(y))
                }
                Chord::TanL(p) => Chord::TanL((p + by) % m),
                Chord::TanR(p) => Chord::TanR((p + by) % m),
            })
            .collect();
        Self { n: self.n, chords }
    }
}

/// The zigzag pseudotriangulation: the snake triangulation of the 2n-gon
/// with its long middle diagonal replaced by the four tangents at the
/// diagonal's endpoints.
pub fn zigzag(n: usize) -> PseudoTriangulation {
    let m = 2 * n;
    let mut chords = Vec::new();
    let mut long_ends = None;
    for j in 0..(m - 3) {
        let (a, b) = if j % 2 == 0 {
            (j / 2 + 1, m - 1 - j / 2)
        } else {
            (j / 2 + 1, m - 2 - j / 2)
        };
        if b - a == n {
            long_ends = Some((a, b));
        } else {
            chords.push(Chord::Diag(a.min(b), a.max(b)));
        }
    }
    let (v, w) = long_ends.expect("zigzag contains one long diagonal");
    debug_assert_eq!((v + n) % m, w);
    for p in [v, w] {
        chords.push(Chord::TanL(p));
        chords.push(Chord::TanR(p));
    }
    PseudoTriangulation::new(n, &chords).expect("zigzag is a valid pseudotriangulation")
}

/// Walk of pseudotriangulations; each step flips one symmetric orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoTriWalk {
    pub n: usize,
    pub closed: bool,
    pub steps: Vec<PseudoTriangulation>,
}

impl PseudoTriWalk {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "pseudotriangulation_walk",
            "n": self.n,
            "closed": self.closed,
            "steps": self
                .steps
                .iter()
                .map(|t| t.chords.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Facet-Hamiltonian cycle of length n^2 on the type D associahedron:
/// n blocks of n flips, each rotating the zigzag by one corner. Within a
/// block, any flip whose replacement lands in the target is applied,
/// smallest replacement first.
pub fn assoc_d_cycle(n: usize) -> PseudoTriWalk {
    assert!(n >= 3);
    let t0 = zigzag(n);
    let mut cur = t0.clone();
    let mut steps = vec![cur.clone()];
    for i in 0..n {
        let target = t0.rotate(i + 1);
        let mut guard = 0;
        while cur != target {
            let mut candidates: Vec<(Chord, Chord)> = Vec::new();
            for &c in cur.chords.iter() {
                if orbit(n, c) != c || target.chords.contains(&c) {
                    continue;
                }
                if let Ok((_, repl)) = cur.flip_orbit(c) {
                    if target.chords.contains(&repl) || target.chords.contains(&sigma(n, repl)) {
                        candidates.push((c, repl));
                    }
                }
            }
            let (c, _) = *candidates.first().expect("block must progress");
            let (next, _) = cur.flip_orbit(c).unwrap();
            cur = next;
            steps.push(cur.clone());
            guard += 1;
            assert!(guard <= n, "block exceeded n flips");
        }
        assert_eq!(guard, n, "each rotation block takes exactly n flips");
    }
    assert_eq!(cur, steps[0], "rotation by 2 pi closes the walk");
    steps.pop();
    PseudoTriWalk { n, closed: true, steps }
}

/// Enumerates all centrally symmetric pseudotriangulations by flip BFS
/// from the zigzag (the flip graph is connected for finite types).
pub fn enumerate_pseudotriangulations(n: usize) -> Vec<PseudoTriangulation> {
    let start = zigzag(n);
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    while let Some(t) = queue.pop() {
        for &c in t.chords.clone().iter() {
            if orbit(n, c) != c {
                continue;
            }
            if let Ok((next, _)) = t.flip_orbit(c) {
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}
