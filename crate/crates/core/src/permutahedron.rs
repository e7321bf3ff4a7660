//! Facet-Hamiltonian paths and cycles on permutahedra.
//!
//! The path from `1..n` to `n,1,..,n-1` is built inductively from two
//! copies of the path for n-1 (one with n appended, one reversed with n
//! prepended) joined by the block that shifts n to the front. The cycle
//! closes the path with the block shifting n back to the end.

use crate::perm::{rotation_closing, rotation_path, RotationPathIter};
use crate::walks::PermutationWalk;

/// Threshold beyond which walks are not materialized eagerly.
pub const MATERIALIZE_LIMIT: usize = 12;

/// Facet-Hamiltonian path on the (n-1)-dimensional permutahedron from
/// `1,..,n` to `n,1,..,n-1`, for n >= 1.
pub fn perm_fh_path(n: usize) -> PermutationWalk {
    assert!(n >= 1);
    let alpha: Vec<usize> = (1..=n).collect();
    PermutationWalk { perms: rotation_path(&alpha), closed: false }
}

/// Facet-Hamiltonian cycle of length 2^n - 2 on the permutahedron, n >= 3.
pub fn perm_fh_cycle(n: usize) -> PermutationWalk {
    assert!(n >= 3, "permutahedron cycles need n >= 3");
    let mut perms = perm_fh_path(n).perms;
    let last = perms.last().unwrap().clone();
    let mut closing = rotation_closing(&last);
    closing.pop(); // final permutation is the start again
    perms.extend(closing);
    PermutationWalk { perms, closed: true }
}

/// Streaming variant of [`perm_fh_cycle`] for large n: yields the cycle's
/// permutations one at a time.
pub fn perm_fh_cycle_iter(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n >= 3);
    let alpha: Vec<usize> = (1..=n).collect();
    let path = RotationPathIter::new(&alpha);
    let mut closing = {
        let mut rot = vec![n];
        rot.extend(1..n);
        let mut c = rotation_closing(&rot);
        c.pop();
        c.into_iter()
    };
    let mut in_path = true;
    let mut path_iter = path;
    std::iter::from_fn(move || {
        if in_path {
            match path_iter.next() {
                Some(p) => return Some(p),
                None => in_path = false,
            }
        }
        closing.next()
    })
}
