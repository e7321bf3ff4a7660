//! Permutations and the inductive prefix-covering paths on them.
//!
//! The central tool is [`rotation_path`]: for an ordered alphabet
//! `a_1..a_k` it returns a sequence of permutations from `a_1..a_k` to
//! `a_k, a_1, .., a_{k-1}` in which consecutive permutations differ by one
//! adjacent transposition and every proper nonempty subset of the alphabet
//! appears as a prefix set in exactly one contiguous block.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("sequence is not a permutation of 0..n")]
    NotBijective,
    #[error("insertion position {0} out of range")]
    BadPosition(usize),
}

/// A permutation, stored as the sequence of its values.
///
/// Values are arbitrary `usize` tokens (vertex indices, not necessarily
/// `0..n`); bijectivity over `0..n` is only enforced by [`Permutation::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    /// Checks that the sequence is a bijection on `0..n`.
    pub fn new(seq: Vec<usize>) -> Result<Self, PermError> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &x in &seq {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Self(seq))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inserts `value` so that it lands at (1-based) position `k`.
    pub fn insert_at(&self, k: usize, value: usize) -> Result<Self, PermError> {
        if k == 0 || k > self.len() + 1 {
            return Err(PermError::BadPosition(k));
        }
        let mut v = self.0.clone();
        v.insert(k - 1, value);
        Ok(Self(v))
    }

    /// The proper nonempty prefix sets, smallest first.
    pub fn prefix_sets(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0u64;
        for &x in &self.0[..self.len().saturating_sub(1)] {
            acc |= 1 << x;
            out.push(acc);
        }
        out
    }

    /// True iff `other` differs from `self` by one adjacent transposition.
    pub fn adjacent_transposition_away(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let diffs: Vec<usize> = (0..self.len()).filter(|&i| self.0[i] != other.0[i]).collect();
        matches!(diffs.as_slice(),
            &[i, j] if j == i + 1 && self.0[i] == other.0[j] && self.0[j] == other.0[i])
    }
}

/// Adjacent-transposition positions (1-based) realizing the rotation path
/// on an alphabet of size `k`.
///
/// `positions(k) = positions(k-1) ++ [k-1, .., 1] ++ (rev(positions(k-1)) + 1)`
pub fn rotation_path_positions(k: usize) -> Vec<usize> {
    fn forward(k: usize, shift: usize, out: &mut Vec<usize>) {
        if k <= 1 {
            return;
        }
        forward(k - 1, shift, out);
        for p in (1..k).rev() {
            out.push(p + shift);
        }
        backward(k - 1, shift + 1, out);
    }
    fn backward(k: usize, shift: usize, out: &mut Vec<usize>) {
        if k <= 1 {
            return;
        }
        forward(k - 1, shift + 1, out);
        for p in 1..k {
            out.push(p + shift);
        }
        backward(k - 1, shift, out);
    }
    let mut out = Vec::new();
    forward(k, 0, &mut out);
    out
}

/// The path of the inductive construction on the ordered alphabet:
/// from `alpha` to `rot(alpha)` (last element moved to the front).
///
/// Every proper nonempty subset of the alphabet occurs as a prefix set in
/// exactly one contiguous block of the path.
pub fn rotation_path<T: Clone>(alpha: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = alpha.to_vec();
    let mut out = vec![cur.clone()];
    for p in rotation_path_positions(alpha.len()) {
        cur.swap(p - 1, p);
        out.push(cur.clone());
    }
    out
}

/// Closing block: from `rot(alpha)` back to `alpha`, moving the front
/// element rightward one swap at a time (positions `1..k-1`).
pub fn rotation_closing<T: Clone>(rot: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = rot.to_vec();
    let mut out = Vec::new();
    for p in 1..rot.len() {
        cur.swap(p - 1, p);
        out.push(cur.clone());
    }
    out
}

/// Streaming iterator over the rotation path for large alphabets.
///
/// Yields each permutation in turn without materializing the whole
/// (2^k-ish) sequence.
pub struct RotationPathIter<T: Clone> {
    cur: Option<Vec<T>>,
    stack: Vec<Frame>,
}

enum Frame {
    Forward(usize, usize),
    Backward(usize, usize),
    Swap(usize),
}

impl<T: Clone> RotationPathIter<T> {
    pub fn new(alpha: &[T]) -> Self {
        Self {
            cur: Some(alpha.to_vec()),
            stack: vec![Frame::Forward(alpha.len(), 0)],
        }
    }
}

impl<T: Clone> Iterator for RotationPathIter<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let cur = self.cur.as_mut()?;
        let emit = cur.clone();
        // advance to the next swap, expanding structure frames
        loop {
            match self.stack.pop() {
                None => {
                    self.cur = None;
                    break;
                }
                Some(Frame::Swap(p)) => {
                    cur.swap(p - 1, p);
                    break;
                }
                Some(Frame::Forward(k, s)) => {
                    if k > 1 {
                        self.stack.push(Frame::Backward(k - 1, s + 1));
                        for p in 1..k {
                            self.stack.push(Frame::Swap(p + s));
                        }
                        self.stack.push(Frame::Forward(k - 1, s));
                    }
                }
                Some(Frame::Backward(k, s)) => {
                    if k > 1 {
                        self.stack.push(Frame::Backward(k - 1, s));
                        for p in (1..k).rev() {
                            self.stack.push(Frame::Swap(p + s));
                        }
                        self.stack.push(Frame::Forward(k - 1, s + 1));
                    }
                }
            }
        }
        Some(emit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn path_n3_matches_expansion() {
        let p = rotation_path(&[1, 2, 3]);
        assert_eq!(
            p,
            vec![
                vec![1, 2, 3],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 2, 1],
                vec![3, 1, 2]
            ]
        );
    }

    #[test]
    fn path_ends_at_rotation() {
        for k in 1..=7 {
            let alpha: Vec<usize> = (1..=k).collect();
            let p = rotation_path(&alpha);
            let mut expect = vec![k];
            expect.extend(1..k);
            assert_eq!(*p.last().unwrap(), expect);
        }
    }

    #[test]
    fn every_prefix_in_one_block() {
        for k in 2..=7 {
            let alpha: Vec<usize> = (0..k).collect();
            let p = rotation_path(&alpha);
            // consecutive steps are adjacent transpositions
            for w in p.windows(2) {
                let a = Permutation(w[0].clone());
                let b = Permutation(w[1].clone());
                assert!(a.adjacent_transposition_away(&b));
            }
            // every proper nonempty subset appears as a prefix in one block
            let mut intervals: std::collections::BTreeMap<u64, Vec<usize>> = Default::default();
            for (i, perm) in p.iter().enumerate() {
                for pre in Permutation(perm.clone()).prefix_sets() {
                    intervals.entry(pre).or_default().push(i);
                }
            }
            let expected: BTreeSet<u64> = (1..(1u64 << k) - 1).collect();
            let got: BTreeSet<u64> = intervals.keys().copied().collect();
            assert_eq!(got, expected);
            for (_, occ) in intervals {
                assert!(occ.windows(2).all(|w| w[1] == w[0] + 1), "block broken");
            }
        }
    }

    #[test]
    fn streaming_matches_materialized() {
        for k in 1..=8 {
            let alpha: Vec<u8> = (0..k as u8).collect();
            let lazy: Vec<Vec<u8>> = RotationPathIter::new(&alpha).collect();
            assert_eq!(lazy, rotation_path(&alpha));
        }
    }
}
