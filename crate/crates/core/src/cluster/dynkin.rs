//! Finite-type Dynkin data: Cartan matrices, bipartite seeds, Coxeter
//! numbers.

use super::{ExchangeMatrix, MatrixError, Seed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl DynkinType {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Self::A),
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            "D" => Some(Self::D),
            "E6" => Some(Self::E6),
            "E7" => Some(Self::E7),
            "E8" => Some(Self::E8),
            "F4" => Some(Self::F4),
            "G2" => Some(Self::G2),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinSpec {
    pub family: DynkinType,
    pub rank: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DynkinError {
    #[error("invalid rank {0} for this family")]
    BadRank(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl DynkinSpec {
    pub fn new(family: DynkinType, rank: usize) -> Result<Self, DynkinError> {
        let ok = match family {
            DynkinType::A => rank >= 1,
            DynkinType::B | DynkinType::C => rank >= 2,
            DynkinType::D => rank >= 3,
            DynkinType::E6 => rank == 6,
            DynkinType::E7 => rank == 7,
            DynkinType::E8 => rank == 8,
            DynkinType::F4 => rank == 4,
            DynkinType::G2 => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(DynkinError::BadRank(rank))
        }
    }

    /// Cartan matrix (a_ii = 2, off-diagonal entries nonpositive).
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |i: usize, j: usize, aij: i64, aji: i64, a: &mut Vec<Vec<i64>>| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            DynkinType::A => {
                for i in 0..n - 1 {
                    edge(i, i + 1, -1, -1, &mut a);
                }
            }
            DynkinType::B => {
                for i in 0..n - 1 {
                    edge(i, i + 1, -1, -1, &mut a);
                }
                a[n - 2][n - 1] = -2;
            }
            DynkinType::C => {
                for i in 0..n - 1 {
                    edge(i, i + 1, -1, -1, &mut a);
                }
                a[n - 1][n - 2] = -2;
            }
            DynkinType::D => {
                for i in 0..n - 2 {
                    edge(i, i + 1, -1, -1, &mut a);
                }
                edge(n - 3, n - 1, -1, -1, &mut a);
            }
            DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
                // Bourbaki: chain 1-3-4-5-..-n with 2 attached to 4
                edge(0, 2, -1, -1, &mut a);
                for i in 2..n - 1 {
                    edge(i, i + 1, -1, -1, &mut a);
                }
                edge(1, 3, -1, -1, &mut a);
            }
            DynkinType::F4 => {
                edge(0, 1, -1, -1, &mut a);
                edge(1, 2, -2, -1, &mut a);
                edge(2, 3, -1, -1, &mut a);
            }
            DynkinType::G2 => {
                edge(0, 1, -1, -3, &mut a);
            }
        }
        a
    }

    /// Sign function of the alternating (bipartite) orientation, obtained
    /// by 2-coloring the Dynkin diagram with eps(node 1) = -1.
    pub fn bipartite_eps(&self) -> Vec<i8> {
        let a = self.cartan();
        let n = self.rank;
        let mut eps = vec![0i8; n];
        eps[0] = -1;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 && eps[j] == 0 {
                    eps[j] = -eps[i];
                    stack.push(j);
                }
            }
        }
        debug_assert!(eps.iter().all(|&e| e != 0), "Dynkin diagrams are connected");
        eps
    }

    pub fn coxeter_number(&self) -> usize {
        coxeter_number(self.family, self.rank)
    }

    /// Number of cluster variables = facets of the generalized
    /// associahedron: n (h + 2) / 2.
    pub fn num_cluster_variables(&self) -> usize {
        self.rank * (self.coxeter_number() + 2) / 2
    }
}

pub fn coxeter_number(family: DynkinType, rank: usize) -> usize {
    match family {
        DynkinType::A => rank + 1,
        DynkinType::B | DynkinType::C => 2 * rank,
        DynkinType::D => 2 * rank - 2,
        DynkinType::E6 => 12,
        DynkinType::E7 => 18,
        DynkinType::E8 => 30,
        DynkinType::F4 => 12,
        DynkinType::G2 => 6,
    }
}

/// The bipartite initial seed of a finite type: b_ij = -eps(i) a_ij.
pub fn dynkin_seed(spec: DynkinSpec) -> Seed {
    let a = spec.cartan();
    let eps = spec.bipartite_eps();
    let n = spec.rank;
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b[i][j] = -(eps[i] as i64) * a[i][j];
            }
        }
    }
    let matrix = ExchangeMatrix::new(b).expect("Dynkin seeds are skew-symmetrizable");
    debug_assert!(matrix.bipartite_signs().is_ok());
    Seed::initial(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a4_bipartite_matrix_matches_reference() {
        let s = dynkin_seed(DynkinSpec::new(DynkinType::A, 4).unwrap());
        assert_eq!(
            s.matrix.0,
            vec![
                vec![0, -1, 0, 0],
                vec![1, 0, 1, 0],
                vec![0, -1, 0, -1],
                vec![0, 0, 1, 0],
            ]
        );
    }

    #[test]
    fn b2_and_g2_products() {
        let b2 = dynkin_seed(DynkinSpec::new(DynkinType::B, 2).unwrap());
        assert_eq!((b2.matrix.at(0, 1) * b2.matrix.at(1, 0)).abs(), 2);
        let g2 = dynkin_seed(DynkinSpec::new(DynkinType::G2, 2).unwrap());
        assert_eq!((g2.matrix.at(0, 1) * g2.matrix.at(1, 0)).abs(), 3);
    }

    #[test]
    fn all_types_produce_bipartite_skew_symmetrizable_seeds() {
        let specs = vec![
            (DynkinType::A, 1),
            (DynkinType::A, 6),
            (DynkinType::B, 5),
            (DynkinType::C, 5),
            (DynkinType::D, 6),
            (DynkinType::E6, 6),
            (DynkinType::E7, 7),
            (DynkinType::E8, 8),
            (DynkinType::F4, 4),
            (DynkinType::G2, 2),
        ];
        for (f, r) in specs {
            let s = dynkin_seed(DynkinSpec::new(f, r).unwrap());
            assert!(s.matrix.is_skew_symmetrizable(), "{f:?}{r}");
            let eps = s.matrix.bipartite_signs().unwrap();
            for i in 0..r {
                for j in 0..r {
                    if s.matrix.at(i, j) > 0 {
                        assert_eq!((eps[i], eps[j]), (1, -1));
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(DynkinSpec::new(DynkinType::E6, 7).is_err());
        assert!(DynkinSpec::new(DynkinType::D, 2).is_err());
        assert!(DynkinSpec::new(DynkinType::G2, 3).is_err());
    }

    #[test]
    fn variable_counts() {
        let cases = vec![
            (DynkinType::A, 4, 14),
            (DynkinType::B, 3, 12),
            (DynkinType::D, 4, 16),
            (DynkinType::D, 5, 25),
            (DynkinType::E6, 6, 42),
            (DynkinType::F4, 4, 28),
            (DynkinType::G2, 2, 8),
        ];
        for (f, r, want) in cases {
            assert_eq!(DynkinSpec::new(f, r).unwrap().num_cluster_variables(), want);
        }
    }
}
