//! Bipartite belts, friezes, and facet-Hamiltonian extraction.
//!
//! From a bipartite seed S_0, the belt is S_1 = mu_-(S_0),
//! S_2 = mu_+ mu_-(S_0), ... where mu_- (mu_+) composes the mutations at
//! all indices of negative (positive) sign. In finite type the belt is
//! periodic with S_m = S_{m+2(h+2)} and contains every cluster variable.

use super::poly::LaurentPoly;
use super::{MatrixError, Seed, SeedError};
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BeltError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error("belt not periodic within {0} steps (incomplete)")]
    Incomplete(usize),
    #[error("frieze evaluation failed: {0}")]
    Eval(super::PolyError),
}

/// A computed stretch of the bipartite belt: seeds S_0..S_steps together
/// with the sign function and, per step, which indices changed.
#[derive(Debug, Clone)]
pub struct Belt {
    pub eps: Vec<i8>,
    pub seeds: Vec<Seed>,
    pub changed: Vec<Vec<usize>>, // per step t: indices mutated S_{t} -> S_{t+1}
}

fn class(eps: &[i8], sign: i8) -> Vec<usize> {
    eps.iter()
        .enumerate()
        .filter(|(_, &e)| e == sign)
        .map(|(i, _)| i)
        .collect()
}

/// Applies one composite mutation (all indices of one class, ascending).
fn composite(seed: &Seed, indices: &[usize]) -> Result<Seed, SeedError> {
    let mut s = seed.clone();
    for &i in indices {
        s = s.mutate(i + 1)?;
    }
    Ok(s)
}

/// Computes S_0..S_steps, starting with mu_-.
pub fn bipartite_belt(seed: &Seed, steps: usize) -> Result<Belt, BeltError> {
    let eps = seed.matrix.bipartite_signs()?;
    let mut seeds = vec![seed.clone()];
    let mut changed = Vec::new();
    for t in 0..steps {
        let sign = if t % 2 == 0 { -1 } else { 1 };
        let cls = class(&eps, sign);
        let next = composite(seeds.last().unwrap(), &cls)?;
        seeds.push(next);
        changed.push(cls);
    }
    Ok(Belt { eps, seeds, changed })
}

/// One backward step S_{-1} = mu_+(S_0), used by the frieze layout.
pub fn backward_step(seed: &Seed) -> Result<Seed, BeltError> {
    let eps = seed.matrix.bipartite_signs()?;
    Ok(composite(seed, &class(&eps, 1))?)
}

/// The minimal even p with S_p = S_0, searched up to `bound` steps.
pub fn minimal_period(seed: &Seed, bound: usize) -> Result<(usize, Belt), BeltError> {
    let eps = seed.matrix.bipartite_signs()?;
    let mut seeds = vec![seed.clone()];
    let mut changed = Vec::new();
    for t in 0..bound {
        let sign = if t % 2 == 0 { -1 } else { 1 };
        let cls = class(&eps, sign);
        let next = composite(seeds.last().unwrap(), &cls)?;
        seeds.push(next);
        changed.push(cls);
        let p = t + 1;
        if p % 2 == 0 && seeds[p] == seeds[0] {
            return Ok((p, Belt { eps, seeds, changed }));
        }
    }
    Err(BeltError::Incomplete(bound))
}

/// Distinct cluster variables over one full period of the belt.
pub fn distinct_cluster_variables(belt: &Belt, period: usize) -> Vec<LaurentPoly> {
    let mut all: Vec<LaurentPoly> = belt.seeds[..period]
        .iter()
        .flat_map(|s| s.variables.iter().cloned())
        .collect();
    all.sort();
    all.dedup();
    all
}

/// Checks the diamond relation
/// x_{m-1,j} x_{m+1,j} = 1 + prod_{i: eps(i) = -eps(j)} x_{m,i}^{|b_ij|}
/// for every m in 1..len-1 and every j with eps(j) = (-1)^{m-1}.
pub fn check_diamond_relations(belt: &Belt) -> bool {
    let b0 = &belt.seeds[0].matrix;
    let nv = belt.seeds[0].variables[0].nvars();
    for m in 1..belt.seeds.len() - 1 {
        // the relation applies to the rows j with eps(j) = (-1)^{m-1}
        let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
        for j in 0..belt.eps.len() {
            if belt.eps[j] != sign {
                continue;
            }
            let lhs = belt.seeds[m - 1].variables[j].mul(&belt.seeds[m + 1].variables[j]);
            let mut rhs = LaurentPoly::one(nv);
            for i in 0..belt.eps.len() {
                if belt.eps[i] == -belt.eps[j] {
                    let e = b0.at(i, j).unsigned_abs() as u32;
                    if e > 0 {
                        rhs = rhs.mul(&belt.seeds[m].variables[i].pow(e));
                    }
                }
            }
            rhs = rhs.add(&LaurentPoly::one(nv));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Frieze layout: rows are variable indices; row j holds the values
/// x_{m,j} at the columns m (from -1 through `cols`) where
/// eps(j) = (-1)^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeTable {
    /// per row j: the (column m, value) pairs, m starting at -1
    pub rows: Vec<Vec<(i64, BigRational)>>,
}

impl FriezeTable {
    pub fn row_values(&self, j: usize) -> Vec<BigRational> {
        self.rows[j].iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (j, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|(m, v)| format!("m={m}:{v}"))
                .collect();
            out.push_str(&format!("x{}: {}\n", j + 1, cells.join("  ")));
        }
        out
    }
}

/// Evaluates the belt variables at an assignment (all-ones by default)
/// over columns m = -1 ..= cols.
pub fn evaluate_frieze(
    seed: &Seed,
    assignment: &[BigRational],
    cols: usize,
) -> Result<FriezeTable, BeltError> {
    let n = seed.matrix.n();
    let belt = bipartite_belt(seed, cols)?;
    let back = backward_step(seed)?;
    let mut rows = vec![Vec::new(); n];
    for j in 0..n {
        for m in -1i64..=(cols as i64) {
            let sign_m: i8 = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            if belt.eps[j] != sign_m {
                continue;
            }
            let var = if m < 0 { &back.variables[j] } else { &belt.seeds[m as usize].variables[j] };
            let v = var.eval(assignment).map_err(BeltError::Eval)?;
            rows[j].push((m, v));
        }
    }
    Ok(FriezeTable { rows })
}

pub fn ones(n: usize) -> Vec<BigRational> {
    vec![BigRational::one(); n]
}

/// The facet-Hamiltonian cycle extracted from the belt: single mutations
/// realizing mu_-, mu_+, ... alternately (ascending index inside each
/// class), recorded as the sequence of clusters (variable sets). The walk
/// closes when the cluster set returns to the initial cluster.
#[derive(Debug, Clone)]
pub struct ClusterWalk {
    /// clusters as canonical sorted variable vectors
    pub clusters: Vec<Vec<LaurentPoly>>,
    /// the variable introduced at each step (same length, cyclic)
    pub introduced: Vec<LaurentPoly>,
}

pub fn extract_fh_cycle(seed: &Seed, max_steps: usize) -> Result<ClusterWalk, BeltError> {
    let eps = seed.matrix.bipartite_signs()?;
    let start_set = seed.cluster_set();
    let mut clusters = vec![start_set.clone()];
    let mut introduced = Vec::new();
    let mut cur = seed.clone();
    let mut t = 0;
    loop {
        let sign = if t % 2 == 0 { -1 } else { 1 };
        for i in class(&eps, sign) {
            cur = cur.mutate(i + 1).map_err(BeltError::Seed)?;
            introduced.push(cur.variables[i].clone());
            let set = cur.cluster_set();
            if set == start_set {
                // closed: drop the repeated start
                return Ok(ClusterWalk { clusters, introduced });
            }
            clusters.push(set);
            if clusters.len() > max_steps {
                return Err(BeltError::Incomplete(max_steps));
            }
        }
        t += 1;
    }
}

/// Builds the full cluster-complex skeleton by breadth-first mutation,
/// for verifying extracted walks. Facets are cluster variables; vertices
/// are clusters.
pub fn cluster_complex_skeleton(
    seed: &Seed,
    limit: usize,
) -> Result<(crate::skeleton::FacetedSkeleton, Vec<Vec<LaurentPoly>>), BeltError> {
    let n = seed.matrix.n();
    let mut ids: BTreeMap<Vec<LaurentPoly>, usize> = BTreeMap::new();
    let mut reps: Vec<Seed> = Vec::new();
    let mut edges = Vec::new();
    ids.insert(seed.cluster_set(), 0);
    reps.push(seed.clone());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let s = reps[i].clone();
        for k in 1..=n {
            let next = s.mutate(k).map_err(BeltError::Seed)?;
            let set = next.cluster_set();
            let j = match ids.get(&set) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    if j > limit {
                        return Err(BeltError::Incomplete(limit));
                    }
                    ids.insert(set, j);
                    reps.push(next);
                    queue.push(j);
                    j
                }
            };
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let clusters: Vec<Vec<LaurentPoly>> = {
        let mut v = vec![Vec::new(); reps.len()];
        for (set, &i) in &ids {
            v[i] = set.clone();
        }
        v
    };
    // facets: one per distinct variable
    let mut var_ids: BTreeMap<&LaurentPoly, Vec<usize>> = BTreeMap::new();
    for (i, c) in clusters.iter().enumerate() {
        for v in c {
            var_ids.entry(v).or_default().push(i);
        }
    }
    let facets: BTreeMap<String, Vec<usize>> = var_ids
        .into_iter()
        .enumerate()
        .map(|(k, (_, vs))| (format!("var{k:03}"), vs))
        .collect();
    let sk = crate::skeleton::FacetedSkeleton::new(clusters.len(), &edges, facets, None)
        .expect("cluster complex is a valid skeleton");
    Ok((sk, clusters))
}

#[cfg(test)]
mod tests {
    use super::super::dynkin::{dynkin_seed, DynkinSpec, DynkinType};
    use super::*;
    use num_traits::FromPrimitive;

    fn spec(f: DynkinType, r: usize) -> Seed {
        dynkin_seed(DynkinSpec::new(f, r).unwrap())
    }

    #[test]
    fn a2_belt_periodicity_and_pentagon() {
        let s = spec(DynkinType::A, 2);
        let (p, belt) = minimal_period(&s, 64).unwrap();
        assert_eq!(p, 10, "A2 minimal period");
        let h = 3;
        assert_eq!(2 * (h + 2) % p, 0);
        let vars = distinct_cluster_variables(&belt, p);
        assert_eq!(vars.len(), 5, "pentagon");
    }

    #[test]
    fn a4_belt_matches_published_table() {
        let s = spec(DynkinType::A, 4);
        let belt = bipartite_belt(&s, 7).unwrap();
        let x = |i: usize| LaurentPoly::var(4, i);
        let one = LaurentPoly::one(4);
        // m=1: (1+x2)/x1 at row 1, (x2 x4 + 1)/x3 at row 3
        let m1r1 = one.add(&x(1)).div_exact(&x(0)).unwrap();
        assert_eq!(belt.seeds[1].variables[0], m1r1);
        let m1r3 = x(1).mul(&x(3)).add(&one).div_exact(&x(2)).unwrap();
        assert_eq!(belt.seeds[1].variables[2], m1r3);
        // m=2 row 2: (x2^2 x4 + x1 x3 + x2 x4 + x2 + 1) / (x1 x2 x3)
        let num = x(1)
            .pow(2)
            .mul(&x(3))
            .add(&x(0).mul(&x(2)))
            .add(&x(1).mul(&x(3)))
            .add(&x(1))
            .add(&one);
        let m2r2 = num.div_exact(&x(0).mul(&x(1)).mul(&x(2))).unwrap();
        assert_eq!(belt.seeds[2].variables[1], m2r2);
        // m=2 row 4: (x2 x4 + x3 + 1)/(x3 x4)
        let m2r4 = x(1)
            .mul(&x(3))
            .add(&x(2))
            .add(&one)
            .div_exact(&x(2).mul(&x(3)))
            .unwrap();
        assert_eq!(belt.seeds[2].variables[3], m2r4);
        // m=3 row 1: (x1 x3 + x2 x4 + 1)/(x2 x3)
        let m3r1 = x(0)
            .mul(&x(2))
            .add(&x(1).mul(&x(3)))
            .add(&one)
            .div_exact(&x(1).mul(&x(2)))
            .unwrap();
        assert_eq!(belt.seeds[3].variables[0], m3r1);
        // m=3 row 3: the 8-term numerator over x1 x2 x3 x4
        let num = x(0)
            .mul(&x(2).pow(2))
            .add(&x(1).pow(2).mul(&x(3)))
            .add(&x(0).mul(&x(2)))
            .add(&x(1).mul(&x(2)))
            .add(&x(1).mul(&x(3)))
            .add(&x(1))
            .add(&x(2))
            .add(&one);
        let m3r3 = num.div_exact(&x(0).mul(&x(1)).mul(&x(2)).mul(&x(3))).unwrap();
        assert_eq!(belt.seeds[3].variables[2], m3r3);
        // m=4 row 2: (x1 x3^2 + x1 x3 + x2 x4 + x3 + 1)/(x2 x3 x4)
        let num = x(0)
            .mul(&x(2).pow(2))
            .add(&x(0).mul(&x(2)))
            .add(&x(1).mul(&x(3)))
            .add(&x(2))
            .add(&one);
        let m4r2 = num.div_exact(&x(1).mul(&x(2)).mul(&x(3))).unwrap();
        assert_eq!(belt.seeds[4].variables[1], m4r2);
        // m=4 row 4: (x1 x3 + x2 + 1)/(x1 x2)
        let m4r4 = x(0)
            .mul(&x(2))
            .add(&x(1))
            .add(&one)
            .div_exact(&x(0).mul(&x(1)))
            .unwrap();
        assert_eq!(belt.seeds[4].variables[3], m4r4);
        // m=5: (x3+1)/x4 and (x1 x3 + 1)/x2
        let m5r1 = x(2).add(&one).div_exact(&x(3)).unwrap();
        assert_eq!(belt.seeds[5].variables[0], m5r1);
        let m5r3 = x(0).mul(&x(2)).add(&one).div_exact(&x(1)).unwrap();
        assert_eq!(belt.seeds[5].variables[2], m5r3);
        // m=6/7: the initial variables come back permuted
        assert_eq!(belt.seeds[6].variables[1], x(2));
        assert_eq!(belt.seeds[6].variables[3], x(0));
        assert_eq!(belt.seeds[7].variables[0], x(3));
        assert_eq!(belt.seeds[7].variables[2], x(1));
    }

    #[test]
    fn a4_diamond_relations_hold() {
        let s = spec(DynkinType::A, 4);
        let belt = bipartite_belt(&s, 7).unwrap();
        assert!(check_diamond_relations(&belt));
    }

    #[test]
    fn a4_frieze_all_ones_matches_published_rows() {
        let s = spec(DynkinType::A, 4);
        let f = evaluate_frieze(&s, &ones(4), 7).unwrap();
        let want: Vec<Vec<i64>> = vec![
            vec![1, 2, 3, 2, 1],
            vec![1, 5, 5, 1],
            vec![1, 2, 8, 2, 1],
            vec![1, 3, 3, 1],
        ];
        for (j, row) in want.iter().enumerate() {
            let got: Vec<BigRational> = f.row_values(j);
            let expect: Vec<BigRational> =
                row.iter().map(|&v| BigRational::from_i64(v).unwrap()).collect();
            assert_eq!(got, expect, "frieze row {}", j + 1);
        }
    }

    #[test]
    fn periods_divide_2_h_plus_2() {
        let cases = vec![
            (DynkinType::A, 2),
            (DynkinType::A, 3),
            (DynkinType::A, 4),
            (DynkinType::B, 2),
            (DynkinType::B, 3),
            (DynkinType::C, 3),
            (DynkinType::D, 4),
            (DynkinType::G2, 2),
        ];
        for (f, r) in cases {
            let sp = DynkinSpec::new(f, r).unwrap();
            let h = sp.coxeter_number();
            let (p, _) = minimal_period(&dynkin_seed(sp), 2 * (h + 2) + 2).unwrap();
            assert_eq!(2 * (h + 2) % p, 0, "{f:?}{r}: p={p} divides 2(h+2)");
        }
    }

    #[test]
    fn distinct_variable_counts_small_types() {
        let cases = vec![
            (DynkinType::A, 3, 9),
            (DynkinType::A, 4, 14),
            (DynkinType::B, 3, 12),
            (DynkinType::C, 3, 12),
            (DynkinType::D, 4, 16),
            (DynkinType::G2, 2, 8),
        ];
        for (f, r, want) in cases {
            let sp = DynkinSpec::new(f, r).unwrap();
            let h = sp.coxeter_number();
            let (p, belt) = minimal_period(&dynkin_seed(sp), 2 * (h + 2) + 2).unwrap();
            assert_eq!(distinct_cluster_variables(&belt, p).len(), want, "{f:?}{r}");
        }
    }

    #[test]
    fn extraction_lengths() {
        for (f, r) in [
            (DynkinType::A, 2),
            (DynkinType::A, 4),
            (DynkinType::B, 3),
            (DynkinType::D, 4),
            (DynkinType::G2, 2),
        ] {
            let sp = DynkinSpec::new(f, r).unwrap();
            let w = extract_fh_cycle(&dynkin_seed(sp), 10_000).unwrap();
            assert_eq!(w.clusters.len(), sp.num_cluster_variables(), "{f:?}{r}");
            // each introduced variable in exactly one contiguous block
            let steps: Vec<Vec<LaurentPoly>> = w.clusters.clone();
            let distinct = crate::walks::check_interval_cover(&steps, true).unwrap();
            assert_eq!(distinct, sp.num_cluster_variables());
        }
    }

    #[test]
    fn a2_extraction_is_pentagon() {
        let w = extract_fh_cycle(&spec(DynkinType::A, 2), 100).unwrap();
        assert_eq!(w.clusters.len(), 5);
    }

    #[test]
    fn extraction_verifies_on_cluster_complex() {
        use crate::search::SearchMode;
        let _ = SearchMode::Cycle;
        for (f, r) in [(DynkinType::A, 3), (DynkinType::B, 2), (DynkinType::D, 4)] {
            let sp = DynkinSpec::new(f, r).unwrap();
            let seed = dynkin_seed(sp);
            let (sk, clusters) = cluster_complex_skeleton(&seed, 10_000).unwrap();
            let w = extract_fh_cycle(&seed, 10_000).unwrap();
            let walk = crate::skeleton::Walk::cycle(
                w.clusters
                    .iter()
                    .map(|c| clusters.iter().position(|x| x == c).unwrap())
                    .collect(),
            );
            let rep = crate::verify::verify_walk(&sk, &walk);
            assert!(rep.is_facet_hamiltonian, "{f:?}{r}");
        }
    }
}
