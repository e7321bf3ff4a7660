//! Lifting facet-Hamiltonian paths to cycles along a universal vertex.
//!
//! Given a facet-Hamiltonian path P on A(G) between nested chains with
//! start = rot(end) (last element of the end permutation moved to the
//! front), the cycle on A(G + universal v) is
//!
//!   lift(P) . absorb(v) . prepend-v rotation path . expel(v),
//!
//! which sees all old tubes along lift(P), the full vertex set at the
//! junction, and all v-tubes along the prepended rotation path.

use super::engine::{absorb, expel, WalkBuilder};
use super::GrassocError;
use crate::graph::LabeledGraph;
use crate::perm::rotation_path_positions;
use crate::tubing::{permutation_from_nested_tubing, Tubing};
use crate::walks::TubingWalk;

fn rot(perm: &[usize]) -> Vec<usize> {
    let mut out = vec![*perm.last().unwrap()];
    out.extend_from_slice(&perm[..perm.len() - 1]);
    out
}

/// Builds the facet-Hamiltonian cycle on `supergraph` = G plus the
/// universal vertex `v`, from a base facet-Hamiltonian path on A(G).
pub fn universal_vertex_cycle(
    supergraph: &LabeledGraph,
    v: usize,
    base_path: &TubingWalk,
) -> Result<TubingWalk, GrassocError> {
    // v universal in the supergraph
    let rest = supergraph.full_set() & !(1 << v);
    if supergraph.neighbors(v) != rest {
        return Err(GrassocError::NotUniversal(supergraph.label(v).to_string()));
    }
    let g = &base_path.graph;
    if g.n() + 1 != supergraph.n() {
        return Err(GrassocError::BadEndpoints("supergraph must add one vertex".into()));
    }
    let start = permutation_from_nested_tubing(&base_path.tubings[0], g)
        .map_err(|_| GrassocError::BadEndpoints("start tubing is not a chain".into()))?;
    let end = permutation_from_nested_tubing(base_path.tubings.last().unwrap(), g)
        .map_err(|_| GrassocError::BadEndpoints("end tubing is not a chain".into()))?;
    if start.0 != rot(&end.0) {
        return Err(GrassocError::BadEndpoints(format!(
            "start {:?} must be the rotation of end {:?}",
            start.0, end.0
        )));
    }

    // lift P: every tubing gains the tube V(G)
    let vg = g.full_set(); // as a subset of the supergraph's vertices
    let lifted: Result<Vec<Tubing>, GrassocError> = base_path
        .tubings
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut tubes = t.tubes().to_vec();
            tubes.push(vg);
            Tubing::new(supergraph, tubes).map_err(|e| GrassocError::StepFailed(i, e.to_string()))
        })
        .collect();
    let lifted = lifted?;
    let mut b = WalkBuilder::start(supergraph, lifted[0].clone())?;
    b.append(&lifted)?;

    // absorb v through the end chain
    absorb(&mut b, v)?;
    debug_assert_eq!(b.current_perm().unwrap()[0], v);

    // prepended rotation path on the end permutation: walks every subset
    // of V(G) as a prefix behind v
    for p in rotation_path_positions(g.n()) {
        b.flip_prefix(p + 1)?;
    }
    let perm_now = b.current_perm().ok_or(GrassocError::NotNested(b.len() - 1))?;
    debug_assert_eq!(perm_now[0], v);
    debug_assert_eq!(perm_now[1..].to_vec(), rot(&end.0));

    // expel v; the walk lands on the lifted start tubing
    expel(&mut b, v)?;
    debug_assert_eq!(b.current(), &lifted[0]);
    let mut walk = b.finish(true);
    walk.tubings.pop();
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::super::families::{
        clique_rotation_walk, cycle_graph_ii_path, fan_base_path, star_ii_path,
    };
    use super::*;
    use crate::graph::LabeledGraph;
    use crate::permutahedron::perm_fh_cycle;

    fn reversed(mut w: TubingWalk) -> TubingWalk {
        w.tubings.reverse();
        w
    }

    #[test]
    fn clique_base_reproduces_permutahedron_cycle() {
        // K_4 = K_3 + universal vertex; the lifted cycle is the inductive
        // permutahedron cycle up to rotation and reversal
        let n = 4;
        let g = LabeledGraph::complete(n - 1);
        let sup = g.with_universal_vertex(&n.to_string()).unwrap();
        let base = reversed(clique_rotation_walk(n - 1).unwrap());
        let cycle = universal_vertex_cycle(&sup, n - 1, &base).unwrap();
        cycle.validate_flips().unwrap();
        cycle.check_facet_hamiltonian().unwrap();
        assert_eq!(cycle.tubings.len(), (1 << n) - 2);

        // compare against perm_fh_cycle(n) as cyclic sequences up to
        // rotation and reversal
        let reference: Vec<Tubing> = perm_fh_cycle(n)
            .perms
            .iter()
            .map(|p| {
                let zero: Vec<usize> = p.iter().map(|&x| x - 1).collect();
                crate::tubing::nested_tubing_from_permutation(
                    &crate::perm::Permutation(zero),
                    &sup,
                )
                .unwrap()
            })
            .collect();
        let got = &cycle.tubings;
        let m = got.len();
        assert_eq!(reference.len(), m);
        let matches = |dir: bool| {
            (0..m).any(|shift| {
                (0..m).all(|i| {
                    let r = &reference[i];
                    let g = if dir {
                        &got[(i + shift) % m]
                    } else {
                        &got[(m + shift - i) % m]
                    };
                    r == g
                })
            })
        };
        assert!(matches(true) || matches(false), "same cycle up to rotation/reversal");
    }

    #[test]
    fn wheel_cycle_verifies() {
        // W_5 = C_4 plus apex
        let g = LabeledGraph::cycle(4);
        let sup = g.with_universal_vertex("5").unwrap();
        let base = cycle_graph_ii_path(4).unwrap();
        let cycle = universal_vertex_cycle(&sup, 4, &base).unwrap();
        cycle.validate_flips().unwrap();
        cycle.check_facet_hamiltonian().unwrap();
    }

    #[test]
    fn complete_split_cycle_verifies() {
        // S_4 plus apex
        let g = LabeledGraph::star(4);
        let sup = g.with_universal_vertex("5").unwrap();
        let base = reversed(star_ii_path(4).unwrap());
        let cycle = universal_vertex_cycle(&sup, 4, &base).unwrap();
        cycle.validate_flips().unwrap();
        cycle.check_facet_hamiltonian().unwrap();
    }

    #[test]
    fn fan_cycle_verifies() {
        // fan = P_4 plus apex
        let g = LabeledGraph::path(4);
        let sup = g.with_universal_vertex("5").unwrap();
        let base = fan_base_path(4).unwrap();
        let cycle = universal_vertex_cycle(&sup, 4, &base).unwrap();
        cycle.validate_flips().unwrap();
        cycle.check_facet_hamiltonian().unwrap();
    }

    #[test]
    fn wrong_endpoints_rejected() {
        let g = LabeledGraph::cycle(4);
        let sup = g.with_universal_vertex("5").unwrap();
        let mut base = cycle_graph_ii_path(4).unwrap();
        base.tubings.reverse(); // endpoints now violate start = rot(end)
        assert!(matches!(
            universal_vertex_cycle(&sup, 4, &base),
            Err(GrassocError::BadEndpoints(_))
        ));
    }
}
