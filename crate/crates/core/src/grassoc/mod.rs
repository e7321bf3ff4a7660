//! Facet-Hamiltonian constructions on graph associahedra: absorption and
//! expulsion, universal-vertex lifting, the base families (paths, cycles,
//! stars and their apex graphs), caterpillars, and complete-bipartite
//! shaving.

pub mod bipartite;
pub mod caterpillar;
pub mod engine;
pub mod families;
pub mod universal;

pub use bipartite::complete_bipartite_fh_path;
pub use caterpillar::caterpillar_fh_path;
pub use engine::{absorb, expel, lift_path_with_apex, WalkBuilder};
pub use families::{cycle_graph_cycle, cycle_graph_ii_path, fan_base_path, path_graph_cycle,
                   star_fh_path, star_ii_path};
pub use universal::universal_vertex_cycle;

use crate::graph::LabeledGraph;
use crate::tubing::TubingError;
use crate::walks::TubingWalk;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassocError {
    #[error("walk step {0}: {1}")]
    StepFailed(usize, String),
    #[error("tubing at step {0} is not nested")]
    NotNested(usize),
    #[error("kernel not adjacent to the absorbed vertex")]
    KernelNotAdjacent,
    #[error("base path endpoints wrong: {0}")]
    BadEndpoints(String),
    #[error("vertex {0} is not universal")]
    NotUniversal(String),
    #[error("input is not a caterpillar")]
    NotACaterpillar,
    #[error(transparent)]
    Tubing(#[from] TubingError),
}

/// Traces the kernels of a closed all-nested facet-Hamiltonian walk;
/// the deduplicated trace is a Hamiltonian cycle of the underlying graph.
pub fn nested_cycle_hamiltonicity_check(walk: &TubingWalk) -> Result<Vec<usize>, GrassocError> {
    assert!(walk.closed, "kernel tracing needs a closed walk");
    let mut kernels = Vec::new();
    for (i, t) in walk.tubings.iter().enumerate() {
        if !t.is_nested() {
            return Err(GrassocError::NotNested(i));
        }
        let k = t.kernel().ok_or(GrassocError::NotNested(i))?;
        if kernels.last() != Some(&k) {
            kernels.push(k);
        }
    }
    if kernels.len() > 1 && kernels.first() == kernels.last() {
        kernels.pop();
    }
    // the trace must be a Hamiltonian cycle of the graph
    let g: &LabeledGraph = &walk.graph;
    let n = g.n();
    let mut seen = vec![false; n];
    for w in 0..kernels.len() {
        let (a, b) = (kernels[w], kernels[(w + 1) % kernels.len()]);
        if !g.has_edge(a, b) {
            return Err(GrassocError::StepFailed(
                w,
                format!("kernel trace uses non-edge {a}-{b}"),
            ));
        }
        if seen[a] {
            return Err(GrassocError::StepFailed(w, format!("kernel {a} repeats")));
        }
        seen[a] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(GrassocError::StepFailed(0, "kernel trace misses a vertex".into()));
    }
    Ok(kernels)
}
