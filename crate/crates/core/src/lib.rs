//! Facet-Hamiltonian cycles and paths on combinatorial polytopes.
//!
//! A walk in a polytope skeleton is *facet-Hamiltonian* if it meets every
//! facet in exactly one nonempty contiguous interval. This crate provides:
//!
//! - graphs, tubes, tubings and flips (graph associahedra),
//! - abstract facet-labeled skeletons with a verifier and an exhaustive
//!   search, plus the cycle-to-path conversion for simple 3-polytopes,
//! - the inductive permutahedron cycles,
//! - triangulation models for type A, B/C and D associahedra,
//! - an exact cluster-algebra engine (mutation, bipartite belts, friezes)
//!   with facet-Hamiltonian extraction for all finite Dynkin types,
//! - constructions on graph associahedra (absorption, universal vertices,
//!   caterpillars, complete-bipartite shaving),
//! - rhombic strips, per-rank Gray codes and Venn curve tracing,
//! - the Tree-Residue Vertex-Breaking hardness reduction.

pub mod cluster;
pub mod fixtures;
pub mod graph;
pub mod grassoc;
pub mod perm;
pub mod permutahedron;
pub mod skeleton;
pub mod search;
pub mod strip;
pub mod triangulation;
pub mod trvb;
pub mod tubing;
pub mod type_d;
pub mod verify;
pub mod walks;

pub use graph::LabeledGraph;
pub use perm::Permutation;
pub use skeleton::{FacetedSkeleton, Walk};
pub use tubing::{Tube, Tubing};
pub use verify::{verify_walk, VerificationReport};
