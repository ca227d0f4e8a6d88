//! Von Neumann and Rényi entropies of finite simple graphs, computed from
//! the trace-normalized combinatorial Laplacian, together with exhaustive
//! verification engines over isomorph-free graph catalogs.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | bitset graphs, named families, degree sequences, structural queries |
//! | [`graph6`] | graph6 reader and writer |
//! | [`spectral`] | Jacobi eigensolver and the density-matrix spectrum |
//! | [`entropy`] | entropy formulas, closed forms, degree tests, majorization |
//! | [`canon`] | canonical labeling |
//! | [`enumerate`] | isomorph-free generation of graphs and trees |
//! | [`verify`] | exhaustive claim checks and counterexample searches |

pub mod canon;
pub mod entropy;
pub mod enumerate;
pub mod graph;
pub mod graph6;
mod matching;
pub mod matrix;
pub mod spectral;
pub mod verify;

pub use graph::{DegreeSequence, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6};
