//! Exact tropical and polyhedral computations for engineered complete
//! intersections: matroid complete intersections, corner loci of piecewise
//! linear functions, eliminant polytopes, valuations and genera, tropical
//! intersection numbers, and combinatorial patchworking.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod elimination;
pub mod error;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod matroid;
pub mod patchwork;
pub mod pl;
pub mod verify;

pub use error::{Error, Result};
