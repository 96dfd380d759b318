//! Lattice vectors, cones, weighted fans and lattice polytopes.

pub mod cone;
pub mod fan;
pub mod polytope;

pub use cone::Cone;
pub use fan::{arrangement_of, split_cells, WeightedFan};
pub use polytope::LatticePolytope;
