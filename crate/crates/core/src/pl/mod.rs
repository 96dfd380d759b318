//! Piecewise linear and piecewise polynomial functions on fans and their
//! corner loci.

pub mod corner;
pub mod function;
pub mod poly;
pub mod pp;
pub mod reconstruct;

pub use corner::{corner_locus, iterated_corner_locus};
pub use function::{PLFunction, RankFn};
pub use poly::Poly;
pub use pp::{pp_corner_locus, pp_degree, PPFunction, PolyFan};
pub use reconstruct::reconstruct_polytope;

use crate::lattice::LatticePolytope;

/// Support function of a lattice polytope.
pub fn pl_from_polytope(p: &LatticePolytope) -> PLFunction {
    PLFunction::support_function(p)
}
