//! Lattice point counts and normalized volumes of virtual polytopes.

use tropeci::arith::{ivec, rat};
use tropeci::invariants::{count_valuation, val_decompose, volume_valuation, VirtualPolytope};
use tropeci::lattice::LatticePolytope;

fn main() -> tropeci::Result<()> {
    let seg = LatticePolytope::hull(1, &[ivec(&[0]), ivec(&[1])])?;
    let s = VirtualPolytope::convex(seg);
    for t in 0..4 {
        println!("#({}·[0,1]) = {}", t, count_valuation(&s.dilate(t))?);
    }
    println!("#(−[0,1]) = {}, Vol_Z(−[0,1]) = {}", count_valuation(&s.neg())?, volume_valuation(&s.neg())?);

    let square = LatticePolytope::hull(2, &[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2]), ivec(&[2, 2])])?;
    let triangle = LatticePolytope::hull(2, &[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1])])?;
    let diff = VirtualPolytope::new(square, triangle)?;
    let ind = val_decompose(&diff)?;
    println!("square − triangle: # = {}, Vol_Z = {}", ind.count(), ind.volume());
    println!("indicator at (1,1): {}", ind.eval(&[rat(1, 1), rat(1, 1)]));
    Ok(())
}
