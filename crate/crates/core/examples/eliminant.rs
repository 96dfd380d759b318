//! The Newton polytope of a resultant: eliminate `z` from
//! `a z² + b w z + c = d z + e w² = 0` and compare both routes.

use tropeci::arith::ivec;
use tropeci::elimination::{eliminant_polytope, ProjectionSplit};
use tropeci::matroid::Mci;

fn main() -> tropeci::Result<()> {
    let mci = Mci::classical(&[
        vec![ivec(&[2, 0]), ivec(&[1, 1]), ivec(&[0, 0])],
        vec![ivec(&[1, 0]), ivec(&[0, 2])],
    ])?;
    let r = eliminant_polytope(&mci, ProjectionSplit::new(2, 1)?, true)?;
    println!("eliminant Newton polytope: {:?}", r.polytope.vertices().iter().map(|v| v[0].to_string()).collect::<Vec<_>>());
    for c in &r.checks {
        println!("  v = {:>2}: projection {} shadow {}", c.v[0], c.projection, c.shadow);
    }
    println!("routes agree: {:?}", r.agree);
    Ok(())
}
