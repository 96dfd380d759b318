//! Gram matrices of polygon support functions on the plane: one positive
//! eigenvalue, and the Alexandrov–Fenchel inequality.

use tropeci::arith::ivec;
use tropeci::cohomology::{af_check, gram_matrix, gram_signature};
use tropeci::lattice::{LatticePolytope, WeightedFan};
use tropeci::pl::PLFunction;

fn support(pts: &[[i64; 2]]) -> PLFunction {
    let v: Vec<_> = pts.iter().map(|p| ivec(p)).collect();
    PLFunction::support_function(&LatticePolytope::hull(2, &v).unwrap())
}

fn main() -> tropeci::Result<()> {
    let plane = WeightedFan::whole_space(2);
    let gens = [
        support(&[[0, 0], [1, 0], [0, 1]]),
        support(&[[0, 0], [2, 0], [0, 1], [2, 1]]),
        support(&[[0, 0], [3, 1], [1, 2]]),
        support(&[[0, 0], [1, 0]]),
    ];
    for row in gram_matrix(&plane, &gens)? {
        println!("{}", row.iter().map(|x| format!("{:>3}", x.to_string())).collect::<String>());
    }
    println!("signature (+, −, 0): {:?}", gram_signature(&plane, &gens)?);
    let af = af_check(&plane, &gens[0], &gens[2])?;
    println!("(a1 a2)² = {} ≥ a1² a2² = {}: {}", &af.a12 * &af.a12, &af.a11 * &af.a22, af.holds);
    Ok(())
}
