//! Three binomials placed on alternate edges of a lattice hexagon: the first
//! function of the TCI is the hexagon's support function, the second one
//! drops on half of its rays, and the system has 3 solutions instead of the
//! 6 a generic system with that Newton polygon would have.

use tropeci::arith::{ivec, rat, to_rvec};
use tropeci::lattice::LatticePolytope;
use tropeci::matroid::{bkk_number, tci_from_mci, Matroid, Mci, SupportMultiset};

fn main() -> tropeci::Result<()> {
    let pts = [("r0", [0, 0]), ("r1", [1, 0]), ("g0", [2, 1]), ("g1", [2, 2]), ("b0", [1, 2]), ("b1", [0, 1])];
    let support = SupportMultiset::new(pts.iter().map(|(id, a)| (id.to_string(), ivec(a))).collect())?;
    let cols = [[1, 1], [1, 1], [1, 2], [1, 2], [1, 3], [1, 3]];
    let matroid = Matroid::from_vectors(support.ids().to_vec(), cols.iter().map(|c| vec![rat(c[0], 1), rat(c[1], 1)]).collect())?;
    let tci = tci_from_mci(&Mci::new(support.clone(), matroid, 2)?)?;

    println!("ray        m1  m2");
    for (cone, _) in tci.fans[1].cones() {
        let r = &cone.rays()[0];
        let x = to_rvec(r);
        println!("{:<10} {:>3} {:>3}", format!("{:?}", r.iter().map(|c| c.to_string()).collect::<Vec<_>>()), tci.functions[0].value(&x), tci.functions[1].value(&x));
    }
    let hexagon = LatticePolytope::hull(2, support.points())?;
    println!("solutions: {}", bkk_number(&tci)?);
    println!("normalized volume of the hexagon: {}", hexagon.normalized_volume());
    Ok(())
}
