//! Euler characteristics of curves in the torus, from tropical characteristic
//! classes and from Hirzebruch genera, against Pick's formula.

use tropeci::arith::ivec;
use tropeci::invariants::{euler_from_csm, euler_from_genera, hirzebruch_chi_p, VirtualPolytope};
use tropeci::lattice::LatticePolytope;
use tropeci::matroid::{tci_from_mci, Mci};

fn main() -> tropeci::Result<()> {
    let polygons = [
        vec![[0, 0], [1, 0], [0, 1]],
        vec![[0, 0], [3, 0], [0, 3]],
        vec![[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]],
        vec![[0, 0], [4, 1], [1, 3]],
    ];
    for pts in polygons {
        let pts: Vec<_> = pts.iter().map(|p| ivec(p)).collect();
        let p = LatticePolytope::hull(2, &pts)?;
        let tci = tci_from_mci(&Mci::classical(&[pts])?)?;
        let m = [VirtualPolytope::convex(p.clone())];
        println!(
            "Vol_Z {:>2}  interior points {:>2}  chi_0 {:>3} chi_1 {:>3}  euler: csm {:>3} genera {:>3}",
            p.normalized_volume(),
            p.interior_lattice_points(),
            hirzebruch_chi_p(&m, 2, 0)?,
            hirzebruch_chi_p(&m, 2, 1)?,
            euler_from_csm(&tci)?,
            euler_from_genera(&m, 2)?,
        );
    }
    Ok(())
}
