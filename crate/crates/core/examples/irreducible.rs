//! Irreducibility certificates for curves whose Newton polygon contains the
//! origin.

use tropeci::arith::ivec;
use tropeci::cohomology::{irreducibility_certificate, Level};
use tropeci::lattice::LatticePolytope;
use tropeci::matroid::{tci_from_mci, Mci};

fn main() -> tropeci::Result<()> {
    let shapes: [&[[i64; 2]]; 3] = [
        &[[0, 0], [1, 0], [0, 1]],
        &[[-1, 0], [1, 0], [0, 2], [0, -1]],
        &[[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]],
    ];
    for pts in shapes {
        let v: Vec<_> = pts.iter().map(|p| ivec(p)).collect();
        let p = LatticePolytope::hull(2, &v)?;
        let tci = tci_from_mci(&Mci::classical(&[p.vertices().to_vec()])?)?;
        for level in [Level::I, Level::Ii] {
            let r = irreducibility_certificate(&tci, level, None)?;
            println!("{:?} level {:?}: {:?} ({})", pts, level, r.verdict, r.detail);
        }
    }
    Ok(())
}
