//! Root counts of classical systems against mixed volumes computed by
//! inclusion–exclusion over Minkowski sums.

use tropeci::arith::{factorial, ivec, IVec, Int};
use tropeci::lattice::LatticePolytope;
use tropeci::matroid::{bkk_number, tci_from_mci, Mci};

fn mixed_volume(ps: &[LatticePolytope]) -> Int {
    let n = ps.len();
    let mut total = Int::from(0);
    for mask in 1u32..(1 << n) {
        let mut sum = LatticePolytope::origin(n);
        for (i, p) in ps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = sum.minkowski_sum(p).unwrap();
            }
        }
        let sign = if (n as u32 - mask.count_ones()) % 2 == 0 { 1 } else { -1 };
        total += Int::from(sign) * sum.normalized_volume();
    }
    total / factorial(n)
}

fn main() -> tropeci::Result<()> {
    let systems: Vec<Vec<Vec<IVec>>> = vec![
        // two bilinear equations
        vec![vec![ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])]; 2],
        // a conic and a cubic
        vec![
            vec![ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])],
            vec![ivec(&[0, 0]), ivec(&[3, 0]), ivec(&[0, 3])],
        ],
        // three generic planes meeting a twisted cubic pattern in 3-space
        vec![
            vec![ivec(&[0, 0, 0]), ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1])],
            vec![ivec(&[0, 0, 0]), ivec(&[2, 0, 0]), ivec(&[0, 1, 1])],
            vec![ivec(&[0, 0, 0]), ivec(&[1, 1, 0]), ivec(&[0, 0, 2]), ivec(&[1, 0, 1])],
        ],
    ];
    for supports in systems {
        let n = supports[0][0].len();
        let tci = tci_from_mci(&Mci::classical(&supports)?)?;
        let ps: Vec<LatticePolytope> = supports.iter().map(|s| LatticePolytope::hull(n, s).unwrap()).collect();
        println!("n = {}: bkk {} mixed volume {}", n, bkk_number(&tci)?, mixed_volume(&ps));
    }
    Ok(())
}
