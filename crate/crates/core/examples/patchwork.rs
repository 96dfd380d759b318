//! Viro patchworking: a univariate polynomial and a conic, both as cell
//! complexes in the positive orthant.

use std::collections::BTreeMap;

use tropeci::arith::{ivec, rat, Rat};
use tropeci::matroid::SupportMultiset;
use tropeci::patchwork::{complex_report, zero_locus, RealMci};

fn real(points: &[&[i64]], signs: &[i8], orders: &[i64]) -> tropeci::Result<RealMci> {
    let ids: Vec<String> = (0..points.len()).map(|i| format!("a{}", i)).collect();
    let support = SupportMultiset::new(ids.iter().cloned().zip(points.iter().map(|p| ivec(p))).collect())?;
    let sign: BTreeMap<String, i8> = ids.iter().cloned().zip(signs.iter().copied()).collect();
    let order: BTreeMap<String, Rat> = ids.iter().cloned().zip(orders.iter().map(|d| rat(*d, 1))).collect();
    RealMci::new(support, vec![vec![rat(1, 1); points.len()]], sign, order)
}

fn main() -> tropeci::Result<()> {
    // 1 − t³x + t x² − t⁵x³ + t²x⁴: Descartes allows 4 positive roots, patchworking finds 2
    let u = real(&[&[0], &[1], &[2], &[3], &[4]], &[1, -1, 1, -1, 1], &[0, 3, 1, 5, 2])?;
    println!("univariate: {:?}", complex_report(&zero_locus(&u, None)?));

    let conic = real(
        &[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]],
        &[1, -1, 1, -1, 1, 1],
        &[0, -7, -34, -9, -26, -38],
    )?;
    let z = zero_locus(&conic, None)?;
    println!("conic: {:?}", complex_report(&z));
    print!("{}", z.to_off());
    Ok(())
}
