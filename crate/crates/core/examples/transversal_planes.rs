//! Unit squares in two transversal coordinate planes of ℝ⁴. The surface
//! `F = δ²(m²) + δ²(n²)` has `MNF = 0` while `MMF · NNF = 16`,
//! so the Hodge index pattern fails on it.
//!
//! Pass a directory to also write the pair `(δ(m)δ(n), F)` as `pair_t.json`
//! and `pair_f.json` for `tropeci pair`.

use std::path::PathBuf;

use tropeci::arith::ivec;
use tropeci::cohomology::{gram_signature, interesting_pair, intersection_number, pullback_from_plane, CycleWitness};
use tropeci::io::{instance_json, to_pretty, Instance};
use tropeci::lattice::{LatticePolytope, WeightedFan};
use tropeci::pl::{iterated_corner_locus, PLFunction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = LatticePolytope::hull(2, &[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])])?;
    let h = PLFunction::support_function(&square);
    let m = pullback_from_plane(&h, 4, [0, 1]);
    let n = pullback_from_plane(&h, 4, [2, 3]);
    let r4 = WeightedFan::whole_space(4);
    let f = iterated_corner_locus(&[m.clone(), m.clone()], &r4)?.add(&iterated_corner_locus(&[n.clone(), n.clone()], &r4)?);

    let on_f = |g: &PLFunction| CycleWitness::new(f.clone(), vec![g.clone()]);
    let mn = intersection_number(&[on_f(&m), on_f(&n)])?;
    let mm = intersection_number(&[on_f(&m), on_f(&m)])?;
    let nn = intersection_number(&[on_f(&n), on_f(&n)])?;
    println!("MNF = {}, MMF = {}, NNF = {}", mn, mm, nn);
    println!("signature on F: {:?}", gram_signature(&f, &[m.clone(), n.clone()])?);

    let t = iterated_corner_locus(&[m, n], &r4)?;
    let pair = interesting_pair(&t, &f)?;
    println!("interesting: {} (connected {}, product {})", pair.interesting, pair.connected, pair.product);

    if let Some(dir) = std::env::args().nth(1).map(PathBuf::from) {
        std::fs::write(dir.join("pair_t.json"), to_pretty(&instance_json(&Instance::Fan(t), Some("δ(m)δ(n) in ℝ⁴"))))?;
        std::fs::write(dir.join("pair_f.json"), to_pretty(&instance_json(&Instance::Fan(f), Some("δ²(m²) + δ²(n²) in ℝ⁴"))))?;
        println!("wrote {}/pair_t.json and pair_f.json", dir.display());
    }
    Ok(())
}
