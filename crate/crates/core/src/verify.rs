//! Seeded self-check suites behind `tropeci verify`.
//!
//! Each suite returns named pass/fail checks. The instances are random but
//! reproducible; the reference values come from elementary formulas
//! (inclusion–exclusion, Pick, sign changes) rather than from the engine.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorial, int, ivec, rat, IVec, Int, Rat};
use crate::cohomology::{
    af_check, classify_line_pair, gram_signature, intersection_number, interesting_pair, irreducibility_certificate,
    pullback_from_plane, CycleWitness, Level, ProjLine, Verdict,
};
use crate::elimination::{eliminant_polytope, ProjectionSplit};
use crate::invariants::{euler_from_csm, euler_from_genera, volume_valuation, count_valuation, VirtualPolytope};
use crate::lattice::{LatticePolytope, WeightedFan};
use crate::matroid::{bkk_number, tci_from_mci, Matroid, Mci, SupportMultiset};
use crate::patchwork::{complex_report, zero_locus, RealMci};
use crate::pl::{iterated_corner_locus, PLFunction};
use crate::{Error, Result};

pub const SUITES: [&str; 10] =
    ["hexagon", "classical", "eliminant", "valuation", "euler", "transversal", "hodge", "descartes", "irreducible", "lines"];

pub fn run_suite(name: &str) -> Result<Vec<(String, bool)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e0c1);
    let checks = match name {
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(run_suite(s)?.into_iter().map(|(n, p)| (format!("{}/{}", s, n), p)));
            }
            return Ok(all);
        }
        "hexagon" => hexagon_suite()?,
        "classical" => classical(&mut rng)?,
        "eliminant" => eliminant(&mut rng)?,
        "valuation" => valuation(&mut rng)?,
        "euler" => euler(&mut rng)?,
        "transversal" => transversal()?,
        "hodge" => hodge(&mut rng)?,
        "descartes" => descartes(&mut rng)?,
        "irreducible" => irreducible(&mut rng)?,
        "lines" => lines()?,
        other => {
            return Err(Error::Schema {
                path: "--suite".into(),
                message: format!("unknown suite \"{}\"; known: all, {}", other, SUITES.join(", ")),
            })
        }
    };
    Ok(checks)
}

fn check(name: impl Into<String>, pass: bool) -> (String, bool) {
    (name.into(), pass)
}

fn hull(pts: &[IVec]) -> LatticePolytope {
    LatticePolytope::hull(pts[0].len(), pts).expect("nonempty")
}

/// A full-dimensional polytope with `m` random vertices in `[0, b]^n`.
pub fn random_polytope(rng: &mut impl Rng, n: usize, m: usize, b: i64) -> LatticePolytope {
    loop {
        let pts: Vec<IVec> = (0..m.max(n + 1)).map(|_| (0..n).map(|_| int(rng.gen_range(0..=b))).collect()).collect();
        let p = hull(&pts);
        if p.dim() == n {
            return p;
        }
    }
}

/// Three binomials on alternate hexagon edges with coefficient columns
/// `(1,1), (1,2), (1,3)`, each used at both endpoints.
pub fn hexagon_mci() -> Mci {
    let pts = [("r0", [0, 0]), ("r1", [1, 0]), ("g0", [2, 1]), ("g1", [2, 2]), ("b0", [1, 2]), ("b1", [0, 1])];
    let cols = [[1, 1], [1, 1], [1, 2], [1, 2], [1, 3], [1, 3]];
    let support = SupportMultiset::new(pts.iter().map(|(id, a)| (id.to_string(), ivec(a))).collect()).unwrap();
    let vectors = cols.iter().map(|c| vec![rat(c[0], 1), rat(c[1], 1)]).collect();
    let matroid = Matroid::from_vectors(support.ids().to_vec(), vectors).unwrap();
    Mci::new(support, matroid, 2).unwrap()
}

fn hexagon() -> LatticePolytope {
    hull(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[2, 1]), ivec(&[2, 2]), ivec(&[1, 2]), ivec(&[0, 1])])
}

fn hexagon_suite() -> Result<Vec<(String, bool)>> {
    let t = tci_from_mci(&hexagon_mci())?;
    let hex = PLFunction::support_function(&hexagon());
    let r2 = WeightedFan::whole_space(2);
    let dual = crate::pl::corner_locus(&hex, &r2)?;
    Ok(vec![
        check("m1_is_hexagon_support", t.functions[0].agrees_on(&hex, &r2)),
        check("t1_has_six_rays", t.fans[1].cones().len() == 6 && t.fans[1].same_cycle(&dual)),
        check("bkk_is_3", bkk_number(&t)? == int(3)),
        check("hexagon_volume_is_6", hexagon().normalized_volume() == int(6)),
        check("corner_loci", t.verify()?),
    ])
}

/// Mixed volume by inclusion–exclusion over Minkowski sums.
pub fn mixed_volume(ps: &[LatticePolytope]) -> Int {
    let n = ps.len();
    let mut total = Int::zero();
    for mask in 1u32..(1 << n) {
        let mut sum = LatticePolytope::origin(ps[0].ambient());
        for (i, p) in ps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = sum.minkowski_sum(p).unwrap();
            }
        }
        let sign = if (n as u32 - mask.count_ones()) % 2 == 0 { 1 } else { -1 };
        total += int(sign) * sum.normalized_volume();
    }
    total / factorial(n)
}

fn classical(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..12 {
        let n = if i < 9 { 2 } else { 3 };
        let ps: Vec<LatticePolytope> = (0..n).map(|_| random_polytope(rng, n, n + 2, 2)).collect();
        let supports: Vec<Vec<IVec>> = ps.iter().map(|p| p.vertices().to_vec()).collect();
        let b = bkk_number(&tci_from_mci(&Mci::classical(&supports)?)?)?;
        out.push(check(format!("bkk_vs_mixed_volume_{}", i), b == mixed_volume(&ps)));
    }
    Ok(out)
}

fn eliminant(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..4 {
        let ps: Vec<LatticePolytope> = (0..2).map(|_| random_polytope(rng, 2, 3, 2)).collect();
        let supports: Vec<Vec<IVec>> = ps.iter().map(|p| p.vertices().to_vec()).collect();
        let e = eliminant_polytope(&Mci::classical(&supports)?, ProjectionSplit::new(2, 1)?, true)?;
        out.push(check(format!("routes_agree_{}", i), e.agree == Some(true)));
    }
    Ok(out)
}

fn valuation(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..5 {
        let p = random_polytope(rng, 2, 4, 3);
        let q = random_polytope(rng, 2, 3, 2);
        let r = random_polytope(rng, 2, 3, 2);
        let m = VirtualPolytope::new(p.clone(), q.clone())?;
        let m2 = VirtualPolytope::new(p.minkowski_sum(&r)?, q.minkowski_sum(&r)?)?;
        out.push(check(
            format!("representation_independent_{}", i),
            count_valuation(&m)? == count_valuation(&m2)? && volume_valuation(&m)? == volume_valuation(&m2)?,
        ));
    }
    let unit = hull(&[ivec(&[0]), ivec(&[1])]);
    let inverse = VirtualPolytope::new(LatticePolytope::origin(1), unit)?;
    out.push(check("count_at_virtual_inverse", count_valuation(&inverse)? == int(0)));
    out.push(check("volume_at_virtual_inverse", volume_valuation(&inverse)? == int(-1)));
    out.push(check("hexagon_volume", volume_valuation(&VirtualPolytope::convex(hexagon()))? == int(6)));
    Ok(out)
}

fn euler(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..5 {
        let p = random_polytope(rng, 2, 4, 3);
        let t = tci_from_mci(&Mci::classical(&[p.vertices().to_vec()])?)?;
        let csm = euler_from_csm(&t)?;
        let gen = euler_from_genera(&[VirtualPolytope::convex(p.clone())], 2)?;
        out.push(check(format!("csm_is_minus_volume_{}", i), csm == -p.normalized_volume()));
        out.push(check(format!("genera_agree_{}", i), gen == csm));
    }
    Ok(out)
}

fn square() -> PLFunction {
    PLFunction::support_function(&hull(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])]))
}

fn transversal() -> Result<Vec<(String, bool)>> {
    let m = pullback_from_plane(&square(), 4, [0, 1]);
    let n = pullback_from_plane(&square(), 4, [2, 3]);
    let r4 = WeightedFan::whole_space(4);
    let f = iterated_corner_locus(&[m.clone(), m.clone()], &r4)?.add(&iterated_corner_locus(&[n.clone(), n.clone()], &r4)?);
    let w = |g: &PLFunction| CycleWitness::new(f.clone(), vec![g.clone()]);
    let mnf = intersection_number(&[w(&m), w(&n)])?;
    let mmf = intersection_number(&[w(&m), w(&m)])?;
    let nnf = intersection_number(&[w(&n), w(&n)])?;
    let sig = gram_signature(&f, &[m.clone(), n.clone()])?;
    let t = iterated_corner_locus(&[m.clone(), n.clone()], &r4)?;
    let pair = interesting_pair(&t, &f)?;
    Ok(vec![
        check("mnf_is_zero", mnf.is_zero()),
        check("m2n2_is_16", &mmf * &nnf == rat(16, 1)),
        check("signature_not_hodge", sig.0 != 1),
        check("af_fails", !af_check(&f, &m, &n)?.holds),
        check("pair_interesting", pair.interesting),
    ])
}

fn hodge(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let r2 = WeightedFan::whole_space(2);
    let mut out = Vec::new();
    for i in 0..3 {
        let gens: Vec<PLFunction> = (0..3 + i).map(|_| PLFunction::support_function(&random_polytope(rng, 2, 4, 3))).collect();
        out.push(check(format!("one_positive_{}", i), gram_signature(&r2, &gens)?.0 == 1));
    }
    for i in 0..5 {
        let a = PLFunction::support_function(&random_polytope(rng, 2, 4, 3));
        let b = PLFunction::support_function(&random_polytope(rng, 2, 4, 3));
        out.push(check(format!("alexandrov_fenchel_{}", i), af_check(&r2, &a, &b)?.holds));
    }
    Ok(out)
}

/// Sign changes along the upper hull of the lifted points `(a, d_a)`.
pub fn upper_hull_sign_changes(a: &[i64], d: &[i64], s: &[i8]) -> usize {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by_key(|&i| a[i]);
    let mut hull: Vec<usize> = Vec::new();
    for &i in &idx {
        while hull.len() >= 2 {
            let (p, q) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a[q] - a[p]) * (d[i] - d[p]) - (d[q] - d[p]) * (a[i] - a[p]);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    hull.windows(2).filter(|w| s[w[0]] != s[w[1]]).count()
}

fn univariate(a: &[i64], s: &[i8], d: &[i64]) -> Result<RealMci> {
    let ids: Vec<String> = (0..a.len()).map(|i| format!("a{}", i)).collect();
    let support = SupportMultiset::new(ids.iter().cloned().zip(a.iter().map(|x| ivec(&[*x]))).collect())?;
    RealMci::new(
        support,
        vec![vec![Rat::one(); a.len()]],
        ids.iter().cloned().zip(s.iter().copied()).collect(),
        ids.iter().cloned().zip(d.iter().map(|x| rat(*x, 1))).collect(),
    )
}

fn descartes(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..20 {
        let size = rng.gen_range(2..=6);
        let mut a: Vec<i64> = (0..=8).collect();
        for j in (1..a.len()).rev() {
            a.swap(j, rng.gen_range(0..=j));
        }
        a.truncate(size);
        let s: Vec<i8> = (0..size).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let mut d: Vec<i64> = (0..30).collect();
        for j in (1..d.len()).rev() {
            d.swap(j, rng.gen_range(0..=j));
        }
        d.truncate(size);
        let z = zero_locus(&univariate(&a, &s, &d)?, None)?;
        let r = complex_report(&z);
        out.push(check(format!("sign_changes_{}", i), r.components == upper_hull_sign_changes(&a, &d, &s)));
    }
    Ok(out)
}

fn irreducible(rng: &mut ChaCha8Rng) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for i in 0..5 {
        // a polygon with the origin in its interior
        let mut pts: Vec<IVec> = [[1, 0], [0, 1], [-1, 0], [0, -1]].iter().map(|p| ivec(p)).collect();
        pts.extend((0..3).map(|_| ivec(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)])));
        let t = tci_from_mci(&Mci::classical(&[hull(&pts).vertices().to_vec()])?)?;
        let ok = |l| irreducibility_certificate(&t, l, None).map(|r| r.verdict == Verdict::CertifiedIrreducible);
        out.push(check(format!("level_i_{}", i), ok(Level::I)?));
        out.push(check(format!("level_ii_{}", i), ok(Level::Ii)?));
    }
    Ok(out)
}

fn lines() -> Result<Vec<(String, bool)>> {
    let line = |a: [i64; 3], b: [i64; 3]| {
        ProjLine::new(a.iter().map(|x| rat(*x, 1)).collect(), b.iter().map(|x| rat(*x, 1)).collect()).unwrap()
    };
    let tag = |l: &[ProjLine], r: &[ProjLine]| classify_line_pair(l, r).map(|c| c.tag).unwrap_or(0);
    let o = [0, 0, 0];
    Ok(vec![
        check("type_1", tag(&[line(o, [1, 0, 0]), line(o, [0, 1, 0])], &[line(o, [0, 0, 1]), line(o, [1, 1, 1])]) == 1),
        check(
            "type_2",
            tag(&[line(o, [1, 0, 0]), line([0, 1, 0], [1, 1, 0])], &[line(o, [0, 1, 0]), line([2, 0, 0], [3, 1, 0])]) == 2,
        ),
        check("type_3", tag(&[line(o, [1, 0, 0]), line(o, [0, 1, 0])], &[line([1, 0, 0], [0, 1, 0]), line(o, [0, 0, 1])]) == 3),
        check(
            "type_4",
            tag(
                &[line(o, [1, 1, 0]), line([1, 0, 0], [1, 0, 1]), line(o, [1, 0, 0])],
                &[line([1, 0, 0], [0, 1, 0]), line(o, [1, 0, 1])],
            ) == 4,
        ),
        check("type_5", tag(&[line(o, [1, 0, 0])], &[line(o, [0, 1, 1]), line([1, 0, 0], [1, 1, 3]), line([2, 0, 0], [3, 5, 7])]) == 5),
        check(
            "type_6",
            tag(
                &[line(o, [1, 0, 0]), line([0, 0, 1], [0, 1, 1])],
                &[line(o, [0, 0, 1]), line([1, 0, 0], [0, 1, 1]), line([2, 0, 0], [0, 3, 1])],
            ) == 6,
        ),
        check("disjoint_not_interesting", tag(&[line(o, [1, 0, 0])], &[line([0, 0, 1], [0, 1, 1])]) == 0),
    ])
}
