//! Intersection numbers in the tropical cohomology of a fan, Hodge index and
//! Alexandrov–Fenchel checks, irreducibility certificates and interesting
//! pairs of fans.

mod lines;

pub use lines::{classify_line_pair, LineClassification, ProjLine};

use num_traits::{Signed, Zero};

use crate::arith::{int, lattice_index, rank_int, saturated_basis, to_rvec, Int, IVec, Rat};
use crate::lattice::{Cone, WeightedFan};
use crate::matroid::Tci;
use crate::pl::{corner_locus, iterated_corner_locus, PLFunction};
use crate::{Error, Result};

/// The cycle `δ^k(m_1⋯m_k · T)/k!`, realised as an iterated corner locus.
#[derive(Clone)]
pub struct CycleWitness {
    pub base: WeightedFan,
    pub factors: Vec<PLFunction>,
}

impl CycleWitness {
    pub fn new(base: WeightedFan, factors: Vec<PLFunction>) -> CycleWitness {
        CycleWitness { base, factors }
    }

    pub fn codim(&self) -> usize {
        self.factors.len()
    }
}

pub fn cycle_evaluate(w: &CycleWitness) -> Result<WeightedFan> {
    if w.factors.len() > w.base.dim() {
        return Err(Error::NotComplementary(w.factors.len(), w.base.dim()));
    }
    iterated_corner_locus(&w.factors, &w.base)
}

/// Product of cycles on a common fan, as the weight at the origin.
pub fn intersection_number(ws: &[CycleWitness]) -> Result<Rat> {
    let Some(first) = ws.first() else {
        return Err(Error::NotComplementary(0, 0));
    };
    let total: usize = ws.iter().map(|w| w.codim()).sum();
    if total != first.base.dim() {
        return Err(Error::NotComplementary(total, first.base.dim()));
    }
    let factors: Vec<PLFunction> = ws.iter().flat_map(|w| w.factors.iter().cloned()).collect();
    Ok(iterated_corner_locus(&factors, &first.base)?.degree())
}

/// `δ^n(m_1⋯m_{k−1} m_k^j)/n!` for `j = n − k + 1`: the self-intersection of
/// `T_k` inside `T_{k−1}`.
pub fn self_intersection(tci: &Tci, j: usize) -> Result<Rat> {
    let n = tci.ambient();
    let k = tci.functions.len();
    if k == 0 || n + 1 != k + j {
        return Err(Error::DimMismatch { expected: n + 1 - k.min(n + 1), got: j });
    }
    let mut fan = tci.fans[k - 1].clone();
    for _ in 0..j {
        fan = corner_locus(&tci.functions[k - 1], &fan)?;
    }
    Ok(fan.degree())
}

/// Counts of positive, negative and zero entries after diagonalizing a
/// symmetric matrix by congruence.
pub fn signature(matrix: &[Vec<Rat>]) -> (usize, usize, usize) {
    let n = matrix.len();
    let mut g: Vec<Vec<Rat>> = matrix.to_vec();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut k = 0;
    while k < n {
        if g[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !g[i][i].is_zero()) {
                g.swap(k, i);
                for row in g.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !g[k][j].is_zero()) {
                // replace e_k by e_k + e_j: the new diagonal entry is 2 g_kj
                for c in 0..n {
                    let v = g[j][c].clone();
                    g[k][c] += v;
                }
                for r in 0..n {
                    let v = g[r][j].clone();
                    g[r][k] += v;
                }
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let p = g[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in (k + 1)..n {
            let f = &g[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = &f * &g[k][c];
                g[i][c] -= v;
            }
            for r in k..n {
                let v = &f * &g[r][k];
                g[r][i] -= v;
            }
        }
        k += 1;
    }
    (pos, neg, zero)
}

fn check_surface(t: &WeightedFan) -> Result<()> {
    if t.dim() != 2 {
        return Err(Error::DimMismatch { expected: 2, got: t.dim() });
    }
    if !t.is_balanced()? {
        return Err(Error::NotBalanced("surface fan".into()));
    }
    Ok(())
}

/// The Gram matrix of the classes `δ(g_i · T)` on a two-dimensional fan.
pub fn gram_matrix(t: &WeightedFan, gens: &[PLFunction]) -> Result<Vec<Vec<Rat>>> {
    check_surface(t)?;
    let mut g = vec![vec![Rat::zero(); gens.len()]; gens.len()];
    for i in 0..gens.len() {
        let di = corner_locus(&gens[i], t)?;
        for j in i..gens.len() {
            let v = corner_locus(&gens[j], &di)?.degree();
            g[i][j] = v.clone();
            g[j][i] = v;
        }
    }
    Ok(g)
}

pub fn gram_signature(t: &WeightedFan, gens: &[PLFunction]) -> Result<(usize, usize, usize)> {
    Ok(signature(&gram_matrix(t, gens)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfReport {
    pub a11: Rat,
    pub a22: Rat,
    pub a12: Rat,
    /// `α₁² ≥ 0`.
    pub hypothesis: bool,
    /// The implication `α₁² ≥ 0 ⇒ (α₁α₂)² ≥ α₁²α₂²`.
    pub holds: bool,
}

pub fn af_check(t: &WeightedFan, a1: &PLFunction, a2: &PLFunction) -> Result<AfReport> {
    let g = gram_matrix(t, &[a1.clone(), a2.clone()])?;
    let (a11, a12, a22) = (g[0][0].clone(), g[0][1].clone(), g[1][1].clone());
    let hypothesis = !a11.is_negative();
    let holds = !hypothesis || &a12 * &a12 >= &a11 * &a22;
    Ok(AfReport { a11, a22, a12, hypothesis, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    I,
    Ii,
    Iii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    CertifiedIrreducible,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct IrreducibilityReport {
    pub level: Level,
    pub verdict: Verdict,
    pub detail: String,
}

/// Sufficient criteria for irreducibility of the last stage of a TCI, assuming
/// the previous stage is irreducible. Never reports reducibility.
pub fn irreducibility_certificate(tci: &Tci, level: Level, witness: Option<&CycleWitness>) -> Result<IrreducibilityReport> {
    let k = tci.functions.len();
    if k == 0 {
        return Err(Error::DimMismatch { expected: 1, got: 0 });
    }
    let prev = &tci.fans[k - 1];
    let m = &tci.functions[k - 1];
    let (ok, detail) = match level {
        Level::I => {
            let mut nonneg = true;
            let mut nonzero = false;
            for (tau, _) in prev.cones() {
                for (piece, c) in m.pieces(tau) {
                    for r in piece.rays() {
                        let v = crate::arith::dot_ir(r, &c);
                        nonneg &= !v.is_negative();
                        nonzero |= !v.is_zero();
                    }
                    for l in piece.lineality() {
                        let v = crate::arith::dot_ir(l, &c);
                        nonneg &= v.is_zero();
                        nonzero |= !v.is_zero();
                    }
                }
            }
            (nonneg && nonzero, format!("m_k >= 0: {}, not identically 0: {}", nonneg, nonzero))
        }
        Level::Ii => {
            let f = corner_locus(m, &corner_locus(m, prev)?)?;
            let ok = !f.is_empty() && f.all_weights_nonnegative();
            (ok, format!("{} cones, nonnegative weights: {}", f.cones().len(), f.all_weights_nonnegative()))
        }
        Level::Iii => {
            let w = witness.ok_or(Error::MissingWitness)?;
            let f = corner_locus(m, &corner_locus(m, prev)?)?;
            let g = cycle_evaluate(w)?;
            let x = stable_intersection(&f, &g)?;
            (x.is_positive(), format!("intersection with witness = {}", x))
        }
    };
    let verdict = if ok { Verdict::CertifiedIrreducible } else { Verdict::Inconclusive };
    Ok(IrreducibilityReport { level, verdict, detail })
}

/// A point of `ℤ^n` off every hyperplane spanned by a facet of the cones
/// `σ − τ`, from a deterministic moment-curve search.
fn generic_vector(n: usize, cones: &[Cone]) -> IVec {
    let mut t = 3i64;
    loop {
        let mut v = Vec::with_capacity(n);
        let mut x = Int::from(1);
        for _ in 0..n {
            v.push(x.clone());
            x *= t;
        }
        // alternate signs so the vector is not confined to the positive orthant
        for (i, c) in v.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = -c.clone();
            }
        }
        if cones.iter().all(|c| c.facet_normals().iter().all(|f| !crate::arith::dot(f, &v).is_zero())) {
            return v;
        }
        t += 2;
    }
}

/// The stable intersection number of two fans of complementary dimension:
/// the fan displacement rule at a generic vector.
pub fn stable_intersection(a: &WeightedFan, b: &WeightedFan) -> Result<Rat> {
    let n = a.ambient();
    if b.ambient() != n {
        return Err(Error::DimMismatch { expected: n, got: b.ambient() });
    }
    if a.dim() + b.dim() != n {
        return Err(Error::NotComplementary(a.dim(), b.dim()));
    }
    let mut pairs = Vec::new();
    for (i, (s, _)) in a.cones().iter().enumerate() {
        for (j, (t, _)) in b.cones().iter().enumerate() {
            let mut span = s.span_generators();
            span.extend(t.span_generators());
            if rank_int(&span, n) < n {
                continue;
            }
            let mut rays = s.rays().to_vec();
            rays.extend(t.rays().iter().map(|r| r.iter().map(|x| -x).collect::<IVec>()));
            let mut lin = s.lineality().to_vec();
            lin.extend(t.lineality().iter().cloned());
            pairs.push((i, j, Cone::from_generators(n, &rays, &lin)));
        }
    }
    let cones: Vec<Cone> = pairs.iter().map(|(_, _, c)| c.clone()).collect();
    let v = generic_vector(n, &cones);
    let mut total = Rat::zero();
    for (i, j, c) in &pairs {
        if !c.contains(&v) {
            continue;
        }
        let (s, ws) = &a.cones()[*i];
        let (t, wt) = &b.cones()[*j];
        let mut gens = saturated_basis(&s.span_generators(), n);
        gens.extend(saturated_basis(&t.span_generators(), n));
        total += ws * wt * Rat::from_integer(lattice_index(&gens, n));
    }
    Ok(total)
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub interesting: bool,
    pub connected: bool,
    pub zero_product: bool,
    pub product: Rat,
    /// Type of the projectivized spans, for pairs of surfaces in `ℝ^4`.
    pub classification: Option<LineClassification>,
}

pub fn interesting_pair(t: &WeightedFan, f: &WeightedFan) -> Result<PairReport> {
    let product = stable_intersection(t, f)?;
    let connected = t.is_connected_off_origin();
    let zero_product = product.is_zero();
    let interesting = zero_product && connected;
    let mut classification = None;
    if interesting && t.ambient() == 4 && t.dim() == 2 && f.dim() == 2 {
        let lines = |fan: &WeightedFan| -> Vec<ProjLine> {
            let mut spans: Vec<Vec<IVec>> = fan
                .cones()
                .iter()
                .map(|(c, _)| saturated_basis(&c.span_generators(), 4))
                .filter(|b| b.len() == 2)
                .collect();
            spans.sort();
            spans.dedup();
            spans.into_iter().map(|b| ProjLine::new(to_rvec(&b[0]), to_rvec(&b[1])).unwrap()).collect()
        };
        // planes of F play the role of L, those of T of R
        classification = classify_line_pair(&lines(f), &lines(t)).ok();
    }
    Ok(PairReport { interesting, connected, zero_product, product, classification })
}

/// Pulls back a function on `ℝ^2` along the projection onto two coordinates
/// of `ℝ^n`.
pub fn pullback_from_plane(f: &PLFunction, n: usize, coords: [usize; 2]) -> PLFunction {
    let rows: Vec<IVec> = coords.iter().map(|&c| (0..n).map(|i| int((i == c) as i64)).collect()).collect();
    f.pullback(&rows)
}
