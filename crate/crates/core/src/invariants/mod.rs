//! Valuations on virtual polytopes, Hirzebruch genera and Euler
//! characteristics, and tropical characteristic classes.

mod csm;
mod genera;

pub use csm::{euler_from_csm, tropical_csm, CharClassList};
pub use genera::{euler_from_genera, euler_printed_sum, hirzebruch_chi_p};

use num_traits::{One, Signed, Zero};

use crate::arith::{dot_ir, dot_rr, sub_rv, to_rvec, Int, Rat};
use crate::lattice::{arrangement_of, split_cells, Cone, LatticePolytope};
use crate::pl::PLFunction;
use crate::{Error, Result};

/// The formal difference `m₊ − m₋`, standing for `h_{m₊} − h_{m₋}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualPolytope {
    pub plus: LatticePolytope,
    pub minus: LatticePolytope,
}

impl VirtualPolytope {
    pub fn new(plus: LatticePolytope, minus: LatticePolytope) -> Result<VirtualPolytope> {
        if plus.ambient() != minus.ambient() {
            return Err(Error::DimMismatch { expected: plus.ambient(), got: minus.ambient() });
        }
        Ok(VirtualPolytope { plus, minus })
    }

    pub fn convex(p: LatticePolytope) -> VirtualPolytope {
        let n = p.ambient();
        VirtualPolytope { plus: p, minus: LatticePolytope::origin(n) }
    }

    pub fn zero(n: usize) -> VirtualPolytope {
        VirtualPolytope::convex(LatticePolytope::origin(n))
    }

    pub fn ambient(&self) -> usize {
        self.plus.ambient()
    }

    pub fn add(&self, other: &VirtualPolytope) -> Result<VirtualPolytope> {
        Ok(VirtualPolytope {
            plus: self.plus.minkowski_sum(&other.plus)?,
            minus: self.minus.minkowski_sum(&other.minus)?,
        })
    }

    pub fn neg(&self) -> VirtualPolytope {
        VirtualPolytope { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    pub fn dilate(&self, t: u64) -> VirtualPolytope {
        let t = Int::from(t);
        VirtualPolytope { plus: self.plus.dilate(&t), minus: self.minus.dilate(&t) }
    }

    /// `Σ c_i m_i` for nonnegative integers `c_i`.
    pub fn combination(ms: &[VirtualPolytope], coeffs: &[u64], n: usize) -> Result<VirtualPolytope> {
        let mut acc = VirtualPolytope::zero(n);
        for (m, &c) in ms.iter().zip(coeffs) {
            if c > 0 {
                acc = acc.add(&m.dilate(c))?;
            }
        }
        Ok(acc)
    }

    pub fn value(&self, l: &[Rat]) -> Rat {
        self.plus.support_value(l) - self.minus.support_value(l)
    }
}

/// Writes a PL function with integral covectors as a difference of support
/// functions: `m = (m + C·h_Q) − C·h_Q` with `Q` the zonotope of the
/// arrangement spanned by the linearity domains and `C` the least integer
/// making the first summand convex.
pub fn virtual_polytope_of(m: &PLFunction) -> Result<VirtualPolytope> {
    let n = m.ambient();
    let (cones, _) = m.to_explicit();
    let refs: Vec<&Cone> = cones.iter().collect();
    let normals = arrangement_of(&refs);
    let mut q = LatticePolytope::origin(n);
    for h in &normals {
        q = q.minkowski_sum(&LatticePolytope::hull(n, &[vec![Int::zero(); n], h.clone()])?)?;
    }
    let chambers = split_cells(cones, &normals);
    let mut cov = Vec::new();
    let mut zon = Vec::new();
    let mut gens = Vec::new();
    for c in &chambers {
        let x = to_rvec(&c.relint_point());
        let g = m.gradient(&x);
        if g.iter().any(|v| !v.is_integer()) {
            return Err(Error::NotConvex);
        }
        cov.push(g);
        let best = q.vertices().iter().max_by_key(|v| dot_ir(v, &x)).unwrap();
        zon.push(to_rvec(best));
        let mut r: Vec<_> = c.rays().to_vec();
        for l in c.lineality() {
            r.push(l.clone());
            r.push(l.iter().map(|v| -v).collect());
        }
        gens.push(r);
    }
    // convexity of m + C·h_Q: on chamber j its covector dominates every other one
    let mut c = Rat::zero();
    for j in 0..chambers.len() {
        for i in 0..chambers.len() {
            let dc = sub_rv(&cov[j], &cov[i]);
            let dq = sub_rv(&zon[j], &zon[i]);
            for r in &gens[j] {
                let r = to_rvec(r);
                let (a, b) = (dot_rr(&dc, &r), dot_rr(&dq, &r));
                if b.is_positive() && a.is_negative() {
                    let need = -a / b;
                    if need > c {
                        c = need;
                    }
                }
            }
        }
    }
    let c = c.ceil().to_integer();
    let pts: Vec<_> = cov
        .iter()
        .zip(&zon)
        .map(|(g, z)| g.iter().zip(z).map(|(a, b)| (a + b * Rat::from_integer(c.clone())).to_integer()).collect())
        .collect();
    VirtualPolytope::new(LatticePolytope::hull(n, &pts)?, q.dilate(&c))
}

/// A finite integer combination of indicator functions of polytopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorCombination {
    pub terms: Vec<(Int, LatticePolytope)>,
}

impl IndicatorCombination {
    pub fn eval(&self, x: &[Rat]) -> Int {
        self.terms.iter().filter(|(_, p)| p.contains_rat(x)).map(|(c, _)| c.clone()).sum()
    }

    pub fn count(&self) -> Int {
        self.terms.iter().map(|(c, p)| c * p.lattice_points()).sum()
    }

    pub fn volume(&self) -> Int {
        self.terms.iter().map(|(c, p)| c * p.normalized_volume()).sum()
    }
}

/// `Val m = Σ_f (−1)^{dim f} 1_{m₊ + f}` over the faces `f` of `−m₋`.
pub fn val_decompose(m: &VirtualPolytope) -> Result<IndicatorCombination> {
    let mut terms = Vec::new();
    for f in m.minus.reflect().faces() {
        let c = if f.dim() % 2 == 0 { Int::one() } else { -Int::one() };
        terms.push((c, m.plus.minkowski_sum(&f)?));
    }
    Ok(IndicatorCombination { terms })
}

/// `#m`, the lattice-point count extended to virtual polytopes.
pub fn count_valuation(m: &VirtualPolytope) -> Result<Int> {
    if m.minus.vertices().len() == 1 {
        return Ok(m.plus.lattice_points());
    }
    Ok(val_decompose(m)?.count())
}

/// `Vol_Z m`, the normalized volume extended to virtual polytopes.
pub fn volume_valuation(m: &VirtualPolytope) -> Result<Int> {
    if m.minus.vertices().len() == 1 {
        return Ok(m.plus.normalized_volume());
    }
    Ok(val_decompose(m)?.volume())
}
