//! Newton polytopes of eliminants, by projecting the tropical complete
//! intersection and by mixed shadow volumes.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::arith::{gcd_all, int, is_zero_vec, to_rvec, IVec, Int, Rat};
use crate::lattice::{LatticePolytope, WeightedFan};
use crate::matroid::{tci_from_mci, Mci, Tci};
use crate::pl::{pl_from_polytope, pp_degree, reconstruct_polytope, PLFunction, PPFunction, Poly};
use crate::{Error, Result};

/// `ℝ^{eliminated} × ℝ^{kept}`, eliminating the leading coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectionSplit {
    pub eliminated: usize,
    pub kept: usize,
}

impl ProjectionSplit {
    pub fn new(total: usize, kept: usize) -> Result<ProjectionSplit> {
        if kept == 0 || kept > total {
            return Err(Error::DimMismatch { expected: total, got: kept });
        }
        Ok(ProjectionSplit { eliminated: total - kept, kept })
    }

    pub fn total(&self) -> usize {
        self.eliminated + self.kept
    }

    /// Rows of the coordinate projection onto the kept factor.
    pub fn projection(&self) -> Vec<IVec> {
        (0..self.kept)
            .map(|j| (0..self.total()).map(|i| int((i == self.eliminated + j) as i64)).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Projection,
    Shadow,
    Both,
}

/// A support-function check at one primitive vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCheck {
    pub v: IVec,
    pub projection: Rat,
    pub shadow: Rat,
}

#[derive(Clone, Debug)]
pub struct EliminantResult {
    pub polytope: LatticePolytope,
    pub checks: Vec<SupportCheck>,
    pub route: Route,
    /// Whether both routes agree after fixing the translation; `None` when
    /// only the projection route ran.
    pub agree: Option<bool>,
}

/// `δ^{n+1} m / (n+1)!` for `m(x,t) = ∏ m_i(x,t) − ∏ m_i(x,0)` on `t > 0`
/// and `0` on `t ≤ 0`.
pub fn mixed_shadow_volume(ms: &[PLFunction]) -> Result<Rat> {
    let d = ms.len();
    if d == 0 {
        return Err(Error::DimMismatch { expected: 1, got: 0 });
    }
    if let Some(f) = ms.iter().find(|f| f.ambient() != d) {
        return Err(Error::DimMismatch { expected: d, got: f.ambient() });
    }
    let flatten: Vec<IVec> = (0..d).map(|i| (0..d).map(|j| int((i == j && i + 1 < d) as i64)).collect()).collect();
    let at_zero: Vec<PLFunction> = ms.iter().map(|f| f.pullback(&flatten)).collect();
    let mut pls = ms.to_vec();
    pls.extend(at_zero.iter().cloned());
    let t_axis: IVec = (0..d).map(|i| int((i + 1 == d) as i64)).collect();
    let m = PPFunction::build(d, &pls, &[t_axis.clone()], |cell| {
        let p = to_rvec(&cell.relint_point());
        if crate::arith::dot_ir(&t_axis, &p) <= Rat::zero() {
            return Poly::zero(d);
        }
        let up = ms.iter().fold(Poly::one(d), |acc, f| acc.mul(&Poly::linear(&f.gradient(&p))));
        let down = at_zero.iter().fold(Poly::one(d), |acc, f| acc.mul(&Poly::linear(&f.gradient(&p))));
        up.sub(&down)
    });
    pp_degree(&m, &WeightedFan::whole_space(d)).map_err(|e| match e {
        Error::NotContinuous(s) => Error::Internal(format!("shadow function is discontinuous: {}", s)),
        e => e,
    })
}

/// The shadow-route value of the eliminant support function at `v ∈ ℤ^{k+1}`.
pub fn eliminant_support_value(tci: &Tci, v: &[Int]) -> Result<Rat> {
    let total = tci.ambient();
    let n = tci.codim.checked_sub(1).ok_or(Error::NotZeroDimensional { codim: 0, dim: total })?;
    if tci.functions.len() != tci.codim {
        return Err(Error::DegenerateEliminant(tci.collapsed_at.unwrap_or(tci.functions.len())));
    }
    if n + v.len() != total {
        return Err(Error::DimMismatch { expected: total - n, got: v.len() });
    }
    if is_zero_vec(v) || !gcd_all(v).is_one() {
        return Err(Error::NotPrimitive);
    }
    // basis e_1..e_n, (0, v) of the saturated sublattice of ℝ^n ⊕ ℝv
    let rows: Vec<IVec> = (0..total)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i < n {
                        int((i == j) as i64)
                    } else if j == n {
                        v[i - n].clone()
                    } else {
                        Int::zero()
                    }
                })
                .collect()
        })
        .collect();
    let restricted: Vec<PLFunction> = tci.functions.iter().map(|f| f.pullback(&rows)).collect();
    mixed_shadow_volume(&restricted)
}

/// Projects the last fan of a tropical complete intersection and rebuilds the
/// polytope it is dual to.
pub fn tropical_eliminant(t_last: &WeightedFan, split: ProjectionSplit) -> Result<(PLFunction, LatticePolytope)> {
    if t_last.ambient() != split.total() {
        return Err(Error::DimMismatch { expected: split.total(), got: t_last.ambient() });
    }
    let d = t_last.pushforward(&split.projection())?;
    let p = if d.is_empty() || d.dim() + 1 != split.kept {
        LatticePolytope::origin(split.kept)
    } else {
        reconstruct_polytope(&d)?
    };
    Ok((pl_from_polytope(&p), p))
}

/// Vectors at which the two routes are compared: `±e_j` and the rays of the
/// polytope's normal fan.
fn query_vectors(p: &LatticePolytope) -> Vec<IVec> {
    let k = p.ambient();
    let mut out: BTreeSet<IVec> = BTreeSet::new();
    for j in 0..k {
        for s in [1, -1] {
            out.insert((0..k).map(|i| int(if i == j { s } else { 0 })).collect());
        }
    }
    for (_, cone) in p.normal_cones() {
        for r in cone.rays() {
            out.insert(r.clone());
        }
    }
    out.into_iter().collect()
}

/// The eliminant polytope of a matroid complete intersection of codimension
/// one more than the number of eliminated coordinates.
pub fn eliminant_polytope(mci: &Mci, split: ProjectionSplit, verify_shadow: bool) -> Result<EliminantResult> {
    if mci.support().ambient() != split.total() {
        return Err(Error::DimMismatch { expected: split.total(), got: mci.support().ambient() });
    }
    if mci.codim() != split.eliminated + 1 {
        return Err(Error::DimMismatch { expected: split.eliminated + 1, got: mci.codim() });
    }
    let tci = tci_from_mci(mci)?;
    if let Some(i) = tci.collapsed_at {
        return Err(Error::DegenerateEliminant(i));
    }
    let (_, p) = tropical_eliminant(tci.last(), split)?;
    if !verify_shadow {
        return Ok(EliminantResult { polytope: p, checks: Vec::new(), route: Route::Projection, agree: None });
    }
    let mut checks = Vec::new();
    for v in query_vectors(&p) {
        let shadow = eliminant_support_value(&tci, &v)?;
        let projection = p.support_value(&to_rvec(&v));
        checks.push(SupportCheck { v, projection, shadow });
    }
    // the projection route fixes the polytope up to translation only; the
    // shadow values at ±e_j pin the translation down
    let k = split.kept;
    let mut shift: Vec<Rat> = vec![Rat::zero(); k];
    let mut agree = true;
    for j in 0..k {
        let diff = |s: i64| {
            let c = checks.iter().find(|c| c.v.iter().enumerate().all(|(i, x)| *x == int(if i == j { s } else { 0 }))).unwrap();
            &c.shadow - &c.projection
        };
        shift[j] = diff(1);
        if diff(-1) != -shift[j].clone() {
            agree = false;
        }
    }
    let polytope = if agree && shift.iter().all(|s| s.is_integer()) {
        let t: IVec = shift.iter().map(|s| s.to_integer()).collect();
        for c in checks.iter_mut() {
            c.projection += crate::arith::dot_ir(&c.v, &shift);
        }
        p.translate(&t)
    } else {
        agree = false;
        p
    };
    agree = agree && checks.iter().all(|c| c.projection == c.shadow);
    Ok(EliminantResult { polytope, checks, route: Route::Both, agree: Some(agree) })
}
