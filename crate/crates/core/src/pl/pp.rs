//! Piecewise polynomial functions and fans with polynomial weights.
//!
//! A fan with polynomial weights `P` has one polynomial per maximal cone,
//! stored as its composition with the orthogonal projection onto the span of
//! the cone. The corner locus operator is
//!
//! `δ(P)_σ = Σ_j D_{u_j} P_j − div_σ(Σ_j P_j u_j)`,
//!
//! where the `u_j` are lattice normals of `σ` into the adjacent cones and the
//! divergence is taken on `span σ`. The vector field `Σ_j P_j u_j` must be
//! tangent to `span σ` along it; this is the balancing condition. For constant
//! weights `w` and a piecewise polynomial `F` the formula applied to `F·T`
//! reads `Σ_j w_j D_{u_j}F_j − D_{Σ w_j u_j} F_σ`, and the choice of lifts
//! does not matter.

use num_traits::{One, Zero};

use crate::arith::{factorial, solve_in_span, to_rvec, IVec, RVec, Rat};
use crate::lattice::fan::split_cells;
use crate::lattice::{Cone, WeightedFan};
use crate::pl::corner::facet_incidences;
use crate::pl::poly::Poly;
use crate::pl::PLFunction;
use crate::{Error, Result};

/// A continuous piecewise polynomial function on a complete fan.
#[derive(Clone, Debug)]
pub struct PPFunction {
    ambient: usize,
    cells: Vec<(Cone, Poly)>,
}

/// A pure-dimensional fan with polynomial weights.
#[derive(Clone, Debug)]
pub struct PolyFan {
    ambient: usize,
    dim: usize,
    cones: Vec<(Cone, Poly)>,
}

/// Lattice-free projector data for a linear span: a basis `E` (as vectors)
/// and the left inverse `L` with `L E = I` and `E L` the orthogonal projector.
fn span_projector(cone: &Cone) -> (Vec<RVec>, Vec<RVec>) {
    let n = cone.ambient();
    let basis = crate::arith::saturated_basis(&cone.span_generators(), n);
    let e: Vec<RVec> = basis.iter().map(|b| to_rvec(b)).collect();
    let r = e.len();
    if r == 0 {
        return (e, Vec::new());
    }
    let gram_cols: Vec<RVec> = (0..r)
        .map(|j| (0..r).map(|i| crate::arith::dot_rr(&e[i], &e[j])).collect())
        .collect();
    // G^{-1} column by column
    let inv_cols: Vec<RVec> = (0..r)
        .map(|j| {
            let unit: RVec = (0..r).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
            solve_in_span(&gram_cols, &unit).expect("Gram matrix is invertible")
        })
        .collect();
    // L = G^{-1} E^T, row t: Σ_s Ginv[t][s] e_s
    let l: Vec<RVec> = (0..r)
        .map(|t| {
            let mut row = vec![Rat::zero(); n];
            for (s, es) in e.iter().enumerate() {
                let g = &inv_cols[s][t];
                for (x, y) in row.iter_mut().zip(es) {
                    *x += g * y;
                }
            }
            row
        })
        .collect();
    (e, l)
}

/// Substitution matrix for `x = E y`: row `i` holds the coefficients of `x_i`.
fn embed_matrix(e: &[RVec], n: usize) -> Vec<RVec> {
    (0..n).map(|i| e.iter().map(|et| et[i].clone()).collect()).collect()
}

/// `p ∘ π` for the orthogonal projection `π` onto the span of `cone`.
fn restrict(p: &Poly, cone: &Cone) -> Poly {
    let n = cone.ambient();
    let (e, l) = span_projector(cone);
    if e.is_empty() {
        return Poly::constant(n, p.constant_term());
    }
    let py = p.compose_linear(&embed_matrix(&e, n), e.len());
    py.compose_linear(&l, n)
}

impl PPFunction {
    /// Builds a function on the common refinement of the linearity domains
    /// of `pls` and the hyperplanes `walls`, with the polynomial on each cell
    /// given by `poly_of(cell)`.
    pub fn build(
        n: usize,
        pls: &[PLFunction],
        walls: &[IVec],
        poly_of: impl Fn(&Cone) -> Poly,
    ) -> PPFunction {
        let mut cells = split_cells(vec![Cone::whole_space(n)], walls);
        for f in pls {
            cells = cells.iter().flat_map(|c| f.refine(c)).collect();
        }
        let cells = cells.into_iter().map(|c| {
            let p = poly_of(&c);
            (c, p)
        });
        PPFunction { ambient: n, cells: cells.collect() }
    }

    /// `∏ f_i`.
    pub fn product(n: usize, fs: &[PLFunction]) -> PPFunction {
        PPFunction::build(n, fs, &[], |c| {
            let x = to_rvec(&c.relint_point());
            fs.iter().fold(Poly::one(n), |acc, f| acc.mul(&Poly::linear(&f.gradient(&x))))
        })
    }

    /// A function given by one polynomial per maximal cone of a complete fan.
    pub fn explicit(n: usize, cells: Vec<(Cone, Poly)>) -> Result<PPFunction> {
        let fan = WeightedFan::new(n, n, cells.iter().map(|(c, _)| (c.clone(), Rat::one())).collect())?;
        for wall in fan.walls() {
            if wall.around.len() != 2 {
                return Err(Error::NotAFan(format!("domain fan is not complete near {}", wall.face)));
            }
        }
        for i in 0..cells.len() {
            for j in (i + 1)..cells.len() {
                let common = cells[i].0.intersect(&cells[j].0);
                let d = cells[i].1.sub(&cells[j].1);
                if !restrict(&d, &common).is_zero() {
                    return Err(Error::NotContinuous(format!(
                        "polynomials on {} and {} disagree on their common face",
                        cells[i].0, cells[j].0
                    )));
                }
            }
        }
        Ok(PPFunction { ambient: n, cells })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn cells(&self) -> &[(Cone, Poly)] {
        &self.cells
    }

    /// Pieces of `tau` on which the function is polynomial.
    pub fn pieces(&self, tau: &Cone) -> Vec<(Cone, Poly)> {
        let mut out: Vec<(Cone, Poly)> = Vec::new();
        for (c, p) in &self.cells {
            let piece = tau.intersect(c);
            // a cone inside a wall lies in several cells; they agree there
            if piece.dim() == tau.dim() && !out.iter().any(|(q, _)| *q == piece) {
                out.push((piece, p.clone()));
            }
        }
        out
    }

    pub fn value(&self, x: &[Rat]) -> Rat {
        for (c, p) in &self.cells {
            if c.contains_rat(x) {
                return p.eval(x);
            }
        }
        unreachable!("domain fan is complete")
    }
}

impl PolyFan {
    pub fn from_fan(t: &WeightedFan) -> PolyFan {
        let n = t.ambient();
        PolyFan {
            ambient: n,
            dim: t.dim(),
            cones: t.cones().iter().map(|(c, w)| (c.clone(), Poly::constant(n, w.clone()))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &[(Cone, Poly)] {
        &self.cones
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Value of a zero-dimensional fan.
    pub fn number(&self) -> Rat {
        self.cones.iter().map(|(_, p)| p.constant_term()).sum()
    }

    /// `F·T`: weights multiplied by `F` on a common refinement.
    pub fn times(&self, f: &PPFunction) -> PolyFan {
        let mut cones = Vec::new();
        for (tau, w) in &self.cones {
            for (piece, p) in f.pieces(tau) {
                let q = restrict(&w.mul(&p), &piece);
                if !q.is_zero() {
                    cones.push((piece, q));
                }
            }
        }
        PolyFan { ambient: self.ambient, dim: self.dim, cones }
    }

    /// The corner locus `δ(P)`.
    pub fn delta(&self) -> Result<PolyFan> {
        let n = self.ambient;
        if self.dim == 0 {
            return Ok(PolyFan { ambient: n, dim: 0, cones: Vec::new() });
        }
        let refs: Vec<&Cone> = self.cones.iter().map(|(c, _)| c).collect();
        let mut out = Vec::new();
        for (sigma, around) in facet_incidences(&refs) {
            let mut s = Poly::zero(n);
            let mut v: Vec<Poly> = vec![Poly::zero(n); n];
            for (j, u) in &around {
                let p = &self.cones[*j].1;
                let ur = to_rvec(u);
                s = s.add(&p.directional(&ur));
                for (k, uk) in ur.iter().enumerate() {
                    if !uk.is_zero() {
                        v[k] = v[k].add(&p.scale(uk));
                    }
                }
            }
            let (e, l) = span_projector(&sigma);
            let r = e.len();
            let weight = if r == 0 {
                if v.iter().any(|vk| !vk.constant_term().is_zero()) {
                    return Err(Error::NotBalanced(format!("around {}", sigma)));
                }
                Poly::constant(n, s.constant_term())
            } else {
                let emb = embed_matrix(&e, n);
                let vy: Vec<Poly> = v.iter().map(|vk| vk.compose_linear(&emb, r)).collect();
                let c: Vec<Poly> = (0..r)
                    .map(|t| {
                        let mut acc = Poly::zero(r);
                        for (k, vk) in vy.iter().enumerate() {
                            if !l[t][k].is_zero() {
                                acc = acc.add(&vk.scale(&l[t][k]));
                            }
                        }
                        acc
                    })
                    .collect();
                for (k, vk) in vy.iter().enumerate() {
                    let mut back = vk.clone();
                    for (t, ct) in c.iter().enumerate() {
                        back = back.sub(&ct.scale(&e[t][k]));
                    }
                    if !back.is_zero() {
                        return Err(Error::NotBalanced(format!("around {}", sigma)));
                    }
                }
                let mut wy = s.compose_linear(&emb, r);
                for (t, ct) in c.iter().enumerate() {
                    wy = wy.sub(&ct.derivative(t));
                }
                wy.compose_linear(&l, n)
            };
            if !weight.is_zero() {
                out.push((sigma, weight));
            }
        }
        Ok(PolyFan { ambient: n, dim: self.dim - 1, cones: out })
    }
}

/// `δ(F·T)` for a fan `T` with polynomial weights.
pub fn pp_corner_locus(f: &PPFunction, t: &PolyFan) -> Result<PolyFan> {
    t.times(f).delta()
}

/// `δ^N(F·T)/N!` with `N = dim T`.
pub fn pp_degree(f: &PPFunction, t: &WeightedFan) -> Result<Rat> {
    let mut cur = PolyFan::from_fan(t).times(f);
    for _ in 0..t.dim() {
        cur = cur.delta()?;
    }
    Ok(cur.number() / Rat::from_integer(factorial(t.dim())))
}
