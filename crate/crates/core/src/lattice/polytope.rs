//! Lattice polytopes, stored by their vertices.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    add_iv, dot, dot_ir, factorial, neg_iv, saturated_basis, scale_iv, solve_in_span, sub_iv,
    to_rvec, IVec, Int, RVec, Rat,
};
use crate::lattice::Cone;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<IVec>,
}

fn homogenize(p: &[Int]) -> IVec {
    let mut v = Vec::with_capacity(p.len() + 1);
    v.push(Int::one());
    v.extend(p.iter().cloned());
    v
}

impl LatticePolytope {
    /// Convex hull of a nonempty set of lattice points.
    pub fn hull(ambient: usize, points: &[IVec]) -> Result<LatticePolytope> {
        if points.is_empty() {
            return Err(Error::Internal("convex hull of an empty set".into()));
        }
        for p in points {
            if p.len() != ambient {
                return Err(Error::DimMismatch { expected: ambient, got: p.len() });
            }
        }
        let mut pts: Vec<IVec> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(LatticePolytope { ambient, vertices: pts });
        }
        let gens: Vec<IVec> = pts.iter().map(|p| homogenize(p)).collect();
        let cone = Cone::from_generators(ambient + 1, &gens, &[]);
        let mut vertices: Vec<IVec> = cone.rays().iter().map(|r| r[1..].to_vec()).collect();
        vertices.sort();
        Ok(LatticePolytope { ambient, vertices })
    }

    pub fn point(p: &[Int]) -> LatticePolytope {
        LatticePolytope { ambient: p.len(), vertices: vec![p.to_vec()] }
    }

    pub fn origin(n: usize) -> LatticePolytope {
        LatticePolytope::point(&vec![Int::zero(); n])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[IVec] {
        &self.vertices
    }

    /// Cone over `{1} × P`.
    pub fn homogenized_cone(&self) -> Cone {
        let gens: Vec<IVec> = self.vertices.iter().map(|p| homogenize(p)).collect();
        Cone::from_generators(self.ambient + 1, &gens, &[])
    }

    pub fn dim(&self) -> usize {
        if self.vertices.len() == 1 {
            return 0;
        }
        let v0 = &self.vertices[0];
        let diffs: Vec<IVec> = self.vertices[1..].iter().map(|v| sub_iv(v, v0)).collect();
        crate::arith::rank_int(&diffs, self.ambient)
    }

    /// Facet inequalities `b + a·x >= 0`, as vectors `(b, a)`.
    pub fn inequalities(&self) -> Vec<IVec> {
        self.homogenized_cone().facet_normals().to_vec()
    }

    /// Equations `b + a·x = 0` of the affine span.
    pub fn equations(&self) -> Vec<IVec> {
        self.homogenized_cone().equations().to_vec()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.homogenized_cone().contains(&homogenize(x))
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        let mut h = vec![Rat::one()];
        h.extend(x.iter().cloned());
        self.homogenized_cone().contains_rat(&h)
    }

    /// All nonempty faces, including `P` itself.
    pub fn faces(&self) -> Vec<LatticePolytope> {
        if self.vertices.len() == 1 {
            return vec![self.clone()];
        }
        let mut out: Vec<LatticePolytope> = self
            .homogenized_cone()
            .faces()
            .into_iter()
            .filter(|c| c.dim() > 0)
            .map(|c| {
                let mut vertices: Vec<IVec> = c.rays().iter().map(|r| r[1..].to_vec()).collect();
                vertices.sort();
                LatticePolytope { ambient: self.ambient, vertices }
            })
            .collect();
        out.sort_by(|a, b| b.dim().cmp(&a.dim()).then(a.cmp(b)));
        out
    }

    pub fn translate(&self, v: &[Int]) -> LatticePolytope {
        LatticePolytope {
            ambient: self.ambient,
            vertices: self.vertices.iter().map(|p| add_iv(p, v)).collect(),
        }
    }

    /// `t·P` for `t >= 0`.
    pub fn dilate(&self, t: &Int) -> LatticePolytope {
        assert!(!t.is_negative());
        if t.is_zero() {
            return LatticePolytope::origin(self.ambient);
        }
        LatticePolytope {
            ambient: self.ambient,
            vertices: self.vertices.iter().map(|p| scale_iv(t, p)).collect(),
        }
    }

    /// Central reflection `-P`.
    pub fn reflect(&self) -> LatticePolytope {
        let mut vertices: Vec<IVec> = self.vertices.iter().map(|p| neg_iv(p)).collect();
        vertices.sort();
        LatticePolytope { ambient: self.ambient, vertices }
    }

    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if self.ambient != other.ambient {
            return Err(Error::DimMismatch { expected: self.ambient, got: other.ambient });
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(add_iv(a, b));
            }
        }
        LatticePolytope::hull(self.ambient, &pts)
    }

    /// Translate so that the lexicographically smallest vertex is the origin.
    pub fn normalized(&self) -> LatticePolytope {
        let v0 = self.vertices[0].clone();
        self.translate(&neg_iv(&v0))
    }

    /// `max_{a ∈ P} l(a)`.
    pub fn support_value(&self, l: &[Rat]) -> Rat {
        self.vertices.iter().map(|v| dot_ir(v, l)).max().unwrap()
    }

    /// Normal cones of the vertices: where `l ↦ l(v)` attains the maximum.
    pub fn normal_cones(&self) -> Vec<(IVec, Cone)> {
        self.vertices
            .iter()
            .map(|v| {
                let ineqs: Vec<IVec> =
                    self.vertices.iter().filter(|w| *w != v).map(|w| sub_iv(v, w)).collect();
                (v.clone(), Cone::from_inequalities(self.ambient, &ineqs, &[]))
            })
            .collect()
    }

    /// `n!·Vol(P)`; zero unless `P` is full-dimensional.
    pub fn normalized_volume(&self) -> Int {
        if self.dim() < self.ambient {
            return Int::zero();
        }
        full_dim_volume(&self.vertices, self.ambient)
    }

    /// Normalized volume of `P` inside the lattice of its own affine span.
    pub fn relative_volume(&self) -> Int {
        let (coords, d) = own_coordinates(&self.vertices, self.ambient);
        full_dim_volume(&coords, d)
    }

    /// Lattice length of a segment (zero for points).
    pub fn lattice_length(&self) -> Int {
        if self.dim() != 1 {
            return Int::zero();
        }
        self.relative_volume()
    }

    /// Number of lattice points, by enumeration over the bounding box.
    pub fn lattice_points(&self) -> Int {
        Int::from(self.enumerate_lattice_points().len())
    }

    pub fn enumerate_lattice_points(&self) -> Vec<IVec> {
        let n = self.ambient;
        let lo: IVec = (0..n).map(|i| self.vertices.iter().map(|v| v[i].clone()).min().unwrap()).collect();
        let hi: IVec = (0..n).map(|i| self.vertices.iter().map(|v| v[i].clone()).max().unwrap()).collect();
        let cone = self.homogenized_cone();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if cone.contains(&homogenize(&cur)) {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i].clone();
                i += 1;
            }
            if n == 0 {
                return out;
            }
        }
    }

    /// Lattice points in the relative interior.
    pub fn interior_lattice_points(&self) -> Int {
        let cone = self.homogenized_cone();
        let count = self
            .enumerate_lattice_points()
            .iter()
            .filter(|p| cone.relint_contains(&homogenize(p)))
            .count();
        Int::from(count)
    }
}

/// Coordinates of points in a lattice basis of their affine span, relative to
/// the first point; returns the coordinates and the dimension.
fn own_coordinates(points: &[IVec], n: usize) -> (Vec<IVec>, usize) {
    let v0 = &points[0];
    let diffs: Vec<IVec> = points.iter().map(|p| sub_iv(p, v0)).collect();
    let basis = saturated_basis(&diffs, n);
    let d = basis.len();
    let basis_r: Vec<RVec> = basis.iter().map(|b| to_rvec(b)).collect();
    let coords = diffs
        .iter()
        .map(|v| {
            let c = solve_in_span(&basis_r, &to_rvec(v)).expect("point in affine span");
            c.iter().map(|x| x.to_integer()).collect()
        })
        .collect();
    (coords, d)
}

/// Lattice-normalized volume of a full-dimensional polytope in `ℤ^d`
/// (points may include non-vertices), by pyramids over facets.
fn full_dim_volume(points: &[IVec], d: usize) -> Int {
    if d == 0 {
        return Int::one();
    }
    let gens: Vec<IVec> = points.iter().map(|p| homogenize(p)).collect();
    let cone = Cone::from_generators(d + 1, &gens, &[]);
    let verts: Vec<IVec> = cone.rays().to_vec();
    let apex = &verts[0];
    let mut total = Int::zero();
    for f in cone.facet_normals() {
        let h = dot(f, apex);
        if h.is_zero() {
            continue;
        }
        let on_facet: Vec<IVec> =
            verts.iter().filter(|v| dot(f, v).is_zero()).map(|v| v[1..].to_vec()).collect();
        let (coords, fd) = own_coordinates(&on_facet, d);
        debug_assert_eq!(fd, d - 1);
        total += h * full_dim_volume(&coords, fd);
    }
    total
}

/// Euclidean volume from the normalized one.
pub fn euclidean_volume(p: &LatticePolytope) -> Rat {
    Rat::new(p.normalized_volume(), factorial(p.ambient()))
}
