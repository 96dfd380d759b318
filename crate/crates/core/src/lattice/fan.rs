//! Pure-dimensional weighted fans.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{
    dot, integer_kernel, is_zero_vec, lattice_index, neg_iv, rank_int, saturated_basis,
    solve_in_span, to_rvec, IVec, Int, RVec, Rat,
};
use crate::lattice::Cone;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct WeightedFan {
    ambient: usize,
    dim: usize,
    cones: Vec<(Cone, Rat)>,
}

/// A codimension-one face together with the listed cones around it and the
/// lattice normal vectors pointing into each of them.
#[derive(Clone, Debug)]
pub struct Wall {
    pub face: Cone,
    pub around: Vec<(usize, IVec)>,
}

impl WeightedFan {
    /// Builds a fan without checking the face condition; zero weights are
    /// dropped and repeated cones are merged.
    pub fn from_cones(ambient: usize, dim: usize, cones: Vec<(Cone, Rat)>) -> WeightedFan {
        let mut merged: BTreeMap<Cone, Rat> = BTreeMap::new();
        for (c, w) in cones {
            debug_assert_eq!(c.dim(), dim);
            *merged.entry(c).or_insert_with(Rat::zero) += w;
        }
        let cones = merged.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        WeightedFan { ambient, dim, cones }
    }

    /// Builds a fan and checks dimensions and that cones meet in common faces.
    pub fn new(ambient: usize, dim: usize, cones: Vec<(Cone, Rat)>) -> Result<WeightedFan> {
        for (c, _) in &cones {
            if c.ambient() != ambient {
                return Err(Error::DimMismatch { expected: ambient, got: c.ambient() });
            }
            if c.dim() != dim {
                return Err(Error::NotAFan(format!("cone {} has dimension {}, expected {}", c, c.dim(), dim)));
            }
        }
        let fan = WeightedFan::from_cones(ambient, dim, cones);
        fan.check_face_condition()?;
        Ok(fan)
    }

    pub fn whole_space(n: usize) -> WeightedFan {
        WeightedFan::from_cones(n, n, vec![(Cone::whole_space(n), Rat::one())])
    }

    pub fn point(n: usize, weight: Rat) -> WeightedFan {
        WeightedFan::from_cones(n, 0, vec![(Cone::origin(n), weight)])
    }

    pub fn empty(n: usize, dim: usize) -> WeightedFan {
        WeightedFan { ambient: n, dim, cones: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim
    }

    pub fn cones(&self) -> &[(Cone, Rat)] {
        &self.cones
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Weight of a zero-dimensional fan (zero if empty).
    pub fn degree(&self) -> Rat {
        self.cones.iter().filter(|(c, _)| c.dim() == 0).map(|(_, w)| w.clone()).sum()
    }

    pub fn scaled(&self, s: &Rat) -> WeightedFan {
        WeightedFan::from_cones(
            self.ambient,
            self.dim,
            self.cones.iter().map(|(c, w)| (c.clone(), w * s)).collect(),
        )
    }

    pub fn check_face_condition(&self) -> Result<()> {
        for i in 0..self.cones.len() {
            for j in (i + 1)..self.cones.len() {
                let (a, b) = (&self.cones[i].0, &self.cones[j].0);
                let c = a.intersect(b);
                if !a.has_face(&c) || !b.has_face(&c) {
                    return Err(Error::NotAFan(format!("{} and {} do not meet in a common face", a, b)));
                }
            }
        }
        Ok(())
    }

    /// Codimension-one faces of the listed cones with the adjacent cones.
    pub fn walls(&self) -> Vec<Wall> {
        let mut by_face: BTreeMap<Cone, Vec<(usize, IVec)>> = BTreeMap::new();
        for (i, (tau, _)) in self.cones.iter().enumerate() {
            for sigma in tau.facets() {
                let u = lattice_normal(&sigma, tau);
                by_face.entry(sigma).or_default().push((i, u));
            }
        }
        by_face.into_iter().map(|(face, around)| Wall { face, around }).collect()
    }

    /// Weighted sum of lattice normals around a wall.
    pub fn wall_defect(&self, wall: &Wall) -> Vec<Rat> {
        let mut s = vec![Rat::zero(); self.ambient];
        for (i, u) in &wall.around {
            let w = &self.cones[*i].1;
            for (x, y) in s.iter_mut().zip(u) {
                *x += w * Rat::from_integer(y.clone());
            }
        }
        s
    }

    /// Balancing at every wall. The face condition is checked first.
    pub fn is_balanced(&self) -> Result<bool> {
        self.check_face_condition()?;
        Ok(self.is_balanced_unchecked())
    }

    pub fn is_balanced_unchecked(&self) -> bool {
        self.walls().iter().all(|wall| {
            let s = self.wall_defect(wall);
            in_span(&wall.face, &s)
        })
    }

    /// Formal sum of two fans of the same dimension, on a common refinement.
    pub fn add(&self, other: &WeightedFan) -> WeightedFan {
        assert_eq!(self.dim, other.dim);
        let mut all = self.cones.clone();
        all.extend(other.cones.iter().cloned());
        common_refinement(self.ambient, self.dim, all)
    }

    pub fn sub(&self, other: &WeightedFan) -> WeightedFan {
        self.add(&other.scaled(&-Rat::one()))
    }

    /// Equality as weighted sets: the difference vanishes on a common refinement.
    pub fn same_cycle(&self, other: &WeightedFan) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        if self.is_empty() && other.is_empty() {
            return true;
        }
        if self.dim != other.dim {
            return false;
        }
        self.sub(other).is_empty()
    }

    /// Union of the supports, as a list of cones.
    pub fn support_contains(&self, x: &[Int]) -> bool {
        self.cones.iter().any(|(c, _)| c.contains(x))
    }

    /// Push-forward along a surjective lattice map given by its rows.
    pub fn pushforward(&self, proj: &[IVec]) -> Result<WeightedFan> {
        let m = proj.len();
        let n = self.ambient;
        if proj.iter().any(|r| r.len() != n) {
            return Err(Error::DimMismatch { expected: n, got: proj.first().map_or(0, |r| r.len()) });
        }
        let columns: Vec<IVec> = (0..n).map(|j| proj.iter().map(|r| r[j].clone()).collect()).collect();
        if rank_int(&columns, m) != m || !lattice_index(&columns, m).is_one() {
            return Err(Error::NotSurjective);
        }
        let apply = |v: &IVec| -> IVec { proj.iter().map(|row| dot(row, v)).collect() };
        let d = self.dim;
        let mut images = Vec::new();
        for (sigma, w) in &self.cones {
            let (rays, lin) = sigma.map_generators(proj);
            let image = Cone::from_generators(m, &rays, &lin);
            if image.dim() != d {
                continue;
            }
            let basis = saturated_basis(&sigma.span_generators(), n);
            let mapped: Vec<IVec> = basis.iter().map(apply).collect();
            let index = lattice_index(&mapped, m);
            images.push((image, w * Rat::from_integer(index)));
        }
        Ok(common_refinement(m, d, images))
    }

    /// Image under an injective linear map `x ↦ A x` (rows of `A` given).
    pub fn map_injective(&self, a: &[IVec]) -> WeightedFan {
        let m = a.len();
        let cones = self
            .cones
            .iter()
            .map(|(c, w)| {
                let (rays, lin) = c.map_generators(a);
                (Cone::from_generators(m, &rays, &lin), w.clone())
            })
            .collect();
        WeightedFan::from_cones(m, self.dim, cones)
    }

    /// Lexicographically sorted cones, for deterministic output.
    pub fn sorted(&self) -> WeightedFan {
        let mut cones = self.cones.clone();
        cones.sort();
        WeightedFan { ambient: self.ambient, dim: self.dim, cones }
    }

    pub fn all_weights_nonnegative(&self) -> bool {
        self.cones.iter().all(|(_, w)| !w.is_negative())
    }

    /// Connectivity of the support with the origin removed: maximal cones are
    /// adjacent when they share a face other than `{0}`.
    pub fn is_connected_off_origin(&self) -> bool {
        let k = self.cones.len();
        if k <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let c = self.cones[i].0.intersect(&self.cones[j].0);
                if c.dim() > 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let r = find(&mut parent, 0);
        (0..k).all(|i| find(&mut parent, i) == r)
    }
}

fn in_span(face: &Cone, v: &[Rat]) -> bool {
    face.equations().iter().all(|e| {
        let s: Rat = e.iter().zip(v).map(|(a, b)| Rat::from_integer(a.clone()) * b).sum();
        s.is_zero()
    })
}

/// Solves `f·x = 1` over the integers for a primitive `f`.
fn unit_preimage(f: &[Int]) -> IVec {
    let mut g = Int::zero();
    let mut x = vec![Int::zero(); f.len()];
    for (i, fi) in f.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = fi.clone();
            x[i] = Int::one();
            continue;
        }
        let e = g.extended_gcd(fi);
        for xj in x.iter_mut() {
            *xj *= &e.x;
        }
        x[i] = e.y;
        g = e.gcd;
    }
    if g.is_negative() {
        x = neg_iv(&x);
    }
    x
}

/// Primitive generator of `(τ + span σ)/span σ`, lifted into `span τ` and
/// pointing into `τ`. Requires `σ` to be a facet of `τ`.
pub fn lattice_normal(sigma: &Cone, tau: &Cone) -> IVec {
    let n = tau.ambient();
    let basis = saturated_basis(&tau.span_generators(), n);
    let basis_r: Vec<RVec> = basis.iter().map(|b| to_rvec(b)).collect();
    let coords = |v: &IVec| -> IVec {
        let c = solve_in_span(&basis_r, &to_rvec(v)).expect("vector in span");
        c.iter().map(|x| x.to_integer()).collect()
    };
    let srows: Vec<IVec> = sigma.span_generators().iter().map(coords).collect();
    let d = basis.len();
    let f = if srows.is_empty() {
        debug_assert_eq!(d, 1);
        vec![Int::one()]
    } else {
        let ker = integer_kernel(&srows, d);
        debug_assert_eq!(ker.len(), 1);
        ker[0].clone()
    };
    let x = unit_preimage(&f);
    let mut u = vec![Int::zero(); n];
    for (xi, b) in x.iter().zip(&basis) {
        for (uj, bj) in u.iter_mut().zip(b) {
            *uj += xi * bj;
        }
    }
    let p = tau.relint_point();
    let side = dot(&f, &coords(&p));
    if side.is_negative() {
        u = neg_iv(&u);
    }
    debug_assert!(!is_zero_vec(&u));
    u
}

/// Splits cells by every hyperplane `h·x = 0` that cuts through them.
pub fn split_cells(cells: Vec<Cone>, walls: &[IVec]) -> Vec<Cone> {
    let mut cells = cells;
    for h in walls {
        let mut next = Vec::with_capacity(cells.len());
        for c in cells {
            if c.is_split_by(h) {
                next.push(c.halfspace_cut(h, false));
                next.push(c.halfspace_cut(h, true));
            } else {
                next.push(c);
            }
        }
        cells = next;
    }
    cells
}

/// Hyperplanes through all facets and spans of the given cones.
pub fn arrangement_of(cones: &[&Cone]) -> Vec<IVec> {
    let mut hs: Vec<IVec> = Vec::new();
    for c in cones {
        for f in c.facet_normals().iter().chain(c.equations().iter()) {
            let mut h = f.clone();
            // hyperplanes are unoriented
            if h.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative()) {
                h = neg_iv(&h);
            }
            hs.push(h);
        }
    }
    hs.sort();
    hs.dedup();
    hs
}

/// Refines overlapping weighted cones of equal dimension into a fan whose
/// weights are the sums over the original cones containing each cell.
pub fn common_refinement(ambient: usize, dim: usize, cones: Vec<(Cone, Rat)>) -> WeightedFan {
    if cones.len() <= 1 {
        return WeightedFan::from_cones(ambient, dim, cones);
    }
    let refs: Vec<&Cone> = cones.iter().map(|(c, _)| c).collect();
    let hs = arrangement_of(&refs);
    let mut out = Vec::new();
    for (c, w) in &cones {
        for cell in split_cells(vec![c.clone()], &hs) {
            out.push((cell, w.clone()));
        }
    }
    WeightedFan::from_cones(ambient, dim, out)
}
