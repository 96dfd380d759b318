//! Rational polyhedral cones, kept in a canonical V/H pair.
//!
//! A cone is `cone(rays) + span(lineality)`. The canonical form stores the
//! lineality space as an integer RREF basis and the rays as primitive vectors
//! orthogonal to it, sorted, so that equal cones compare equal. The dual
//! description (facet normals and span equations) is computed eagerly with
//! the same double-description routine.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    dot, dot_ir, is_zero_vec, primitive, primitive_of_rat, rank_int, rref, scale_iv, solve_in_span,
    sub_iv, to_rvec, IVec, Int, RVec, Rat,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cone {
    ambient: usize,
    rays: Vec<IVec>,
    lineality: Vec<IVec>,
    #[serde(skip)]
    facets: Vec<IVec>,
    #[serde(skip)]
    equations: Vec<IVec>,
}

/// Double description: generators of `{x : a·x >= 0 (a in ineqs), e·x = 0 (e in eqs)}`.
/// Returns `(rays, lineality basis)`; rays are extreme modulo lineality.
pub(crate) fn double_description(n: usize, ineqs: &[IVec], eqs: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let mut constraints: Vec<IVec> = Vec::new();
    for e in eqs {
        if !is_zero_vec(e) {
            constraints.push(e.clone());
            constraints.push(e.iter().map(|x| -x).collect());
        }
    }
    for a in ineqs {
        if !is_zero_vec(a) {
            constraints.push(a.clone());
        }
    }
    let mut lin: Vec<IVec> = (0..n)
        .map(|j| (0..n).map(|i| Int::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<IVec> = Vec::new();
    let mut processed: Vec<IVec> = Vec::new();

    for a in constraints {
        if let Some(pos) = lin.iter().position(|l| !dot(&a, l).is_zero()) {
            let mut l0 = lin.remove(pos);
            let mut c = dot(&a, &l0);
            if c.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                c = -c;
            }
            lin = lin
                .iter()
                .map(|l| {
                    let v = sub_iv(&scale_iv(&c, l), &scale_iv(&dot(&a, l), &l0));
                    primitive(&v).unwrap_or(v)
                })
                .filter(|v| !is_zero_vec(v))
                .collect();
            rays = rays
                .iter()
                .map(|r| {
                    let v = sub_iv(&scale_iv(&c, r), &scale_iv(&dot(&a, r), &l0));
                    primitive(&v).unwrap_or(v)
                })
                .filter(|v| !is_zero_vec(v))
                .collect();
            rays.push(primitive(&l0).unwrap_or(l0));
            processed.push(a);
            dedup_rays(&mut rays);
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(&a, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            processed.push(a);
            continue;
        }
        let zero_sets: Vec<BTreeSet<usize>> = rays
            .iter()
            .map(|r| {
                processed
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot(p, r).is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut new_rays: Vec<IVec> = (0..rays.len())
            .filter(|&i| !vals[i].is_negative())
            .map(|i| rays[i].clone())
            .collect();
        for &p in &pos {
            for &q in &neg {
                let common: BTreeSet<usize> =
                    zero_sets[p].intersection(&zero_sets[q]).cloned().collect();
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.is_subset(&zero_sets[r]));
                if adjacent {
                    let v = sub_iv(&scale_iv(&vals[p], &rays[q]), &scale_iv(&vals[q], &rays[p]));
                    if !is_zero_vec(&v) {
                        new_rays.push(primitive(&v).unwrap());
                    }
                }
            }
        }
        rays = new_rays;
        dedup_rays(&mut rays);
        processed.push(a);
    }
    (rays, lin)
}

fn dedup_rays(rays: &mut Vec<IVec>) {
    let mut seen = HashSet::new();
    rays.retain(|r| seen.insert(r.clone()));
}

/// Integer RREF basis of a span.
fn canonical_span(vectors: &[IVec], n: usize) -> Vec<IVec> {
    let rows: Vec<RVec> = vectors.iter().map(|v| to_rvec(v)).collect();
    let (m, _) = rref(&rows, n);
    m.iter().map(|r| primitive_of_rat(r)).collect()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`, as a
/// primitive integer vector (zero if `v` lies in the span).
fn project_out(v: &[Int], basis: &[IVec]) -> IVec {
    if basis.is_empty() {
        return primitive(v).unwrap_or_else(|_| v.to_vec());
    }
    let k = basis.len();
    // Gram system (B B^T) c = B v
    let gram: Vec<RVec> = (0..k)
        .map(|i| (0..k).map(|j| Rat::from_integer(dot(&basis[i], &basis[j]))).collect())
        .collect();
    let rhs: RVec = basis.iter().map(|b| Rat::from_integer(dot(b, v))).collect();
    // solve via solve_in_span on columns of gram
    let cols: Vec<RVec> = (0..k).map(|j| (0..k).map(|i| gram[i][j].clone()).collect()).collect();
    let c = solve_in_span(&cols, &rhs).expect("Gram matrix is invertible");
    let mut w: RVec = to_rvec(v);
    for (ci, b) in c.iter().zip(basis) {
        for (x, y) in w.iter_mut().zip(b) {
            *x -= ci * Rat::from_integer(y.clone());
        }
    }
    primitive_of_rat(&w)
}

fn canonical_generators(rays: &[IVec], lin: &[IVec], n: usize) -> (Vec<IVec>, Vec<IVec>) {
    let lineality = canonical_span(lin, n);
    let mut out: Vec<IVec> = rays
        .iter()
        .map(|r| project_out(r, &lineality))
        .filter(|r| !is_zero_vec(r))
        .collect();
    out.sort();
    out.dedup();
    (out, lineality)
}

impl Cone {
    /// `cone(rays) + span(lineality)`; redundant generators are removed.
    pub fn from_generators(ambient: usize, rays: &[IVec], lineality: &[IVec]) -> Cone {
        // dual cone: y·r >= 0, y·l = 0
        let (drays, dlin) = double_description(ambient, rays, lineality);
        // primal again from the dual to drop redundant rays
        let (prays, plin) = double_description(ambient, &drays, &dlin);
        Cone::assemble(ambient, &prays, &plin, &drays, &dlin)
    }

    /// `{x : a·x >= 0, e·x = 0}`.
    pub fn from_inequalities(ambient: usize, ineqs: &[IVec], eqs: &[IVec]) -> Cone {
        let (prays, plin) = double_description(ambient, ineqs, eqs);
        let (drays, dlin) = double_description(ambient, &prays, &plin);
        Cone::assemble(ambient, &prays, &plin, &drays, &dlin)
    }

    fn assemble(n: usize, prays: &[IVec], plin: &[IVec], drays: &[IVec], dlin: &[IVec]) -> Cone {
        let (rays, lineality) = canonical_generators(prays, plin, n);
        let (facets, equations) = canonical_generators(drays, dlin, n);
        Cone { ambient: n, rays, lineality, facets, equations }
    }

    pub fn whole_space(n: usize) -> Cone {
        Cone::from_inequalities(n, &[], &[])
    }

    pub fn origin(n: usize) -> Cone {
        let eqs: Vec<IVec> = (0..n)
            .map(|j| (0..n).map(|i| Int::from((i == j) as i64)).collect())
            .collect();
        Cone::from_inequalities(n, &[], &eqs)
    }

    pub fn ray(v: &[Int]) -> Cone {
        Cone::from_generators(v.len(), &[v.to_vec()], &[])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IVec] {
        &self.lineality
    }

    /// Inward facet normals: `y·x >= 0` on the cone.
    pub fn facet_normals(&self) -> &[IVec] {
        &self.facets
    }

    /// Equations of the linear span.
    pub fn equations(&self) -> &[IVec] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    /// Generators of the linear span: rays plus lineality basis.
    pub fn span_generators(&self) -> Vec<IVec> {
        self.rays.iter().chain(self.lineality.iter()).cloned().collect()
    }

    /// All vectors that generate the cone as a monoid-like set: rays and
    /// both signs of each lineality vector.
    pub fn all_generators(&self) -> Vec<IVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    /// A point of the relative interior (sum of rays; zero for linear spaces).
    pub fn relint_point(&self) -> IVec {
        let mut p = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| dot_ir(e, x).is_zero())
            && self.facets.iter().all(|f| !dot_ir(f, x).is_negative())
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| !dot(f, x).is_negative())
    }

    pub fn relint_contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero())
            && self.facets.iter().all(|f| dot(f, x).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.all_generators().iter().all(|g| self.contains(g))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        let ineqs: Vec<IVec> = self.facets.iter().chain(other.facets.iter()).cloned().collect();
        let eqs: Vec<IVec> = self.equations.iter().chain(other.equations.iter()).cloned().collect();
        Cone::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// Intersection with `{h·x >= 0}` (or `<= 0` when `negative`).
    pub fn halfspace_cut(&self, h: &[Int], negative: bool) -> Cone {
        let hh: IVec = if negative { h.iter().map(|x| -x).collect() } else { h.to_vec() };
        let mut ineqs = self.facets.clone();
        ineqs.push(hh);
        Cone::from_inequalities(self.ambient, &ineqs, &self.equations)
    }

    /// Does the hyperplane `h·x = 0` cut through the relative interior?
    pub fn is_split_by(&self, h: &[Int]) -> bool {
        let mut pos = false;
        let mut neg = false;
        for g in self.all_generators() {
            let v = dot(h, &g);
            if v.is_positive() {
                pos = true;
            } else if v.is_negative() {
                neg = true;
            }
        }
        pos && neg
    }

    /// Faces of codimension one (within the cone's span).
    pub fn facets(&self) -> Vec<Cone> {
        self.facets
            .iter()
            .map(|y| {
                let rays: Vec<IVec> =
                    self.rays.iter().filter(|r| dot(y, r).is_zero()).cloned().collect();
                Cone::from_generators(self.ambient, &rays, &self.lineality)
            })
            .collect()
    }

    /// All nonempty faces, including the cone itself.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: HashSet<Cone> = HashSet::new();
        let mut stack = vec![self.clone()];
        let mut out = Vec::new();
        while let Some(c) = stack.pop() {
            if !seen.insert(c.clone()) {
                continue;
            }
            for f in c.facets() {
                stack.push(f);
            }
            out.push(c);
        }
        out.sort_by_key(|c| std::cmp::Reverse(c.dim()));
        out
    }

    /// Is `face` a face of this cone (assuming it is contained in it)?
    pub fn has_face(&self, face: &Cone) -> bool {
        if !self.contains_cone(face) {
            return false;
        }
        // a face is cut out by the facets vanishing on its relative interior
        let p = face.relint_point_with_lineality();
        let tight: Vec<IVec> = self.facets.iter().filter(|y| dot(y, &p).is_zero()).cloned().collect();
        let mut eqs = self.equations.clone();
        eqs.extend(tight);
        let f = Cone::from_inequalities(self.ambient, &self.facets, &eqs);
        &f == face
    }

    fn relint_point_with_lineality(&self) -> IVec {
        self.relint_point()
    }

    /// The same cone viewed in a bigger ambient space via a linear map given
    /// by its matrix columns images: `x ↦ A x` applied to generators.
    pub fn map_generators(&self, matrix: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
        let apply = |v: &IVec| -> IVec { matrix.iter().map(|row| dot(row, v)).collect() };
        (self.rays.iter().map(apply).collect(), self.lineality.iter().map(apply).collect())
    }

    pub fn rank_of_generators(&self) -> usize {
        rank_int(&self.span_generators(), self.ambient)
    }

    /// Sign of `h` on the relative interior, assuming it is constant there.
    pub fn sign_on(&self, h: &[Int]) -> i32 {
        let p = self.relint_point();
        let v = dot(h, &p);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }
}

impl std::fmt::Display for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: &IVec| {
            format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        };
        write!(f, "cone[")?;
        write!(f, "{}", self.rays.iter().map(show).collect::<Vec<_>>().join(" "))?;
        if !self.lineality.is_empty() {
            write!(f, " | lin {}", self.lineality.iter().map(show).collect::<Vec<_>>().join(" "))?;
        }
        write!(f, "]")
    }
}
