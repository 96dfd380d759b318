//! Smooth projective refinements, realised as lattice polytopes.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use std::collections::BTreeSet;

use crate::arith::{det_int, rank_int, dot, gcd_all, neg_iv, primitive, scale_iv, sub_iv, IVec, Int, Rat};
use crate::lattice::{arrangement_of, Cone, LatticePolytope, WeightedFan};
use crate::{Error, Result};

/// Faces of a full-dimensional polytope, from vertex–facet incidences.
pub(crate) struct FaceLattice {
    pub vertices: Vec<IVec>,
    /// Facets `⟨u, x⟩ ≤ b` as `(u, b)` with `u` primitive.
    pub facets: Vec<(IVec, Int)>,
    /// Vertex index sets, with the facets containing each face. The normal
    /// cone of a face is spanned by the normals of its facets.
    pub faces: Vec<(Vec<usize>, Vec<usize>)>,
}

impl FaceLattice {
    fn new(vertices: Vec<IVec>, facets: Vec<(IVec, Int)>) -> FaceLattice {
        let on: Vec<BTreeSet<usize>> =
            facets.iter().map(|(u, b)| (0..vertices.len()).filter(|&i| dot(u, &vertices[i]) == *b).collect()).collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![(0..vertices.len()).collect()];
        sets.insert(frontier[0].clone());
        while let Some(s) = frontier.pop() {
            for f in &on {
                let t: Vec<usize> = s.iter().copied().filter(|i| f.contains(i)).collect();
                if !t.is_empty() && t.len() < s.len() && sets.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let faces = sets
            .into_iter()
            .map(|s| {
                let fs = (0..on.len()).filter(|&f| s.iter().all(|i| on[f].contains(i))).collect();
                (s, fs)
            })
            .collect();
        FaceLattice { vertices, facets, faces }
    }

    pub fn rays(&self, facets: &[usize]) -> Vec<IVec> {
        facets.iter().map(|&f| self.facets[f].0.clone()).collect()
    }

    /// Dimension of the normal cone.
    pub fn cone_dim(&self, facets: &[usize]) -> usize {
        rank_int(&self.rays(facets), self.vertices.first().map_or(0, |v| v.len()))
    }

    /// Translates the first vertex to the origin and divides by the gcd of
    /// all coordinates.
    fn reduce(self) -> FaceLattice {
        let t = self.vertices[0].clone();
        let mut vs: Vec<IVec> = self.vertices.iter().map(|v| sub_iv(v, &t)).collect();
        let mut fs: Vec<(IVec, Int)> = self.facets.iter().map(|(u, b)| (u.clone(), b - dot(u, &t))).collect();
        let all: Vec<Int> = vs.iter().flatten().cloned().collect();
        let g = gcd_all(&all);
        if !g.is_zero() && !g.is_one() {
            vs = vs.iter().map(|v| v.iter().map(|x| x / &g).collect()).collect();
            fs = fs.into_iter().map(|(u, b)| (u, b / &g)).collect();
        }
        FaceLattice::new(vs, fs)
    }

    fn polytope(&self) -> LatticePolytope {
        LatticePolytope::hull(self.vertices[0].len(), &self.vertices).expect("nonempty")
    }
}

pub(crate) fn face_lattice(p: &LatticePolytope) -> FaceLattice {
    let facets = p
        .inequalities()
        .iter()
        .map(|h| {
            // b + ⟨a, x⟩ ≥ 0 becomes ⟨−a/g, x⟩ ≤ b/g
            let g = gcd_all(&h[1..]);
            (neg_iv(&h[1..]).iter().map(|x| x / &g).collect(), &h[0] / &g)
        })
        .collect();
    FaceLattice::new(p.vertices().to_vec(), facets)
}

/// Every maximal cone of the normal fan is simplicial with determinant ±1.
pub fn is_unimodular(p: &LatticePolytope) -> bool {
    let n = p.ambient();
    let fl = face_lattice(p);
    fl.faces.iter().filter(|(s, _)| s.len() == 1).all(|(_, f)| f.len() == n && det_int(&fl.rays(f)).abs().is_one())
}

fn unoriented(h: IVec) -> Option<IVec> {
    let h = primitive(&h).ok()?;
    Some(if h.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative()) { neg_iv(&h) } else { h })
}

fn zonotope(n: usize, normals: &[IVec]) -> Result<LatticePolytope> {
    let mut z = LatticePolytope::origin(n);
    for h in normals {
        z = z.minkowski_sum(&LatticePolytope::hull(n, &[vec![Int::zero(); n], h.clone()])?)?;
    }
    Ok(z)
}

/// Cuts the face maximizing `v` off by a hyperplane parallel to it, which
/// subdivides the normal fan stellarly at `v`.
fn truncate(fl: &FaceLattice, v: &[Int]) -> FaceLattice {
    let vals: Vec<Int> = fl.vertices.iter().map(|x| dot(v, x)).collect();
    let h = vals.iter().max().unwrap().clone();
    let in_f: Vec<bool> = vals.iter().map(|x| *x == h).collect();
    // crossing edges w → u as (w, primitive direction, |⟨v, e⟩|)
    let mut edges = Vec::new();
    let mut min_gap: Option<Int> = None;
    for (s, _) in &fl.faces {
        if s.len() == 2 && in_f[s[0]] != in_f[s[1]] {
            let (w, u) = if in_f[s[0]] { (s[0], s[1]) } else { (s[1], s[0]) };
            let gap = &h - &vals[u];
            if min_gap.as_ref().map_or(true, |m| gap < *m) {
                min_gap = Some(gap);
            }
            let e = primitive(&sub_iv(&fl.vertices[u], &fl.vertices[w])).expect("edge");
            let slope = dot(v, &e).abs();
            edges.push((w, e, slope));
        }
    }
    // cut at depth l = lcm of the slopes, after scaling so that l stays above the next vertex
    let l = edges.iter().fold(Int::one(), |acc, (_, _, s)| acc.lcm(s));
    let c = &l / min_gap.expect("a vertex off the face") + Int::one();
    let mut pts: Vec<IVec> = (0..fl.vertices.len()).filter(|&i| !in_f[i]).map(|i| scale_iv(&c, &fl.vertices[i])).collect();
    for (w, e, slope) in &edges {
        let step = &l / slope;
        let base = scale_iv(&c, &fl.vertices[*w]);
        pts.push(base.iter().zip(e).map(|(b, x)| b + &step * x).collect());
    }
    // facets lying inside the removed face disappear
    let mut facets: Vec<(IVec, Int)> = fl
        .facets
        .iter()
        .filter(|(u, b)| (0..fl.vertices.len()).any(|i| !in_f[i] && dot(u, &fl.vertices[i]) == *b))
        .map(|(u, b)| (u.clone(), &c * b))
        .collect();
    let g = gcd_all(v);
    facets.push((v.iter().map(|x| x / &g).collect(), (&c * &h - &l) / &g));
    FaceLattice::new(pts, facets).reduce()
}

/// A nonzero lattice point `Σ λ_i u_i` with `0 ≤ λ_i < 1`.
fn parallelepiped_point(rays: &[IVec]) -> Option<IVec> {
    let n = rays.len();
    let det = det_int(rays).abs();
    let dd = det.to_u64()?;
    let mut lam = vec![0u64; n];
    loop {
        // next λ in the grid (1/det)·{0..det−1}^n
        let mut i = 0;
        while i < n {
            lam[i] += 1;
            if lam[i] < dd {
                break;
            }
            lam[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
        let x: Vec<Rat> = (0..n)
            .map(|c| rays.iter().zip(&lam).map(|(r, &l)| Rat::new(&r[c] * Int::from(l), det.clone())).sum())
            .collect();
        if x.iter().all(|y| y.is_integer()) {
            return Some(x.iter().map(|y| y.to_integer()).collect());
        }
    }
}

use num_traits::ToPrimitive;

/// A lattice polytope in `ℤ^{n+1}` whose normal fan is unimodular, refines
/// every cone of the given fans, the hyperplanes `l(a) = l(b)` for pairs of
/// the given points, the hyperplane of the last coordinate, and the
/// extension of `sigma`.
pub fn schon_polytope(fans: &[WeightedFan], points: &[IVec], sigma: Option<&WeightedFan>, ambient: usize) -> Result<LatticePolytope> {
    if ambient > 4 {
        return Err(Error::DimMismatch { expected: 4, got: ambient });
    }
    let mut normals: Vec<IVec> = Vec::new();
    for f in fans {
        if f.ambient() != ambient {
            return Err(Error::DimMismatch { expected: ambient, got: f.ambient() });
        }
        let cones: Vec<&Cone> = f.cones().iter().map(|(c, _)| c).collect();
        normals.extend(arrangement_of(&cones));
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            normals.push(sub_iv(a, b));
        }
    }
    if let Some(s) = sigma {
        if s.ambient() + 1 != ambient {
            return Err(Error::DimMismatch { expected: ambient - 1, got: s.ambient() });
        }
        let cones: Vec<&Cone> = s.cones().iter().map(|(c, _)| c).collect();
        for h in arrangement_of(&cones) {
            let mut e = h.clone();
            e.push(Int::zero());
            normals.push(e);
        }
    }
    for i in 0..ambient {
        normals.push((0..ambient).map(|j| Int::from((i == j) as i64)).collect());
    }
    let mut normals: Vec<IVec> = normals.into_iter().filter_map(unoriented).collect();
    normals.sort();
    normals.dedup();
    let mut lattice = face_lattice(&zonotope(ambient, &normals)?).reduce();
    loop {
        // make the fan simplicial, smallest cones first
        let mut bad: Option<(usize, IVec)> = None;
        for (_, f) in &lattice.faces {
            let d = lattice.cone_dim(f);
            if f.len() > d && bad.as_ref().map_or(true, |(e, _)| d < *e) {
                let rays = lattice.rays(f);
                let sum: IVec = (0..ambient).map(|j| rays.iter().map(|r| r[j].clone()).sum()).collect();
                bad = Some((d, primitive(&sum)?));
            }
        }
        if bad.is_none() {
            for (s, f) in &lattice.faces {
                let rays = lattice.rays(f);
                if s.len() == 1 && !det_int(&rays).abs().is_one() {
                    let v = parallelepiped_point(&rays).ok_or_else(|| Error::Internal("no parallelepiped point".into()))?;
                    bad = Some((ambient, v));
                    break;
                }
            }
        }
        match bad {
            Some((_, v)) => lattice = truncate(&lattice, &v),
            None => return Ok(lattice.polytope().normalized()),
        }
    }
}
