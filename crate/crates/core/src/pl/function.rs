use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::arith::{
    dot_ir, dot_rr, is_zero_vec, neg_iv, primitive, primitive_of_rat, sub_rv, to_rvec, IVec, RVec,
    Rat,
};
use crate::lattice::fan::split_cells;
use crate::lattice::{Cone, LatticePolytope, WeightedFan};
use crate::{Error, Result};

/// Rank oracle on indices `0..points.len()` used by threshold functions.
pub type RankFn = Arc<dyn Fn(&[usize]) -> usize + Send + Sync>;

/// A continuous, positively homogeneous piecewise linear function on `ℝ^n`.
#[derive(Clone)]
pub struct PLFunction {
    ambient: usize,
    node: Arc<Node>,
}

enum Node {
    Linear(RVec),
    /// `max_i c_i(x)` with the cone where each form attains the maximum.
    Max(Vec<(RVec, Cone)>),
    Explicit(Vec<(Cone, RVec)>),
    /// The `k`-th value picked by the matroid greedy algorithm on `l(a)`.
    Threshold { points: Vec<IVec>, rank: RankFn, k: usize, walls: Vec<IVec> },
    Sum(Vec<PLFunction>),
    Scale(Rat, PLFunction),
    /// `x ↦ f(B x)`, with the rows of `B`.
    Pullback(PLFunction, Vec<IVec>),
}

/// A domain structure on which a function is linear.
enum Structure {
    Cones(Vec<Cone>),
    Walls(Vec<IVec>),
}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &*self.node {
            Node::Linear(_) => "linear",
            Node::Max(_) => "max",
            Node::Explicit(_) => "explicit",
            Node::Threshold { .. } => "threshold",
            Node::Sum(_) => "sum",
            Node::Scale(..) => "scale",
            Node::Pullback(..) => "pullback",
        };
        write!(f, "PLFunction({}, ambient {})", kind, self.ambient)
    }
}

fn greedy_pick(points: &[IVec], rank: &RankFn, k: usize, x: &[Rat]) -> Option<usize> {
    let mut order: Vec<(Rat, usize)> = points.iter().enumerate().map(|(i, a)| (dot_ir(a, x), i)).collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut chosen: Vec<usize> = Vec::new();
    let mut r = 0;
    for (_, i) in order {
        chosen.push(i);
        let nr = rank(&chosen);
        if nr > r {
            r = nr;
            if r == k {
                return Some(i);
            }
        } else {
            chosen.pop();
        }
    }
    None
}

impl PLFunction {
    fn make(ambient: usize, node: Node) -> PLFunction {
        PLFunction { ambient, node: Arc::new(node) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn linear(c: RVec) -> PLFunction {
        PLFunction::make(c.len(), Node::Linear(c))
    }

    pub fn zero(n: usize) -> PLFunction {
        PLFunction::linear(vec![Rat::zero(); n])
    }

    /// `l ↦ max_{a ∈ P} l(a)`, on the normal fan of `P`.
    pub fn support_function(p: &LatticePolytope) -> PLFunction {
        if p.vertices().len() == 1 {
            return PLFunction::linear(to_rvec(&p.vertices()[0]));
        }
        let parts = p.normal_cones().into_iter().map(|(v, c)| (to_rvec(&v), c)).collect();
        PLFunction::make(p.ambient(), Node::Max(parts))
    }

    /// Maximum of finitely many linear forms.
    pub fn max_of(n: usize, forms: &[RVec]) -> PLFunction {
        let mut forms: Vec<RVec> = forms.to_vec();
        forms.sort();
        forms.dedup();
        if forms.len() == 1 {
            return PLFunction::linear(forms.pop().unwrap());
        }
        let parts: Vec<(RVec, Cone)> = forms
            .iter()
            .map(|c| {
                let ineqs: Vec<IVec> = forms
                    .iter()
                    .filter(|d| *d != c)
                    .map(|d| primitive_of_rat(&sub_rv(c, d)))
                    .collect();
                (c.clone(), Cone::from_inequalities(n, &ineqs, &[]))
            })
            .filter(|(_, cone)| cone.dim() == n)
            .collect();
        PLFunction::make(n, Node::Max(parts))
    }

    /// A function given on a complete fan by one covector per maximal cone.
    pub fn explicit(n: usize, cones: Vec<Cone>, covectors: Vec<RVec>) -> Result<PLFunction> {
        if cones.len() != covectors.len() {
            return Err(Error::DimMismatch { expected: cones.len(), got: covectors.len() });
        }
        for (c, l) in cones.iter().zip(&covectors) {
            if c.ambient() != n || l.len() != n {
                return Err(Error::DimMismatch { expected: n, got: l.len() });
            }
            if c.dim() != n {
                return Err(Error::NotAFan(format!("domain cone {} is not full-dimensional", c)));
            }
        }
        let fan = WeightedFan::new(n, n, cones.iter().map(|c| (c.clone(), Rat::one())).collect())?;
        if fan.cones().len() != cones.len() {
            return Err(Error::NotAFan("repeated domain cone".into()));
        }
        for wall in fan.walls() {
            if wall.around.len() != 2 {
                return Err(Error::NotAFan(format!("domain fan is not complete near {}", wall.face)));
            }
        }
        if cones.is_empty() && n > 0 {
            return Err(Error::NotAFan("empty domain fan".into()));
        }
        for i in 0..cones.len() {
            for j in (i + 1)..cones.len() {
                let common = cones[i].intersect(&cones[j]);
                let diff = sub_rv(&covectors[i], &covectors[j]);
                if common.span_generators().iter().any(|g| !dot_ir(g, &diff).is_zero()) {
                    return Err(Error::NotContinuous(format!(
                        "covectors of {} and {} disagree on their common face",
                        cones[i], cones[j]
                    )));
                }
            }
        }
        Ok(PLFunction::make(n, Node::Explicit(cones.into_iter().zip(covectors).collect())))
    }

    /// The greedy threshold `l ↦ max{m : rank{a : l(a) >= m} >= k}`.
    pub fn threshold(n: usize, points: Vec<IVec>, rank: RankFn, k: usize) -> PLFunction {
        let mut walls: Vec<IVec> = Vec::new();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let d: IVec = points[i].iter().zip(&points[j]).map(|(a, b)| a - b).collect();
                if let Ok(mut p) = primitive(&d) {
                    if p.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative()) {
                        p = neg_iv(&p);
                    }
                    walls.push(p);
                }
            }
        }
        walls.sort();
        walls.dedup();
        PLFunction::make(n, Node::Threshold { points, rank, k, walls })
    }

    pub fn add(&self, other: &PLFunction) -> PLFunction {
        assert_eq!(self.ambient, other.ambient);
        PLFunction::make(self.ambient, Node::Sum(vec![self.clone(), other.clone()]))
    }

    pub fn sum(n: usize, fs: &[PLFunction]) -> PLFunction {
        if fs.is_empty() {
            return PLFunction::zero(n);
        }
        PLFunction::make(n, Node::Sum(fs.to_vec()))
    }

    pub fn scale(&self, s: Rat) -> PLFunction {
        PLFunction::make(self.ambient, Node::Scale(s, self.clone()))
    }

    pub fn neg(&self) -> PLFunction {
        self.scale(-Rat::one())
    }

    pub fn sub(&self, other: &PLFunction) -> PLFunction {
        self.add(&other.neg())
    }

    /// `x ↦ self(B x)` for an integer matrix `B` with `self.ambient()` rows.
    pub fn pullback(&self, rows: &[IVec]) -> PLFunction {
        assert_eq!(rows.len(), self.ambient);
        let n = rows.first().map_or(0, |r| r.len());
        PLFunction::make(n, Node::Pullback(self.clone(), rows.to_vec()))
    }

    pub fn value(&self, x: &[Rat]) -> Rat {
        match &*self.node {
            Node::Linear(c) => dot_rr(c, x),
            Node::Max(parts) => parts.iter().map(|(c, _)| dot_rr(c, x)).max().unwrap(),
            Node::Explicit(parts) => {
                for (cone, c) in parts {
                    if cone.contains_rat(x) {
                        return dot_rr(c, x);
                    }
                }
                unreachable!("explicit domain fan is complete")
            }
            Node::Threshold { points, rank, k, .. } => {
                let i = greedy_pick(points, rank, *k, x).expect("rank at least k");
                dot_ir(&points[i], x)
            }
            Node::Sum(fs) => fs.iter().map(|f| f.value(x)).sum(),
            Node::Scale(s, f) => s * f.value(x),
            Node::Pullback(f, rows) => f.value(&apply_rows(rows, x)),
        }
    }

    /// Gradient at a point where the function is linear nearby, or more
    /// generally a covector agreeing with the function on the cell of `x`.
    pub fn gradient(&self, x: &[Rat]) -> RVec {
        match &*self.node {
            Node::Linear(c) => c.clone(),
            Node::Max(parts) => {
                parts.iter().map(|(c, _)| (dot_rr(c, x), c)).max_by(|a, b| a.0.cmp(&b.0)).unwrap().1.clone()
            }
            Node::Explicit(parts) => {
                for (cone, c) in parts {
                    if cone.contains_rat(x) {
                        return c.clone();
                    }
                }
                unreachable!("explicit domain fan is complete")
            }
            Node::Threshold { points, rank, k, .. } => {
                let i = greedy_pick(points, rank, *k, x).expect("rank at least k");
                to_rvec(&points[i])
            }
            Node::Sum(fs) => {
                let mut g = vec![Rat::zero(); self.ambient];
                for f in fs {
                    for (a, b) in g.iter_mut().zip(f.gradient(x)) {
                        *a += b;
                    }
                }
                g
            }
            Node::Scale(s, f) => f.gradient(x).into_iter().map(|v| s * v).collect(),
            Node::Pullback(f, rows) => {
                let g = f.gradient(&apply_rows(rows, x));
                (0..self.ambient)
                    .map(|j| rows.iter().zip(&g).map(|(r, gi)| Rat::from_integer(r[j].clone()) * gi).sum())
                    .collect()
            }
        }
    }

    fn structures(&self) -> Vec<Structure> {
        match &*self.node {
            Node::Linear(_) => vec![],
            Node::Max(parts) => vec![Structure::Cones(parts.iter().map(|(_, c)| c.clone()).collect())],
            Node::Explicit(parts) => vec![Structure::Cones(parts.iter().map(|(c, _)| c.clone()).collect())],
            Node::Threshold { walls, .. } => vec![Structure::Walls(walls.clone())],
            Node::Sum(fs) => fs.iter().flat_map(|f| f.structures()).collect(),
            Node::Scale(_, f) => f.structures(),
            Node::Pullback(f, rows) => {
                let n = self.ambient;
                let pull = |y: &IVec| -> IVec {
                    (0..n).map(|j| rows.iter().zip(y).map(|(r, yi)| &r[j] * yi).sum()).collect()
                };
                f.structures()
                    .into_iter()
                    .map(|s| match s {
                        Structure::Cones(cs) => {
                            let mut out: Vec<Cone> = cs
                                .iter()
                                .map(|c| {
                                    let ineqs: Vec<IVec> = c.facet_normals().iter().map(pull).collect();
                                    let eqs: Vec<IVec> = c.equations().iter().map(pull).collect();
                                    Cone::from_inequalities(n, &ineqs, &eqs)
                                })
                                .filter(|c| c.dim() == n)
                                .collect();
                            out.sort();
                            out.dedup();
                            Structure::Cones(out)
                        }
                        Structure::Walls(ws) => {
                            Structure::Walls(ws.iter().map(pull).filter(|w| !is_zero_vec(w)).collect())
                        }
                    })
                    .collect()
            }
        }
    }

    /// Subdivides a cone into pieces on which the function is linear. The
    /// subdivision is induced by a global fan, so pieces of neighbouring
    /// cones match along common faces.
    pub fn refine(&self, cell: &Cone) -> Vec<Cone> {
        let mut cells = vec![cell.clone()];
        for s in self.structures() {
            cells = match s {
                Structure::Walls(ws) => split_cells(cells, &ws),
                Structure::Cones(cs) => {
                    let mut out = Vec::new();
                    for c in &cells {
                        for d in &cs {
                            let piece = c.intersect(d);
                            if piece.dim() == c.dim() {
                                out.push(piece);
                            }
                        }
                    }
                    out.sort();
                    out.dedup();
                    out
                }
            };
        }
        cells
    }

    /// Linearity pieces of a cone with the covector on each.
    pub fn pieces(&self, cell: &Cone) -> Vec<(Cone, RVec)> {
        self.refine(cell)
            .into_iter()
            .map(|c| {
                let g = self.gradient(&to_rvec(&c.relint_point()));
                (c, g)
            })
            .collect()
    }

    /// The function written on an explicit complete fan.
    pub fn to_explicit(&self) -> (Vec<Cone>, Vec<RVec>) {
        let pieces = self.pieces(&Cone::whole_space(self.ambient));
        pieces.into_iter().unzip()
    }

    /// Does the function agree with `other` on every cone of `fan`?
    pub fn agrees_on(&self, other: &PLFunction, fan: &WeightedFan) -> bool {
        let diff = self.sub(other);
        fan.cones().iter().all(|(c, _)| {
            diff.pieces(c).iter().all(|(piece, g)| {
                piece.span_generators().iter().all(|v| dot_ir(v, g).is_zero())
            })
        })
    }
}

fn apply_rows(rows: &[IVec], x: &[Rat]) -> RVec {
    rows.iter().map(|r| dot_ir(r, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ivec, rat};

    fn rv(v: &[i64]) -> RVec {
        v.iter().map(|x| rat(*x, 1)).collect()
    }

    #[test]
    fn support_function_values() {
        let seg = LatticePolytope::hull(1, &[ivec(&[0]), ivec(&[1])]).unwrap();
        let m = PLFunction::support_function(&seg);
        assert_eq!(m.value(&rv(&[3])), rat(3, 1));
        assert_eq!(m.value(&rv(&[-2])), rat(0, 1));
        let pt = LatticePolytope::point(&ivec(&[2, -1]));
        let l = PLFunction::support_function(&pt);
        assert_eq!(l.value(&rv(&[1, 1])), rat(1, 1));
    }

    #[test]
    fn explicit_continuity() {
        let up = Cone::whole_space(1).halfspace_cut(&ivec(&[1]), false);
        let down = Cone::whole_space(1).halfspace_cut(&ivec(&[1]), true);
        assert!(PLFunction::explicit(1, vec![up.clone(), down.clone()], vec![rv(&[1]), rv(&[0])]).is_ok());
        let r = PLFunction::explicit(1, vec![up], vec![rv(&[1])]);
        assert!(matches!(r, Err(Error::NotAFan(_))));
        let a = Cone::from_generators(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[]);
        let b = Cone::from_generators(2, &[ivec(&[0, 1]), ivec(&[-1, 0])], &[]);
        let c = Cone::from_generators(2, &[ivec(&[-1, 0]), ivec(&[0, -1])], &[]);
        let d = Cone::from_generators(2, &[ivec(&[0, -1]), ivec(&[1, 0])], &[]);
        let bad = PLFunction::explicit(2, vec![a, b, c, d], vec![rv(&[1, 0]), rv(&[0, 0]), rv(&[0, 0]), rv(&[0, 0])]);
        assert!(matches!(bad, Err(Error::NotContinuous(_))));
    }

    #[test]
    fn refine_and_pullback() {
        let m = PLFunction::max_of(2, &[rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])]);
        assert_eq!(m.refine(&Cone::whole_space(2)).len(), 3);
        // restriction to the diagonal line t ↦ (t, t)
        let r = m.pullback(&[ivec(&[1]), ivec(&[1])]);
        assert_eq!(r.value(&rv(&[2])), rat(2, 1));
        assert_eq!(r.value(&rv(&[-2])), rat(0, 1));
        assert_eq!(r.refine(&Cone::whole_space(1)).len(), 2);
    }

    #[test]
    fn threshold_greedy() {
        // two parallel pairs: rank counts distinct colours
        let pts = vec![ivec(&[0]), ivec(&[1]), ivec(&[3]), ivec(&[4])];
        let colour = [0, 0, 1, 1];
        let rank: RankFn = Arc::new(move |s: &[usize]| {
            let mut c: Vec<usize> = s.iter().map(|i| colour[*i]).collect();
            c.sort();
            c.dedup();
            c.len()
        });
        let m2 = PLFunction::threshold(1, pts, rank, 2);
        assert_eq!(m2.value(&rv(&[1])), rat(1, 1));
        assert_eq!(m2.value(&rv(&[-1])), rat(-3, 1));
    }
}
