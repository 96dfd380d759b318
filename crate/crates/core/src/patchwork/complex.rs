//! The zero locus of a real matroid complete intersection as a cell complex.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::arith::{fmt_rat, neg_iv, primitive, sub_iv, IVec, Int, RVec, Rat};
use crate::lattice::{arrangement_of, split_cells, Cone, WeightedFan};
use crate::patchwork::{cone_simplices, engineer, signs_match, RealMci};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Empty,
    /// A marked interior point of a face of minimal dimension.
    Vertex,
    /// The cone from a marked point over the cells of the smaller faces.
    Cone,
}

/// `Z ∩ F` for a face `F` of the upper boundary whose dual cone lies in the
/// last fan of the lifted tropical complete intersection.
#[derive(Clone, Debug)]
pub struct PatchCell {
    pub cone: Cone,
    pub face_dim: usize,
    pub kind: CellKind,
    /// Marked point, in the slice where the last coordinate is 1.
    pub apex: RVec,
    /// Nonempty cells of the faces `F′ ⊊ F`.
    pub boundary: Vec<usize>,
    /// For faces of minimal dimension: the simplices `A_i^C` as support ids.
    pub simplices: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct PatchworkComplex {
    pub ambient: usize,
    pub codim: usize,
    pub cells: Vec<PatchCell>,
}

impl PatchworkComplex {
    pub fn dim(&self) -> usize {
        self.ambient.saturating_sub(self.codim)
    }

    pub fn cell_dim(&self, i: usize) -> usize {
        self.cells[i].face_dim - self.codim
    }

    pub fn nonempty(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cells.len()).filter(|&i| self.cells[i].kind != CellKind::Empty)
    }

    /// Maximal chains of marked points: the simplices of a triangulation of `Z`.
    pub fn simplices(&self) -> Vec<Vec<usize>> {
        let covered: BTreeSet<usize> = self.cells.iter().flat_map(|c| c.boundary.iter().copied()).collect();
        let mut out = Vec::new();
        for top in self.nonempty().filter(|i| !covered.contains(i)) {
            let mut stack = vec![vec![top]];
            while let Some(chain) = stack.pop() {
                let last = *chain.last().unwrap();
                let c = &self.cells[last];
                if c.kind == CellKind::Vertex {
                    let mut s = chain.clone();
                    s.reverse();
                    out.push(s);
                    continue;
                }
                for &b in &c.boundary {
                    if self.cells[b].face_dim + 1 == c.face_dim {
                        let mut next = chain.clone();
                        next.push(b);
                        stack.push(next);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// OFF export of the triangulation; `nOFF` unless the slice is 3-dimensional.
    pub fn to_off(&self) -> String {
        let ids: Vec<usize> = self.nonempty().collect();
        let index = |c: usize| ids.iter().position(|&x| x == c).unwrap();
        let simplices = self.simplices();
        let mut s = String::new();
        if self.ambient == 3 {
            s.push_str("OFF\n");
        } else {
            s.push_str(&format!("nOFF\n{}\n", self.ambient));
        }
        s.push_str(&format!("{} {} 0\n", ids.len(), simplices.len()));
        for &c in &ids {
            let coords: Vec<String> = self.cells[c].apex.iter().map(|x| fmt_rat(x)).collect();
            s.push_str(&coords.join(" "));
            s.push('\n');
        }
        for simplex in &simplices {
            let vs: Vec<String> = simplex.iter().map(|&c| index(c).to_string()).collect();
            s.push_str(&format!("{} {}\n", vs.len(), vs.join(" ")));
        }
        s
    }
}

fn unoriented(h: &[Int]) -> Option<IVec> {
    let h = primitive(h).ok()?;
    Some(if h.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative()) { neg_iv(&h) } else { h })
}

fn upper(c: &Cone) -> bool {
    c.relint_point().last().map_or(false, |t| t.is_positive())
}

/// The zero locus in the positive orthant, compactified by `sigma`.
pub fn zero_locus(rmci: &RealMci, sigma: Option<&WeightedFan>) -> Result<PatchworkComplex> {
    let n = rmci.ambient();
    let k = rmci.codim();
    let e = engineer(rmci)?;
    let n1 = n + 1;
    let last = e.tci.last();
    let mut complex = PatchworkComplex { ambient: n, codim: k, cells: Vec::new() };
    if e.tci.collapsed_at.is_some() || last.is_empty() {
        return Ok(complex);
    }
    let pts = e.lifted.points();
    let mut walls: BTreeSet<IVec> = BTreeSet::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            walls.extend(unoriented(&sub_iv(a, b)));
        }
    }
    walls.extend(unoriented(&(0..n1).map(|j| Int::from((j == n) as i64)).collect::<IVec>()));
    if let Some(s) = sigma {
        if s.ambient() != n {
            return Err(Error::DimMismatch { expected: n, got: s.ambient() });
        }
        let cones: Vec<&Cone> = s.cones().iter().map(|(c, _)| c).collect();
        for h in arrangement_of(&cones) {
            let mut x = h.clone();
            x.push(Int::zero());
            walls.extend(unoriented(&x));
        }
    }
    let walls: Vec<IVec> = walls.into_iter().collect();
    let mut cones: BTreeSet<Cone> = BTreeSet::new();
    for (c, _) in last.cones() {
        for piece in split_cells(vec![c.clone()], &walls) {
            if piece.dim() == n1 - k && upper(&piece) {
                for f in piece.faces() {
                    if upper(&f) {
                        cones.insert(f);
                    }
                }
            }
        }
    }
    let mut cones: Vec<Cone> = cones.into_iter().collect();
    cones.sort_by(|a, b| b.dim().cmp(&a.dim()).then(a.cmp(b)));
    let ids = e.lifted.ids();
    for cone in cones {
        let face_dim = n1 - cone.dim();
        let p = cone.relint_point();
        let t = Rat::from_integer(p[n].clone());
        let apex: RVec = p[..n].iter().map(|x| Rat::from_integer(x.clone()) / &t).collect();
        let (kind, boundary, simplices) = if face_dim == k {
            let s = cone_simplices(&e, &cone)?;
            let kind = if signs_match(&e.columns, &e.signs, &s)? { CellKind::Vertex } else { CellKind::Empty };
            let named = s.iter().map(|x| x.iter().map(|&i| ids[i].clone()).collect()).collect();
            (kind, Vec::new(), named)
        } else {
            let boundary: Vec<usize> = (0..complex.cells.len())
                .filter(|&i| complex.cells[i].kind != CellKind::Empty && complex.cells[i].cone.has_face(&cone))
                .collect();
            let kind = if boundary.is_empty() { CellKind::Empty } else { CellKind::Cone };
            (kind, boundary, Vec::new())
        };
        complex.cells.push(PatchCell { cone, face_dim, kind, apex, boundary, simplices });
    }
    Ok(complex)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub components: usize,
    pub euler_characteristic: i64,
    pub f_vector: Vec<usize>,
    pub pseudomanifold: bool,
}

pub fn complex_report(z: &PatchworkComplex) -> ComplexReport {
    let cells: Vec<usize> = z.nonempty().collect();
    let mut parent: Vec<usize> = (0..z.cells.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &c in &cells {
        for &b in &z.cells[c].boundary {
            let (ra, rb) = (find(&mut parent, c), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let roots: BTreeSet<usize> = cells.iter().map(|&c| find(&mut parent, c)).collect();
    let mut f_vector: Vec<usize> = Vec::new();
    for &c in &cells {
        let d = z.cell_dim(c);
        if f_vector.len() <= d {
            f_vector.resize(d + 1, 0);
        }
        f_vector[d] += 1;
    }
    let euler_characteristic = f_vector.iter().enumerate().map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
    let pseudomanifold = match f_vector.len() {
        0 | 1 => true,
        top => cells.iter().filter(|&&c| z.cell_dim(c) + 2 == top).all(|&c| {
            cells.iter().filter(|&&d| z.cell_dim(d) + 1 == top && z.cells[d].boundary.contains(&c)).count() <= 2
        }),
    };
    ComplexReport { components: roots.len(), euler_characteristic, f_vector, pseudomanifold }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ivec, rat};
    use crate::matroid::SupportMultiset;
    use std::collections::BTreeMap;

    fn rmci(points: &[&[i64]], signs: &[i8], order: &[i64]) -> RealMci {
        let entries: Vec<(String, IVec)> = points.iter().enumerate().map(|(i, p)| (format!("a{}", i), ivec(p))).collect();
        let sign: BTreeMap<String, i8> = (0..points.len()).map(|i| (format!("a{}", i), signs[i])).collect();
        let ord: BTreeMap<String, Rat> = (0..points.len()).map(|i| (format!("a{}", i), rat(order[i], 1))).collect();
        RealMci::new(SupportMultiset::new(entries).unwrap(), vec![vec![rat(1, 1); points.len()]], sign, ord).unwrap()
    }

    #[test]
    fn descartes_two_sign_changes() {
        let z = zero_locus(&rmci(&[&[0], &[1], &[2]], &[1, -1, 1], &[0, 3, 1]), None).unwrap();
        let r = complex_report(&z);
        assert_eq!(r, ComplexReport { components: 2, euler_characteristic: 2, f_vector: vec![2], pseudomanifold: true });
    }

    #[test]
    fn positive_coefficients_have_no_zeros() {
        let z = zero_locus(&rmci(&[&[0], &[1], &[2]], &[1, 1, 1], &[0, 3, 1]), None).unwrap();
        assert_eq!(complex_report(&z), ComplexReport { components: 0, euler_characteristic: 0, f_vector: vec![], pseudomanifold: true });
        // an order hiding the middle monomial leaves a single edge without sign change
        let z = zero_locus(&rmci(&[&[0], &[1], &[2]], &[1, -1, 1], &[0, 1, 6]), None).unwrap();
        assert_eq!(complex_report(&z).components, 0);
    }

    #[test]
    fn viro_line_is_an_arc() {
        // 1 − x + y in the positive quadrant: one arc from the x-axis to infinity
        let z = zero_locus(&rmci(&[&[0, 0], &[1, 0], &[0, 1]], &[1, -1, 1], &[0, 1, 2]), None).unwrap();
        let r = complex_report(&z);
        assert_eq!(r.components, 1);
        assert_eq!(r.euler_characteristic, 1);
        assert!(r.pseudomanifold);
        assert!(z.to_off().starts_with("nOFF\n2\n"));
        assert!(!z.simplices().is_empty());
    }

    #[test]
    fn unlifted_triangle_closes_up() {
        // 1 − x − y + xy·0 style: a single triangle with two sign changes on its edges
        let z = zero_locus(&rmci(&[&[0, 0], &[1, 0], &[0, 1]], &[1, -1, -1], &[0, 1, 2]), None).unwrap();
        let r = complex_report(&z);
        assert_eq!((r.components, r.euler_characteristic), (1, 1));
    }
}
