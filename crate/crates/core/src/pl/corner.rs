use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{dot_ir, sub_rv, IVec, RVec, Rat};
use crate::lattice::fan::lattice_normal;
use crate::lattice::{Cone, WeightedFan};
use crate::pl::PLFunction;
use crate::{Error, Result};

/// Cells of `T` refined so that `m` is linear on each, with weights and covectors.
pub(crate) fn refine_fan(m: &PLFunction, t: &WeightedFan) -> Vec<(Cone, Rat, RVec)> {
    let mut cells = Vec::new();
    for (tau, w) in t.cones() {
        for (piece, c) in m.pieces(tau) {
            cells.push((piece, w.clone(), c));
        }
    }
    cells
}

/// Groups the facets of a list of cells: each facet with the adjacent cells
/// and the lattice normals pointing into them.
pub(crate) fn facet_incidences(cells: &[&Cone]) -> BTreeMap<Cone, Vec<(usize, IVec)>> {
    let mut by_face: BTreeMap<Cone, Vec<(usize, IVec)>> = BTreeMap::new();
    for (i, tau) in cells.iter().enumerate() {
        for sigma in tau.facets() {
            let u = lattice_normal(&sigma, tau);
            by_face.entry(sigma).or_default().push((i, u));
        }
    }
    by_face
}

/// The corner locus `δ(m·T)`.
pub fn corner_locus(m: &PLFunction, t: &WeightedFan) -> Result<WeightedFan> {
    let n = t.ambient();
    if m.ambient() != n {
        return Err(Error::DimMismatch { expected: n, got: m.ambient() });
    }
    if t.dim() == 0 {
        return Ok(WeightedFan::empty(n, 0));
    }
    let cells = refine_fan(m, t);
    let refs: Vec<&Cone> = cells.iter().map(|(c, _, _)| c).collect();
    let mut out = Vec::new();
    for (sigma, around) in facet_incidences(&refs) {
        let mut balance = vec![Rat::zero(); n];
        for (i, u) in &around {
            for (b, x) in balance.iter_mut().zip(u) {
                *b += &cells[*i].1 * Rat::from_integer(x.clone());
            }
        }
        if sigma.equations().iter().any(|e| !dot_ir(e, &balance).is_zero()) {
            return Err(Error::NotBalanced(format!("around {}", sigma)));
        }
        let c0 = &cells[around[0].0].2;
        let mut weight = Rat::zero();
        for (i, u) in &around {
            let (_, w, c) = &cells[*i];
            weight += w * dot_ir(u, &sub_rv(c, c0));
        }
        if !weight.is_zero() {
            out.push((sigma, weight));
        }
    }
    Ok(WeightedFan::from_cones(n, t.dim() - 1, out))
}

/// Left-to-right fold `δ(m_k · … δ(m_1 · T))`.
pub fn iterated_corner_locus(ms: &[PLFunction], t: &WeightedFan) -> Result<WeightedFan> {
    let mut cur = t.clone();
    for m in ms {
        cur = corner_locus(m, &cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ivec, rat};
    use crate::lattice::LatticePolytope;

    fn rv(v: &[i64]) -> RVec {
        v.iter().map(|x| rat(*x, 1)).collect()
    }

    #[test]
    fn linear_function_has_empty_corner_locus() {
        let m = PLFunction::linear(rv(&[2, -1]));
        assert!(corner_locus(&m, &WeightedFan::whole_space(2)).unwrap().is_empty());
    }

    #[test]
    fn max_of_three_forms_gives_tropical_line() {
        let m = PLFunction::max_of(2, &[rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])]);
        let d = corner_locus(&m, &WeightedFan::whole_space(2)).unwrap();
        let expect = WeightedFan::from_cones(
            2,
            1,
            vec![
                (Cone::ray(&ivec(&[1, 1])), Rat::from(int(1))),
                (Cone::ray(&ivec(&[-1, 0])), Rat::from(int(1))),
                (Cone::ray(&ivec(&[0, -1])), Rat::from(int(1))),
            ],
        );
        assert!(d.same_cycle(&expect));
    }

    #[test]
    fn hexagon_dual_fan_and_self_intersection() {
        let hex = LatticePolytope::hull(
            2,
            &[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[2, 1]), ivec(&[2, 2]), ivec(&[1, 2]), ivec(&[0, 1])],
        )
        .unwrap();
        let m = PLFunction::support_function(&hex);
        let d = corner_locus(&m, &WeightedFan::whole_space(2)).unwrap();
        assert_eq!(d.cones().len(), 6);
        assert!(d.cones().iter().all(|(_, w)| *w == rat(1, 1)));
        assert!(d.is_balanced().unwrap());
        let p = corner_locus(&m, &d).unwrap();
        assert_eq!(p.degree(), rat(6, 1));
    }

    #[test]
    fn unbalanced_input_rejected() {
        let m = PLFunction::max_of(2, &[rv(&[0, 0]), rv(&[1, 0])]);
        let ray = WeightedFan::from_cones(2, 1, vec![(Cone::ray(&ivec(&[1, 1])), rat(1, 1))]);
        assert!(matches!(corner_locus(&m, &ray), Err(Error::NotBalanced(_))));
    }

    #[test]
    fn two_triangles_meet_once() {
        let tri = LatticePolytope::hull(2, &[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1])]).unwrap();
        let m = PLFunction::support_function(&tri);
        let r = iterated_corner_locus(&[m.clone(), m], &WeightedFan::whole_space(2)).unwrap();
        assert_eq!(r.degree(), rat(1, 1));
    }
}
