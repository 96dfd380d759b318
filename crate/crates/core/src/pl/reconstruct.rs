use std::collections::{BTreeMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::arith::{add_iv, dot, scale_iv, IVec, Int};
use crate::lattice::fan::split_cells;
use crate::lattice::{Cone, LatticePolytope, WeightedFan};
use crate::{Error, Result};

/// The polytope (up to translation) whose support function has corner locus
/// `d`, found by walking the chambers of the complement of `|d|`.
pub fn reconstruct_polytope(d: &WeightedFan) -> Result<LatticePolytope> {
    let m = d.ambient();
    if d.is_empty() {
        return Ok(LatticePolytope::origin(m));
    }
    if d.dim() + 1 != m {
        return Err(Error::NotADivisor(format!("fan of dimension {} in ℝ^{}", d.dim(), m)));
    }
    let mut walls: Vec<IVec> = Vec::new();
    for (c, w) in d.cones() {
        if !w.is_integer() {
            return Err(Error::NotADivisor(format!("non-integral weight on {}", c)));
        }
        walls.push(c.equations()[0].clone());
    }
    walls.sort();
    walls.dedup();
    let cells = split_cells(vec![Cone::whole_space(m)], &walls);
    let mut adjacency: BTreeMap<Cone, Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        for f in c.facets() {
            adjacency.entry(f).or_default().push(i);
        }
    }
    // (facet, weight crossing it, normal)
    let mut edges: Vec<Vec<(usize, IVec)>> = vec![Vec::new(); cells.len()];
    for (face, around) in &adjacency {
        if around.len() != 2 {
            continue;
        }
        let p = face.relint_point();
        let w: Int = d
            .cones()
            .iter()
            .filter(|(c, _)| c.equations() == face.equations() && c.contains(&p))
            .map(|(_, w)| w.to_integer())
            .sum();
        let nu = face.equations()[0].clone();
        let (a, b) = (around[0], around[1]);
        // orient the normal towards the entered cell
        let into_b = if dot(&nu, &cells[b].relint_point()).is_positive() { nu.clone() } else { nu.iter().map(|x| -x).collect() };
        let jump = scale_iv(&w, &into_b);
        edges[a].push((b, jump.clone()));
        edges[b].push((a, jump.iter().map(|x| -x).collect()));
    }
    let mut cov: Vec<Option<IVec>> = vec![None; cells.len()];
    cov[0] = Some(vec![Int::zero(); m]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let ci = cov[i].clone().unwrap();
        for (j, jump) in &edges[i] {
            let cj = add_iv(&ci, jump);
            match &cov[*j] {
                None => {
                    cov[*j] = Some(cj);
                    queue.push_back(*j);
                }
                Some(existing) => {
                    if *existing != cj {
                        return Err(Error::NotADivisor("wall crossings do not close up".into()));
                    }
                }
            }
        }
    }
    let cov: Vec<IVec> = cov.into_iter().map(|c| c.expect("chamber graph is connected")).collect();
    for (i, c) in cells.iter().enumerate() {
        let p = c.relint_point();
        let own = dot(&cov[i], &p);
        if cov.iter().any(|o| dot(o, &p) > own) {
            return Err(Error::NotConvex);
        }
    }
    Ok(LatticePolytope::hull(m, &cov)?.normalized())
}
