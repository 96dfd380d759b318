use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{Int, Rat};
use crate::lattice::WeightedFan;
use crate::matroid::{Matroid, Mci, SupportMultiset};
use crate::pl::{corner_locus, PLFunction, RankFn};
use crate::{Error, Result};

/// A tropical complete intersection `ℝ^n = T_0 ⊃ T_1 ⊃ … ⊃ T_k` with the
/// functions `m_i` whose corner loci cut out each step.
#[derive(Clone)]
pub struct Tci {
    pub fans: Vec<WeightedFan>,
    pub functions: Vec<PLFunction>,
    /// Requested codimension.
    pub codim: usize,
    /// First step at which the fan became empty before reaching `codim`.
    pub collapsed_at: Option<usize>,
}

impl Tci {
    pub fn ambient(&self) -> usize {
        self.fans[0].ambient()
    }

    pub fn last(&self) -> &WeightedFan {
        self.fans.last().unwrap()
    }

    /// Recomputes every corner locus and compares.
    pub fn verify(&self) -> Result<bool> {
        for (i, m) in self.functions.iter().enumerate() {
            if !corner_locus(m, &self.fans[i])?.same_cycle(&self.fans[i + 1]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn rank_fn(m: &Matroid) -> RankFn {
    let m = m.clone();
    Arc::new(move |s: &[usize]| m.rank_idx(s))
}

fn threshold_fn(m: &Matroid, a: &SupportMultiset, k: usize) -> PLFunction {
    PLFunction::threshold(a.ambient(), a.points().to_vec(), rank_fn(m), k)
}

/// The largest `m` with `rank{a : l(a) ≥ m} ≥ k`.
pub fn tci_threshold(m: &Matroid, a: &SupportMultiset, k: usize, l: &[Rat]) -> Result<Rat> {
    let r = m.full_rank();
    if r < k || k == 0 {
        return Err(Error::RankDeficient { rank: r, needed: k.max(1) });
    }
    if l.len() != a.ambient() {
        return Err(Error::DimMismatch { expected: a.ambient(), got: l.len() });
    }
    for id in a.ids() {
        m.index_of(id)?;
    }
    // the threshold function indexes elements by position in `a`
    let order: Vec<usize> = a.ids().iter().map(|id| m.index_of(id).unwrap()).collect();
    Ok(threshold_fn(&m.restrict(&order), a, k).value(l))
}

pub fn tci_from_mci(mci: &Mci) -> Result<Tci> {
    let (a, m, codim) = (mci.support(), mci.matroid(), mci.codim());
    let r = m.full_rank();
    if r < codim {
        return Err(Error::RankDeficient { rank: r, needed: codim });
    }
    let n = a.ambient();
    let mut fans = vec![WeightedFan::whole_space(n)];
    let mut functions = Vec::new();
    let mut collapsed_at = None;
    for k in 1..=codim {
        let f = threshold_fn(m, a, k);
        let next = corner_locus(&f, fans.last().unwrap())?;
        functions.push(f);
        let empty = next.is_empty();
        fans.push(next);
        if empty && k < codim {
            collapsed_at = Some(k);
            break;
        }
    }
    Ok(Tci { fans, functions, codim, collapsed_at })
}

/// Weight at the origin of a zero-dimensional tropical complete intersection.
pub fn bkk_number(tci: &Tci) -> Result<Int> {
    let n = tci.ambient();
    if tci.codim != n {
        return Err(Error::NotZeroDimensional { codim: tci.codim, dim: n });
    }
    if tci.collapsed_at.is_some() {
        return Ok(Int::zero());
    }
    let d = tci.last().degree();
    if !d.is_integer() {
        return Err(Error::Internal(format!("non-integral intersection number {}", d)));
    }
    Ok(d.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ivec, rat};
    use crate::lattice::LatticePolytope;

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|x| rat(*x, 1)).collect()
    }

    /// Three binomials on alternate edges of the hexagon, the coefficient
    /// matrix of `r + g + b = r + 2g + 3b = 0`.
    pub(crate) fn hexagon_mci() -> Mci {
        let pts = [[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]];
        let names = ["r0", "r1", "g0", "g1", "b0", "b1"];
        let entries = names.iter().zip(pts.iter()).map(|(n, p)| (n.to_string(), ivec(p))).collect();
        let ids: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let m = Matroid::from_matrix(ids, &[rv(&[1, 1, 1, 1, 1, 1]), rv(&[1, 1, 2, 2, 3, 3])]).unwrap();
        Mci::new(SupportMultiset::new(entries).unwrap(), m, 2).unwrap()
    }

    #[test]
    fn hexagon_example_has_three_solutions() {
        let mci = hexagon_mci();
        let t = tci_from_mci(&mci).unwrap();
        assert!(t.verify().unwrap());
        assert_eq!(t.fans[1].cones().len(), 6);
        assert_eq!(t.last().dim(), 0);
        assert_eq!(bkk_number(&t).unwrap(), int(3));
    }

    #[test]
    fn second_threshold_on_black_and_colored_rays() {
        let mci = hexagon_mci();
        let (a, m) = (mci.support(), mci.matroid());
        // (0,-1) is dual to the red edge (0,0)-(1,0); (1,-1) to the black edge (1,0)-(2,1)
        let colored = rv(&[0, -1]);
        let black = rv(&[1, -1]);
        let m1 = |l: &[Rat]| tci_threshold(m, a, 1, l).unwrap();
        let m2 = |l: &[Rat]| tci_threshold(m, a, 2, l).unwrap();
        assert_eq!(m2(&black), m1(&black));
        assert_eq!(m1(&colored), rat(0, 1));
        assert_eq!(m2(&colored), rat(-1, 1));
    }

    #[test]
    fn codim_one_gives_dual_fan() {
        let mut mci = hexagon_mci();
        mci.codim = 1;
        let t = tci_from_mci(&mci).unwrap();
        let hex = LatticePolytope::hull(2, mci.support().points()).unwrap();
        assert!(t.functions[0].agrees_on(&PLFunction::support_function(&hex), &WeightedFan::whole_space(2)));
    }

    #[test]
    fn classical_squares_and_degenerate_point() {
        let sq = vec![ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])];
        let t = tci_from_mci(&Mci::classical(&[sq.clone(), sq]).unwrap()).unwrap();
        assert_eq!(bkk_number(&t).unwrap(), int(2));
        let pt = vec![ivec(&[1, 1])];
        let t = tci_from_mci(&Mci::classical(&[pt.clone(), pt]).unwrap()).unwrap();
        assert_eq!(t.collapsed_at, Some(1));
        assert_eq!(bkk_number(&t).unwrap(), int(0));
    }

    #[test]
    fn unit_segments_meet_once() {
        let s1 = vec![ivec(&[0, 0]), ivec(&[1, 0])];
        let s2 = vec![ivec(&[0, 0]), ivec(&[0, 1])];
        let t = tci_from_mci(&Mci::classical(&[s1, s2]).unwrap()).unwrap();
        assert_eq!(t.last().cones().len(), 1);
        assert_eq!(bkk_number(&t).unwrap(), int(1));
    }

    #[test]
    fn errors() {
        let mci = hexagon_mci();
        let err = tci_threshold(mci.matroid(), mci.support(), 3, &rv(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::RankDeficient { rank: 2, needed: 3 }));
        let mut m3 = hexagon_mci();
        m3.codim = 1;
        let t = tci_from_mci(&m3).unwrap();
        assert!(matches!(bkk_number(&t), Err(Error::NotZeroDimensional { codim: 1, dim: 2 })));
    }
}
