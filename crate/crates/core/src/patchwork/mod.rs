//! Combinatorial patchworking of real engineered complete intersections.

mod complex;
mod schon;

pub use complex::{complex_report, zero_locus, CellKind, ComplexReport, PatchCell, PatchworkComplex};
pub use schon::{is_unimodular, schon_polytope};

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{det_rat, dot_ir, rank_rat, Int, RVec, Rat};
use crate::lattice::Cone;
use crate::matroid::{tci_from_mci, Matroid, Mci, SupportMultiset, Tci};
use crate::{Error, Result};

/// A real matroid complete intersection with the sign and order functions of
/// its engineering.
#[derive(Clone, Debug)]
pub struct RealMci {
    pub support: SupportMultiset,
    /// `k` rows; column `j` is the coefficient vector of the `j`-th point.
    pub matrix: Vec<RVec>,
    pub sign: BTreeMap<String, i8>,
    pub order: BTreeMap<String, Rat>,
}

impl RealMci {
    pub fn new(
        support: SupportMultiset,
        matrix: Vec<RVec>,
        sign: BTreeMap<String, i8>,
        order: BTreeMap<String, Rat>,
    ) -> Result<RealMci> {
        let schema = |m: String| Error::Schema { path: "rmci".into(), message: m };
        if matrix.is_empty() {
            return Err(schema("matrix has no rows".into()));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != support.len()) {
            return Err(Error::DimMismatch { expected: support.len(), got: row.len() });
        }
        for (j, id) in support.ids().iter().enumerate() {
            match sign.get(id) {
                Some(1) | Some(-1) => {}
                Some(s) => return Err(schema(format!("sign of {} is {}, not ±1", id, s))),
                None => return Err(Error::UnknownElement(format!("no sign for {}", id))),
            }
            if !order.contains_key(id) {
                return Err(Error::UnknownElement(format!("no order value for {}", id)));
            }
            if matrix.iter().all(|row| row[j].is_zero()) {
                return Err(schema(format!("{} is a loop", id)));
            }
        }
        for id in sign.keys().chain(order.keys()) {
            support.point(id)?;
        }
        if rank_rat(&matrix, support.len()) < matrix.len() {
            return Err(Error::RankDeficient { rank: rank_rat(&matrix, support.len()), needed: matrix.len() });
        }
        Ok(RealMci { support, matrix, sign, order })
    }

    pub fn codim(&self) -> usize {
        self.matrix.len()
    }

    pub fn ambient(&self) -> usize {
        self.support.ambient()
    }

    /// Coefficient vectors, one per point.
    pub fn columns(&self) -> Vec<RVec> {
        (0..self.support.len()).map(|j| self.matrix.iter().map(|r| r[j].clone()).collect()).collect()
    }
}

/// The graph of the order function, scaled to integers: `Ã = {(a, d_a)}`.
pub fn engineer_support(rmci: &RealMci) -> Result<SupportMultiset> {
    let ids = rmci.support.ids();
    let ds: Vec<&Rat> = ids.iter().map(|id| &rmci.order[id]).collect();
    let mut sorted: Vec<&Rat> = ds.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::OrderNotGeneric);
    }
    let den = ds.iter().fold(Int::one(), |acc, d| acc.lcm(d.denom()));
    let entries = ids
        .iter()
        .zip(rmci.support.points())
        .zip(&ds)
        .map(|((id, a), d)| {
            let mut p = a.clone();
            p.push((*d * Rat::from_integer(den.clone())).to_integer());
            (id.clone(), p)
        })
        .collect();
    SupportMultiset::new(entries)
}

/// The lifted matroid complete intersection and its tropicalization.
#[derive(Clone)]
pub struct Engineering {
    pub lifted: SupportMultiset,
    pub columns: Vec<RVec>,
    pub signs: Vec<i8>,
    pub tci: Tci,
}

pub fn engineer(rmci: &RealMci) -> Result<Engineering> {
    let lifted = engineer_support(rmci)?;
    let ids = lifted.ids().to_vec();
    let matroid = Matroid::from_matrix(ids.clone(), &rmci.matrix)?;
    let mci = Mci::new(lifted.clone(), matroid, rmci.codim())?;
    let tci = tci_from_mci(&mci)?;
    let signs = ids.iter().map(|id| rmci.sign[id]).collect();
    Ok(Engineering { lifted, columns: rmci.columns(), signs, tci })
}

/// The simplices `A_1^C, …` cut out by the thresholds at a relative interior
/// point of `c`, as index lists into the lifted support, in threshold order.
/// Each distinct simplex is listed once; their dimensions add up to `k`.
pub fn cone_simplices(e: &Engineering, c: &Cone) -> Result<Vec<Vec<usize>>> {
    let l = c.relint_point();
    level_simplices(&e.lifted, &e.columns, e.tci.codim, &l)
}

fn level_simplices(a: &SupportMultiset, cols: &[RVec], k: usize, l: &[Int]) -> Result<Vec<Vec<usize>>> {
    let lr: Vec<Rat> = l.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let mut by_value: BTreeMap<Rat, Vec<usize>> = BTreeMap::new();
    for (i, p) in a.points().iter().enumerate() {
        by_value.entry(dot_ir(p, &lr)).or_default().push(i);
    }
    let mut span: Vec<RVec> = Vec::new();
    let mut rank = 0;
    let mut out = Vec::new();
    for (_, group) in by_value.into_iter().rev() {
        if rank == k {
            break;
        }
        let fresh: Vec<usize> = group
            .iter()
            .copied()
            .filter(|&i| {
                let mut s = span.clone();
                s.push(cols[i].clone());
                rank_rat(&s, k) > rank
            })
            .collect();
        let mut s = span.clone();
        s.extend(fresh.iter().map(|&i| cols[i].clone()));
        let next = rank_rat(&s, k);
        let jump = next - rank;
        if jump == 0 {
            continue;
        }
        if fresh.len() != jump + 1 {
            return Err(Error::NotSchonData(format!(
                "level set of {} points carries a rank jump of {}",
                fresh.len(),
                jump
            )));
        }
        let base = &a.points()[fresh[0]];
        let diffs: Vec<RVec> = fresh[1..]
            .iter()
            .map(|&i| a.points()[i].iter().zip(base).map(|(x, y)| Rat::from_integer(x - y)).collect())
            .collect();
        if rank_rat(&diffs, a.ambient()) != jump {
            return Err(Error::NotSchonData("level set is not a simplex".into()));
        }
        out.push(fresh);
        span = s;
        rank = next;
    }
    Ok(out)
}

/// `sgn a_{i,j}`: the chirotope of the basis left after removing vertex `j`
/// of simplex `i` and vertex 0 of every other simplex, times `(−1)^j`.
pub fn simplex_signs(columns: &[RVec], simplices: &[Vec<usize>], removal: (usize, usize)) -> Result<i32> {
    let (i, j) = removal;
    let mut basis: Vec<&RVec> = Vec::new();
    for (p, s) in simplices.iter().enumerate() {
        for (q, &idx) in s.iter().enumerate() {
            let removed = if p == i { q == j } else { q == 0 };
            if !removed {
                basis.push(&columns[idx]);
            }
        }
    }
    let k = columns.first().map_or(0, |c| c.len());
    if basis.len() != k {
        return Err(Error::DegenerateSimplices(format!("{} vectors in rank {}", basis.len(), k)));
    }
    let m: Vec<RVec> = (0..k).map(|r| basis.iter().map(|v| v[r].clone()).collect()).collect();
    let d = det_rat(&m);
    if d.is_zero() {
        return Err(Error::DegenerateSimplices("vectors do not span".into()));
    }
    let s = if d.is_positive() { 1 } else { -1 };
    Ok(if j % 2 == 0 { s } else { -s })
}

/// Whether, for every simplex, the sign vectors `sgn(a_{i,•})` and `s(a_{i,•})`
/// agree up to a global sign.
pub fn signs_match(columns: &[RVec], signs: &[i8], simplices: &[Vec<usize>]) -> Result<bool> {
    for (i, s) in simplices.iter().enumerate() {
        let sg: Vec<i32> = (0..s.len()).map(|j| simplex_signs(columns, simplices, (i, j))).collect::<Result<_>>()?;
        let ss: Vec<i32> = s.iter().map(|&a| signs[a] as i32).collect();
        let neg: Vec<i32> = ss.iter().map(|x| -x).collect();
        if sg != ss && sg != neg {
            return Ok(false);
        }
    }
    Ok(true)
}
