//! Matroids on lattice multisets and the tropical complete intersection of a
//! matroid complete intersection.

mod tci;

pub use tci::{bkk_number, tci_from_mci, tci_threshold, Tci};

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::arith::{det_rat, rank_rat, IVec, RVec, Rat};
use crate::{Error, Result};

/// Labelled lattice points; labels are distinct, points may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportMultiset {
    ambient: usize,
    ids: Vec<String>,
    points: Vec<IVec>,
}

impl SupportMultiset {
    pub fn new(entries: Vec<(String, IVec)>) -> Result<SupportMultiset> {
        let Some(first) = entries.first() else {
            return Err(Error::Schema { path: "points".into(), message: "empty support".into() });
        };
        let ambient = first.1.len();
        let mut seen = BTreeSet::new();
        for (id, p) in &entries {
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateId(id.clone()));
            }
            if p.len() != ambient {
                return Err(Error::DimMismatch { expected: ambient, got: p.len() });
            }
        }
        let (ids, points) = entries.into_iter().unzip();
        Ok(SupportMultiset { ambient, ids, points })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn points(&self) -> &[IVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn point(&self, id: &str) -> Result<&IVec> {
        let i = self.ids.iter().position(|x| x == id).ok_or_else(|| Error::UnknownElement(id.into()))?;
        Ok(&self.points[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Oracle {
    /// One coefficient vector per ground element.
    Columns(Vec<RVec>),
    /// Ranks of all subsets, indexed by bitmask over the ground order.
    Table(Vec<usize>),
}

/// A matroid given by a vector configuration or by an explicit rank table,
/// optionally truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<String>,
    oracle: Oracle,
    cap: Option<usize>,
}

const MAX_TABLE_GROUND: usize = 20;

impl Matroid {
    /// `rows` is a matrix with one column per element of `ground`.
    pub fn from_matrix(ground: Vec<String>, rows: &[RVec]) -> Result<Matroid> {
        check_ids(&ground)?;
        for r in rows {
            if r.len() != ground.len() {
                return Err(Error::DimMismatch { expected: ground.len(), got: r.len() });
            }
        }
        let cols = (0..ground.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Ok(Matroid { ground, oracle: Oracle::Columns(cols), cap: None })
    }

    /// One coefficient vector per element.
    pub fn from_vectors(ground: Vec<String>, vectors: Vec<RVec>) -> Result<Matroid> {
        check_ids(&ground)?;
        if vectors.len() != ground.len() {
            return Err(Error::DimMismatch { expected: ground.len(), got: vectors.len() });
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != vectors[0].len()) {
            return Err(Error::DimMismatch { expected: vectors[0].len(), got: v.len() });
        }
        Ok(Matroid { ground, oracle: Oracle::Columns(vectors), cap: None })
    }

    /// Explicit ranks of subsets. The empty set may be omitted; every other
    /// subset must be listed. The axioms are checked exhaustively.
    pub fn from_rank_table(ground: Vec<String>, table: &BTreeMap<BTreeSet<String>, usize>) -> Result<Matroid> {
        check_ids(&ground)?;
        let n = ground.len();
        if n > MAX_TABLE_GROUND {
            return Err(Error::NotAMatroid(format!("rank tables are limited to {} elements", MAX_TABLE_GROUND)));
        }
        let index: BTreeMap<&str, usize> = ground.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut ranks: Vec<Option<usize>> = vec![None; 1 << n];
        ranks[0] = Some(0);
        for (set, r) in table {
            let mut mask = 0usize;
            for id in set {
                let i = index.get(id.as_str()).ok_or_else(|| Error::UnknownElement(id.clone()))?;
                mask |= 1 << i;
            }
            if mask == 0 && *r != 0 {
                return Err(Error::NotAMatroid("the empty set has positive rank".into()));
            }
            ranks[mask] = Some(*r);
        }
        let ranks: Vec<usize> = ranks
            .into_iter()
            .enumerate()
            .map(|(mask, r)| r.ok_or_else(|| Error::NotAMatroid(format!("no rank for subset {}", mask_names(&ground, mask)))))
            .collect::<Result<_>>()?;
        for mask in 0..(1usize << n) {
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let up = ranks[mask | (1 << i)];
                if up < ranks[mask] || up > ranks[mask] + 1 {
                    return Err(Error::NotAMatroid(format!(
                        "adding one element to {} changes the rank by more than one or decreases it",
                        mask_names(&ground, mask)
                    )));
                }
                // local submodularity implies submodularity
                for j in (i + 1)..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let both = ranks[mask | (1 << i) | (1 << j)];
                    if ranks[mask | (1 << i)] + ranks[mask | (1 << j)] < both + ranks[mask] {
                        return Err(Error::NotAMatroid(format!("submodularity fails over {}", mask_names(&ground, mask))));
                    }
                }
            }
        }
        Ok(Matroid { ground, oracle: Oracle::Table(ranks), cap: None })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.ground.iter().position(|g| g == id).ok_or_else(|| Error::UnknownElement(id.into()))
    }

    /// Coefficient vectors, when the matroid is given by a matrix.
    pub fn vectors(&self) -> Option<&[RVec]> {
        match &self.oracle {
            Oracle::Columns(c) => Some(c),
            Oracle::Table(_) => None,
        }
    }

    /// Rank of a set of ground positions.
    pub fn rank_idx(&self, set: &[usize]) -> usize {
        let r = match &self.oracle {
            Oracle::Columns(cols) => {
                let sel: Vec<RVec> = set.iter().map(|&i| cols[i].clone()).collect();
                let width = cols.first().map_or(0, |c| c.len());
                rank_rat(&sel, width)
            }
            Oracle::Table(t) => t[set.iter().fold(0usize, |m, &i| m | (1 << i))],
        };
        self.cap.map_or(r, |c| r.min(c))
    }

    pub fn rank(&self, ids: &[&str]) -> Result<usize> {
        let idx: Vec<usize> = ids.iter().map(|id| self.index_of(id)).collect::<Result<_>>()?;
        Ok(self.rank_idx(&idx))
    }

    pub fn full_rank(&self) -> usize {
        self.rank_idx(&(0..self.ground.len()).collect::<Vec<_>>())
    }

    /// The matroid `B ↦ min(r(B), k)`.
    pub fn truncate(&self, k: usize) -> Matroid {
        let mut m = self.clone();
        m.cap = Some(self.cap.map_or(k, |c| c.min(k)));
        m
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.rank_idx(&[i]) == 0
    }

    /// Restriction to the listed ground positions, in that order.
    pub fn restrict(&self, keep: &[usize]) -> Matroid {
        let ground = keep.iter().map(|&i| self.ground[i].clone()).collect();
        let oracle = match &self.oracle {
            Oracle::Columns(c) => Oracle::Columns(keep.iter().map(|&i| c[i].clone()).collect()),
            Oracle::Table(t) => Oracle::Table(
                (0..(1usize << keep.len()))
                    .map(|mask| {
                        let orig = keep.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).fold(0, |m, (_, &i)| m | (1 << i));
                        t[orig]
                    })
                    .collect(),
            ),
        };
        Matroid { ground, oracle, cap: self.cap }
    }

    /// The rank table restricted to nonempty subsets, for small ground sets.
    pub fn rank_table(&self) -> Option<BTreeMap<BTreeSet<String>, usize>> {
        let n = self.ground.len();
        if n > MAX_TABLE_GROUND {
            return None;
        }
        let mut out = BTreeMap::new();
        for mask in 1..(1usize << n) {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let set = idx.iter().map(|&i| self.ground[i].clone()).collect();
            out.insert(set, self.rank_idx(&idx));
        }
        Some(out)
    }
}

fn check_ids(ground: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for g in ground {
        if !seen.insert(g) {
            return Err(Error::DuplicateId(g.clone()));
        }
    }
    Ok(())
}

fn mask_names(ground: &[String], mask: usize) -> String {
    let names: Vec<&str> = (0..ground.len()).filter(|i| mask & (1 << i) != 0).map(|i| ground[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// A matroid complete intersection of codimension `codim`. Loops are
/// removed on construction and remembered in `dropped`.
#[derive(Clone, Debug)]
pub struct Mci {
    support: SupportMultiset,
    matroid: Matroid,
    codim: usize,
    dropped: Vec<String>,
}

impl Mci {
    pub fn new(support: SupportMultiset, matroid: Matroid, codim: usize) -> Result<Mci> {
        for id in support.ids() {
            matroid.index_of(id)?;
        }
        if let Some(extra) = matroid.ground().iter().find(|g| !support.ids().contains(g)) {
            return Err(Error::UnknownElement(extra.clone()));
        }
        let order: Vec<usize> = support.ids().iter().map(|id| matroid.index_of(id).unwrap()).collect();
        let mut keep = Vec::new();
        let mut entries = Vec::new();
        let mut dropped = Vec::new();
        for (pos, &i) in order.iter().enumerate() {
            if matroid.is_loop(i) {
                log::warn!("dropping loop {}", support.ids()[pos]);
                dropped.push(support.ids()[pos].clone());
            } else {
                keep.push(i);
                entries.push((support.ids()[pos].clone(), support.points()[pos].clone()));
            }
        }
        if entries.is_empty() {
            return Err(Error::RankDeficient { rank: 0, needed: codim.max(1) });
        }
        let support = SupportMultiset::new(entries)?;
        let matroid = matroid.restrict(&keep);
        Ok(Mci { support, matroid, codim, dropped })
    }

    /// The classical complete intersection with one equation per support
    /// set: a monomial of the `i`-th equation has coefficient vector `e_i`.
    pub fn classical(supports: &[Vec<IVec>]) -> Result<Mci> {
        let k = supports.len();
        let mut entries = Vec::new();
        let mut vectors = Vec::new();
        for (i, s) in supports.iter().enumerate() {
            for (j, p) in s.iter().enumerate() {
                entries.push((format!("f{}_{}", i, j), p.clone()));
                let mut v = vec![Rat::zero(); k];
                v[i] = Rat::one();
                vectors.push(v);
            }
        }
        let ids = entries.iter().map(|(id, _)| id.clone()).collect();
        Mci::new(SupportMultiset::new(entries)?, Matroid::from_vectors(ids, vectors)?, k)
    }

    pub fn support(&self) -> &SupportMultiset {
        &self.support
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dropped_loops(&self) -> &[String] {
        &self.dropped
    }
}

/// Sign of the determinant of the selected columns of `v`, in order.
pub fn chirotope(v: &[RVec], cols: &[usize]) -> Result<i32> {
    if cols.len() != v.len() {
        return Err(Error::NotABasis(format!("{} columns for {} rows", cols.len(), v.len())));
    }
    let width = v.first().map_or(0, |r| r.len());
    if let Some(c) = cols.iter().find(|&&c| c >= width) {
        return Err(Error::NotABasis(format!("column {} out of range", c)));
    }
    let m: Vec<RVec> = v.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
    let d = det_rat(&m);
    Ok(if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ivec, rat};

    fn rv(v: &[i64]) -> RVec {
        v.iter().map(|x| rat(*x, 1)).collect()
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{}", i)).collect()
    }

    #[test]
    fn ranks_of_small_configurations() {
        let par = Matroid::from_vectors(names(2), vec![rv(&[1, 1]), rv(&[1, 1])]).unwrap();
        assert_eq!(par.rank(&[]).unwrap(), 0);
        assert_eq!(par.rank(&["e0", "e1"]).unwrap(), 1);
        assert!(matches!(par.rank(&["x"]), Err(Error::UnknownElement(_))));
        let hex = Matroid::from_matrix(names(6), &[rv(&[1, 1, 1, 1, 1, 1]), rv(&[1, 1, 2, 2, 3, 3])]).unwrap();
        assert_eq!(hex.rank(&["e0", "e2", "e4"]).unwrap(), 2);
        assert_eq!(hex.rank(&["e0", "e1"]).unwrap(), 1);
    }

    #[test]
    fn truncation_of_generic_columns_is_uniform() {
        let cols = vec![rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[0, 0, 1]), rv(&[1, 2, 5])];
        let m = Matroid::from_vectors(names(4), cols).unwrap();
        assert_eq!(m.truncate(5).full_rank(), 3);
        let t = m.truncate(2);
        for a in 0..4 {
            for b in (a + 1)..4 {
                assert_eq!(t.rank_idx(&[a, b]), 2);
                for c in (b + 1)..4 {
                    assert_eq!(t.rank_idx(&[a, b, c]), 2);
                    assert_eq!(m.rank_idx(&[a, b, c]), 3);
                }
            }
        }
        assert_eq!(m.truncate(0).full_rank(), 0);
    }

    #[test]
    fn rank_table_round_trip_and_validation() {
        let m = Matroid::from_vectors(names(3), vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]).unwrap();
        let table = m.rank_table().unwrap();
        let t = Matroid::from_rank_table(names(3), &table).unwrap();
        for mask in 0..8usize {
            let s: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            assert_eq!(t.rank_idx(&s), m.rank_idx(&s));
        }
        let mut bad = table.clone();
        bad.insert(["e0".to_string(), "e1".to_string()].into_iter().collect(), 3);
        assert!(matches!(Matroid::from_rank_table(names(3), &bad), Err(Error::NotAMatroid(_))));
        let mut missing = table;
        missing.remove(&["e2".to_string()].into_iter().collect());
        assert!(matches!(Matroid::from_rank_table(names(3), &missing), Err(Error::NotAMatroid(_))));
    }

    #[test]
    fn loops_are_dropped() {
        let support = SupportMultiset::new(vec![
            ("a".into(), ivec(&[0])),
            ("z".into(), ivec(&[5])),
            ("b".into(), ivec(&[1])),
        ])
        .unwrap();
        let m = Matroid::from_vectors(
            vec!["a".into(), "z".into(), "b".into()],
            vec![rv(&[1]), rv(&[0]), rv(&[2])],
        )
        .unwrap();
        let mci = Mci::new(support, m, 1).unwrap();
        assert_eq!(mci.dropped_loops(), ["z".to_string()]);
        assert_eq!(mci.support().len(), 2);
        assert_eq!(mci.matroid().ground(), ["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let e = SupportMultiset::new(vec![("a".into(), ivec(&[0])), ("a".into(), ivec(&[1]))]);
        assert!(matches!(e, Err(Error::DuplicateId(_))));
    }

    #[test]
    fn chirotope_signs() {
        let id = vec![rv(&[1, 0]), rv(&[0, 1])];
        assert_eq!(chirotope(&id, &[0, 1]).unwrap(), 1);
        assert_eq!(chirotope(&id, &[1, 0]).unwrap(), -1);
        assert_eq!(chirotope(&id, &[0, 0]).unwrap(), 0);
        assert!(matches!(chirotope(&id, &[0]), Err(Error::NotABasis(_))));
    }
}
