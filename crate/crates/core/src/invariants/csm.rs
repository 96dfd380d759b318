use num_traits::Zero;

use crate::arith::{Int, Rat};
use crate::lattice::WeightedFan;
use crate::matroid::Tci;
use crate::pl::corner_locus;
use crate::{Error, Result};

/// Classes of codimension `k..=n`, each a balanced weighted fan.
#[derive(Clone, Debug)]
pub struct CharClassList {
    pub classes: Vec<(usize, WeightedFan)>,
}

impl CharClassList {
    pub fn class(&self, codim: usize) -> Option<&WeightedFan> {
        self.classes.iter().find(|(c, _)| *c == codim).map(|(_, f)| f)
    }
}

/// Exponent vectors in `ℤ^k_{≥0}` with the given sum.
fn compositions(k: usize, total: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(k - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The expansion of `∏ δm_i/(1 + δm_i)` as iterated corner loci of `ℝ^n`.
/// Every monomial contains each `m_i` once, so it is evaluated on `T_k` with
/// the remaining powers applied afterwards.
pub fn tropical_csm(tci: &Tci) -> Result<CharClassList> {
    let n = tci.ambient();
    let k = tci.functions.len();
    if tci.collapsed_at.is_some() {
        let classes = (tci.codim..=n).map(|d| (d, WeightedFan::empty(n, n - d))).collect();
        return Ok(CharClassList { classes });
    }
    let mut classes = vec![(k, tci.last().clone())];
    if k == 0 {
        return Ok(CharClassList { classes });
    }
    for d in (k + 1)..=n {
        let extra = d - k;
        let sign = if extra % 2 == 0 { Rat::from_integer(Int::from(1)) } else { Rat::from_integer(Int::from(-1)) };
        let mut acc = WeightedFan::empty(n, n - d);
        for e in compositions(k, extra) {
            let mut fan = tci.last().clone();
            for (i, &times) in e.iter().enumerate() {
                for _ in 0..times {
                    fan = corner_locus(&tci.functions[i], &fan)?;
                }
            }
            acc = acc.add(&fan.scaled(&sign));
        }
        classes.push((d, acc));
    }
    Ok(CharClassList { classes })
}

/// The weight of the codimension-`n` class.
pub fn euler_from_csm(tci: &Tci) -> Result<Int> {
    let n = tci.ambient();
    let list = tropical_csm(tci)?;
    let w = list.class(n).map_or(Rat::zero(), |f| f.degree());
    if !w.is_integer() {
        return Err(Error::Internal(format!("non-integral Euler characteristic {}", w)));
    }
    Ok(w.to_integer())
}
