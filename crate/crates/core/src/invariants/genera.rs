use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Int, Rat};
use crate::invariants::{count_valuation, volume_valuation, VirtualPolytope};
use crate::{Error, Result};

/// All `β ∈ ℤ^k_{≥0}` with every entry at most `cap`.
fn boxes(k: usize, cap: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|b| {
                (0..=cap).map(move |x| {
                    let mut c = b.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

fn ambient_of(ms: &[VirtualPolytope], n: Option<usize>) -> Result<usize> {
    let n = match (ms.first(), n) {
        (Some(m), _) => m.ambient(),
        (None, Some(n)) => n,
        (None, None) => return Err(Error::DimMismatch { expected: 1, got: 0 }),
    };
    if let Some(m) = ms.iter().find(|m| m.ambient() != n) {
        return Err(Error::DimMismatch { expected: n, got: m.ambient() });
    }
    Ok(n)
}

fn sign(e: u64) -> Int {
    if e.is_even() {
        Int::one()
    } else {
        -Int::one()
    }
}

/// `χ_p` of the complete intersection with Newton data `ms` in the torus of
/// dimension `n`:
///
/// `(−1)^n Σ_β (−1)^{Σβ} C(n, p+Σβ+k) Σ_{γ∈{0,1}^k} (−1)^{k−Σγ} #(−Σ(β_i+γ_i) m_i)`.
pub fn hirzebruch_chi_p(ms: &[VirtualPolytope], n: usize, p: i64) -> Result<Int> {
    let n = ambient_of(ms, Some(n))?;
    let k = ms.len();
    let max = n as i64 - k as i64;
    if p < 0 || p > max {
        return Err(Error::GenusIndexOutOfRange { p, max });
    }
    let room = (max - p) as u64;
    let mut total = Int::zero();
    for beta in boxes(k, room) {
        let sb: u64 = beta.iter().sum();
        if sb > room {
            continue;
        }
        let c = binomial(n as i64, p + (sb as i64) + k as i64);
        let mut inner = Int::zero();
        for gamma in boxes(k, 1) {
            let sg: u64 = gamma.iter().sum();
            let coeffs: Vec<u64> = beta.iter().zip(&gamma).map(|(b, g)| b + g).collect();
            let q = VirtualPolytope::combination(ms, &coeffs, n)?;
            inner += sign(k as u64 - sg) * count_valuation(&q.neg())?;
        }
        total += sign(sb) * c * inner;
    }
    Ok(sign(n as u64) * total)
}

/// `Σ_β (−1)^{Σβ} C(n+|β|−1, k+Σβ−1) Vol_Z(Σ β_i m_i)`, where `|β|` is the
/// number of nonzero entries.
pub fn euler_printed_sum(ms: &[VirtualPolytope], n: usize) -> Result<Int> {
    let n = ambient_of(ms, Some(n))?;
    let k = ms.len();
    if k > n {
        return Err(Error::NotZeroDimensional { codim: k, dim: n });
    }
    let slack = (n - k) as u64;
    let mut total = Int::zero();
    for beta in boxes(k, slack + 1) {
        let support = beta.iter().filter(|b| **b > 0).count() as u64;
        let sb: u64 = beta.iter().sum();
        if sb - support > slack {
            continue;
        }
        let c = binomial((n as u64 + support) as i64 - 1, (k as u64 + sb) as i64 - 1);
        if c.is_zero() {
            continue;
        }
        let q = VirtualPolytope::combination(ms, &beta, n)?;
        total += sign(sb) * c * volume_valuation(&q)?;
    }
    Ok(total)
}

/// Euler characteristic from the genus sum: the printed sum times `(−1)^k / n!`.
pub fn euler_from_genera(ms: &[VirtualPolytope], n: usize) -> Result<Int> {
    let raw = Rat::from_integer(euler_printed_sum(ms, n)?);
    let e = raw * Rat::from_integer(sign(ms.len() as u64)) / Rat::from_integer(factorial(n));
    if !e.is_integer() {
        return Err(Error::Internal(format!("non-integral Euler characteristic {}", e)));
    }
    Ok(e.to_integer())
}
