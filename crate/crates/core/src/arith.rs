//! Exact integer and rational linear algebra used throughout the kernel.
//!
//! Everything is arbitrary precision. Vectors are plain `Vec`s; matrices are
//! slices of rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IVec = Vec<Int>;
pub type RVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn to_rvec(v: &[Int]) -> RVec {
    v.iter().map(rat_int).collect()
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

pub fn is_zero_vec<T: Zero>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[Int]) -> Result<IVec> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Primitive integer vector on the ray through a rational vector; zero stays zero.
pub fn primitive_of_rat(v: &[Rat]) -> IVec {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: IVec = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    primitive(&scaled).unwrap_or(scaled)
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_ir(a: &[Int], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + y * rat_int(x))
}

pub fn dot_rr(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add_iv(a: &[Int], b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_iv(a: &[Int], b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_iv(c: &Int, a: &[Int]) -> IVec {
    a.iter().map(|x| c * x).collect()
}

pub fn neg_iv(a: &[Int]) -> IVec {
    a.iter().map(|x| -x).collect()
}

pub fn add_rv(a: &[Rat], b: &[Rat]) -> RVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_rv(a: &[Rat], b: &[Rat]) -> RVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_rv(c: &Rat, a: &[Rat]) -> RVec {
    a.iter().map(|x| c * x).collect()
}

/// Sign as -1, 0, +1.
pub fn sign_of<T: Signed>(x: &T) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Reduced row echelon form. Returns the nonzero rows and the pivot columns.
pub fn rref(rows: &[RVec], ncols: usize) -> (Vec<RVec>, Vec<usize>) {
    let mut m: Vec<RVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_rat(rows: &[RVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

pub fn rank_int(rows: &[IVec], ncols: usize) -> usize {
    let r: Vec<RVec> = rows.iter().map(|v| to_rvec(v)).collect();
    rank_rat(&r, ncols)
}

/// Basis of `{x : rows · x = 0}` over the rationals.
pub fn nullspace(rows: &[RVec], ncols: usize) -> Vec<RVec> {
    let (m, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Integer rows spanning the orthogonal complement of the span of `vectors`.
pub fn orthogonal_equations(vectors: &[IVec], n: usize) -> Vec<IVec> {
    let rows: Vec<RVec> = vectors.iter().map(|v| to_rvec(v)).collect();
    nullspace(&rows, n).iter().map(|v| primitive_of_rat(v)).collect()
}

/// Column-style Hermite reduction: returns a unimodular `u` (as columns) such
/// that `a * u` is lower echelon; the trailing columns of `u` past the rank
/// form a lattice basis of the integer kernel of `a`.
fn column_hermite(a: &[IVec], n: usize) -> (Vec<IVec>, usize) {
    let mut m: Vec<IVec> = a.to_vec();
    // u stored as columns
    let mut u: Vec<IVec> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    let mut col = 0;
    for row in 0..m.len() {
        if col == n {
            break;
        }
        loop {
            // pick the column (>= col) with smallest nonzero |entry| in this row
            let mut best: Option<usize> = None;
            for c in col..n {
                if !m[row][c].is_zero()
                    && best.map_or(true, |b| m[row][c].abs() < m[row][b].abs())
                {
                    best = Some(c);
                }
            }
            let Some(b) = best else { break };
            swap_cols(&mut m, &mut u, col, b);
            let mut done = true;
            for c in (col + 1)..n {
                if !m[row][c].is_zero() {
                    let q = m[row][c].div_floor(&m[row][col]);
                    add_col_multiple(&mut m, &mut u, c, col, &-q);
                    if !m[row][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                col += 1;
                break;
            }
        }
    }
    (u, col)
}

fn swap_cols(m: &mut [IVec], u: &mut [IVec], a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in m.iter_mut() {
        r.swap(a, b);
    }
    u.swap(a, b);
}

// column[target] += f * column[src]
fn add_col_multiple(m: &mut [IVec], u: &mut [IVec], target: usize, src: usize, f: &Int) {
    for r in m.iter_mut() {
        let t = f * &r[src];
        r[target] += t;
    }
    let s = u[src].clone();
    for (x, y) in u[target].iter_mut().zip(s.iter()) {
        *x += f * y;
    }
}

/// Lattice basis of `ℤ^n ∩ ker(rows)`.
pub fn integer_kernel(rows: &[IVec], n: usize) -> Vec<IVec> {
    if rows.is_empty() {
        return (0..n)
            .map(|j| (0..n).map(|i| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
    }
    let (u, r) = column_hermite(rows, n);
    u[r..].to_vec()
}

/// Lattice basis of the saturated lattice `ℤ^n ∩ span(vectors)`.
pub fn saturated_basis(vectors: &[IVec], n: usize) -> Vec<IVec> {
    let eqs = orthogonal_equations(vectors, n);
    integer_kernel(&eqs, n)
}

/// Row Hermite reduction of an integer matrix; returns nonzero echelon rows.
pub fn row_echelon_int(rows: &[IVec], ncols: usize) -> Vec<IVec> {
    let mut m: Vec<IVec> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero() && best.map_or(true, |b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in (r + 1)..m.len() {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    let pr = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(pr.iter()) {
                        *x -= &q * y;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                r += 1;
                break;
            }
        }
    }
    m.truncate(r);
    m.retain(|row| !is_zero_vec(row));
    m
}

/// Coordinates of `v` in terms of `basis` (any solution), if `v` lies in the span.
pub fn solve_in_span(basis: &[RVec], v: &[Rat]) -> Option<RVec> {
    let n = v.len();
    let k = basis.len();
    // augmented system: rows = coordinates, columns = basis vectors + rhs
    let rows: Vec<RVec> = (0..n)
        .map(|i| {
            let mut r: RVec = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][k].clone();
    }
    Some(x)
}

/// Index of the lattice generated by `gens` inside its saturation.
/// Returns zero when `gens` is empty-rank (the index of the zero lattice in
/// the zero lattice is reported as 1).
pub fn lattice_index(gens: &[IVec], n: usize) -> Int {
    let sat = saturated_basis(gens, n);
    if sat.is_empty() {
        return Int::one();
    }
    let sat_r: Vec<RVec> = sat.iter().map(|v| to_rvec(v)).collect();
    let coords: Vec<IVec> = gens
        .iter()
        .map(|g| {
            let c = solve_in_span(&sat_r, &to_rvec(g)).expect("generator lies in its span");
            c.iter().map(|x| x.to_integer()).collect()
        })
        .collect();
    let ech = row_echelon_int(&coords, sat.len());
    if ech.len() < sat.len() {
        return Int::zero();
    }
    let mut prod = Int::one();
    for (i, row) in ech.iter().enumerate() {
        prod *= row[i].abs();
    }
    prod
}

pub fn det_rat(m: &[RVec]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in (c + 1)..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    det
}

pub fn det_int(m: &[IVec]) -> Int {
    let r: Vec<RVec> = m.iter().map(|v| to_rvec(v)).collect();
    det_rat(&r).to_integer()
}

/// Binomial coefficient with `(a choose b) = 0` unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> Int {
    if b < 0 || a < 0 || b > a {
        return Int::zero();
    }
    let b = b.min(a - b);
    let mut r = Int::one();
    for i in 0..b {
        r = r * Int::from(a - i) / Int::from(i + 1);
    }
    r
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&ivec(&[4, -6])).unwrap(), ivec(&[2, -3]));
        assert_eq!(primitive(&ivec(&[1, 0, 0])).unwrap(), ivec(&[1, 0, 0]));
        assert_eq!(primitive(&ivec(&[0, -5])).unwrap(), ivec(&[0, -1]));
        assert_eq!(primitive(&ivec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn kernel_and_saturation() {
        // x + y + z = 0 in Z^3
        let k = integer_kernel(&[ivec(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(v, &ivec(&[1, 1, 1])).is_zero());
        }
        // saturation of span{(2,2)} is spanned by (1,1)
        let s = saturated_basis(&[ivec(&[2, 2])], 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), ivec(&[1, 1]));
        assert_eq!(lattice_index(&[ivec(&[2, 2])], 2), int(2));
        assert_eq!(lattice_index(&[ivec(&[1, 0]), ivec(&[1, 2])], 2), int(2));
        assert_eq!(lattice_index(&[ivec(&[1, 0]), ivec(&[0, 1])], 2), int(1));
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn determinants() {
        let m = vec![ivec(&[1, 2]), ivec(&[3, 4])];
        assert_eq!(det_int(&m), int(-2));
    }
}
