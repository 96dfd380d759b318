//! Reference computations that share no code with the engine.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

pub type P2 = [i64; 2];
pub type P3 = [i64; 3];

pub fn random_points<const N: usize>(rng: &mut impl Rng, count: usize, bound: i64) -> Vec<[i64; N]> {
    (0..count).map(|_| std::array::from_fn(|_| rng.gen_range(0..=bound))).collect()
}

pub fn minkowski<const N: usize>(a: &[[i64; N]], b: &[[i64; N]]) -> Vec<[i64; N]> {
    let mut out: Vec<[i64; N]> = a.iter().flat_map(|p| b.iter().map(move |q| std::array::from_fn(|i| p[i] + q[i]))).collect();
    out.sort();
    out.dedup();
    out
}

fn cross2(o: P2, a: P2, b: P2) -> i128 {
    (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128 - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
}

/// Andrew's monotone chain, counterclockwise, collinear points dropped.
pub fn hull2(pts: &[P2]) -> Vec<P2> {
    let mut p = pts.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut h: Vec<P2> = Vec::new();
    for pass in 0..2 {
        let start = h.len();
        for &q in &p {
            while h.len() >= start + 2 && cross2(h[h.len() - 2], h[h.len() - 1], q) <= 0 {
                h.pop();
            }
            h.push(q);
        }
        h.pop();
        if pass == 0 {
            p.reverse();
        }
    }
    h
}

/// Twice the area, i.e. the normalized volume of a polygon.
pub fn twice_area(pts: &[P2]) -> i128 {
    let h = hull2(pts);
    if h.len() < 3 {
        return 0;
    }
    (1..h.len() - 1).map(|i| cross2(h[0], h[i], h[i + 1])).sum()
}

fn sub3(a: P3, b: P3) -> [i128; 3] {
    [(a[0] - b[0]) as i128, (a[1] - b[1]) as i128, (a[2] - b[2]) as i128]
}

fn cross3(a: [i128; 3], b: [i128; 3]) -> [i128; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot3(a: [i128; 3], b: [i128; 3]) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Six times the volume of the hull, by brute-force facet enumeration and
/// coning from one extreme point.
pub fn six_volume(pts: &[P3]) -> i128 {
    let mut p = pts.to_vec();
    p.sort();
    p.dedup();
    let apex = p[0];
    let mut seen: Vec<([i128; 3], i128)> = Vec::new();
    let mut total = 0i128;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for k in j + 1..p.len() {
                let nrm = cross3(sub3(p[j], p[i]), sub3(p[k], p[i]));
                if nrm == [0, 0, 0] {
                    continue;
                }
                let g = gcd(gcd(nrm[0], nrm[1]), nrm[2]);
                let mut nrm = [nrm[0] / g, nrm[1] / g, nrm[2] / g];
                let side: Vec<i128> = p.iter().map(|&q| dot3(nrm, sub3(q, p[i]))).collect();
                if side.iter().any(|&s| s > 0) {
                    if side.iter().any(|&s| s < 0) {
                        continue;
                    }
                    nrm = [-nrm[0], -nrm[1], -nrm[2]];
                }
                let off = dot3(nrm, sub3(p[i], [0, 0, 0]));
                if seen.contains(&(nrm, off)) {
                    continue;
                }
                seen.push((nrm, off));
                // project the facet's points to the plane dropping the largest normal coordinate
                let drop = (0..3).max_by_key(|&c| nrm[c].abs()).unwrap();
                let keep: Vec<usize> = (0..3).filter(|&c| c != drop).collect();
                let on: Vec<P3> = p.iter().copied().filter(|&q| dot3(nrm, sub3(q, p[i])) == 0).collect();
                let flat: Vec<P2> = on.iter().map(|q| [q[keep[0]], q[keep[1]]]).collect();
                let ring = hull2(&flat);
                let lift = |f: P2| *on.iter().find(|q| q[keep[0]] == f[0] && q[keep[1]] == f[1]).unwrap();
                for t in 1..ring.len() - 1 {
                    let (a, b, c) = (lift(ring[0]), lift(ring[t]), lift(ring[t + 1]));
                    total += dot3(sub3(a, apex), cross3(sub3(b, apex), sub3(c, apex))).abs();
                }
            }
        }
    }
    total
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Σ_{∅≠S} (−1)^{n−|S|} Vol(Σ_S P_i)` with Euclidean volume.
pub fn mixed_volume2(ps: &[Vec<P2>; 2]) -> i128 {
    let doubled = twice_area(&minkowski(&ps[0], &ps[1])) - twice_area(&ps[0]) - twice_area(&ps[1]);
    assert!(doubled % 2 == 0);
    doubled / 2
}

pub fn mixed_volume3(ps: &[Vec<P3>; 3]) -> i128 {
    let mut total = 0i128;
    for mask in 1u32..8 {
        let mut sum: Vec<P3> = vec![[0, 0, 0]];
        for (i, p) in ps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = minkowski(&sum, p);
            }
        }
        let sign = if (3 - mask.count_ones()) % 2 == 0 { 1 } else { -1 };
        total += sign * six_volume(&sum);
    }
    // each six_volume is 3!·Vol; the alternating sum of Euclidean volumes is the count
    total / 6
}

/// Lattice points of a polygon: interior and boundary, by Pick's theorem.
pub fn pick(pts: &[P2]) -> (i128, i128) {
    let h = hull2(pts);
    let b: i128 = (0..h.len()).map(|i| {
        let (a, c) = (h[i], h[(i + 1) % h.len()]);
        gcd((c[0] - a[0]) as i128, (c[1] - a[1]) as i128)
    }).sum();
    let interior = (twice_area(pts) - b + 2) / 2;
    (interior, b)
}

/// Sign changes along the upper hull of the points `(a, d_a)`.
pub fn upper_hull_sign_changes(terms: &[(i64, i64, i8)]) -> usize {
    let mut t = terms.to_vec();
    t.sort();
    let mut h: Vec<(i64, i64, i8)> = Vec::new();
    for q in t {
        while h.len() >= 2 {
            let (o, a) = (h[h.len() - 2], h[h.len() - 1]);
            let cross = (a.0 - o.0) as i128 * (q.1 - o.1) as i128 - (a.1 - o.1) as i128 * (q.0 - o.0) as i128;
            if cross >= 0 {
                h.pop();
            } else {
                break;
            }
        }
        h.push(q);
    }
    h.windows(2).filter(|w| w[0].2 != w[1].2).count()
}

/// Univariate polynomials over ℚ, lowest degree first.
pub type UPoly = Vec<BigRational>;

fn trim(p: &mut UPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bi;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn derivative(p: &UPoly) -> UPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect()
}

fn sign_at_zero_plus(p: &UPoly) -> i32 {
    p.iter().find(|c| !c.is_zero()).map_or(0, |c| if c.is_positive() { 1 } else { -1 })
}

fn sign_at_infinity(p: &UPoly) -> i32 {
    p.last().map_or(0, |c| if c.is_positive() { 1 } else { -1 })
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let s: Vec<i32> = signs.filter(|&x| x != 0).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct roots in `(0, ∞)` by a Sturm sequence.
pub fn positive_roots(p: &UPoly) -> usize {
    let mut p = p.clone();
    trim(&mut p);
    while p.first().map_or(false, |c| c.is_zero()) {
        p.remove(0);
    }
    if p.len() < 2 {
        return 0;
    }
    let mut seq = vec![p.clone(), derivative(&p)];
    loop {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    variations(seq.iter().map(sign_at_zero_plus)) - variations(seq.iter().map(sign_at_infinity))
}

/// `Σ s_a t^{d_a} x^a`.
pub fn patchwork_poly(terms: &[(i64, i64, i8)], t: i64) -> UPoly {
    let deg = terms.iter().map(|x| x.0).max().unwrap() as usize;
    let mut p: UPoly = vec![BigRational::zero(); deg + 1];
    for &(a, d, s) in terms {
        p[a as usize] += BigRational::from_integer(BigInt::from(s) * BigInt::from(t).pow(d as u32));
    }
    p
}

/// Polynomials in `w` with integer coefficients, lowest degree first.
pub type WPoly = Vec<BigInt>;

fn wmul(a: &WPoly, b: &WPoly) -> WPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn wadd(a: &WPoly, b: &WPoly, sign: i64) -> WPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y * BigInt::from(sign);
    }
    out
}

fn wdet(m: &[Vec<WPoly>]) -> WPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total: WPoly = Vec::new();
    for j in 0..n {
        if m[0][j].iter().all(|c| c.is_zero()) {
            continue;
        }
        let minor: Vec<Vec<WPoly>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        total = wadd(&total, &wmul(&m[0][j], &wdet(&minor)), if j % 2 == 0 { 1 } else { -1 });
    }
    total
}

/// The Sylvester resultant in `z` of `f = Σ f_i(w) z^i` and `g = Σ g_j(w) z^j`.
pub fn sylvester(f: &[WPoly], g: &[WPoly]) -> WPoly {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut m: Vec<Vec<WPoly>> = vec![vec![Vec::new(); size]; size];
    for r in 0..dg {
        for (i, c) in f.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..df {
        for (j, c) in g.iter().rev().enumerate() {
            m[dg + r][r + j] = c.clone();
        }
    }
    wdet(&m)
}

/// Highest minus lowest exponent of a nonzero polynomial in `w`.
pub fn newton_length(p: &WPoly) -> usize {
    let lo = p.iter().position(|c| !c.is_zero()).unwrap();
    let hi = p.iter().rposition(|c| !c.is_zero()).unwrap();
    hi - lo
}

/// Components of `Σ s_a t^{d_a} x^a y^b = 0` in the positive quadrant,
/// traced by marching squares with step `h` in logarithmic coordinates
/// `x = t^u, y = t^v`, over a box holding every point where three terms tie.
pub fn traced_components(terms: &[([i64; 2], i64, i8)], t: f64, h: f64) -> usize {
    let lt = t.ln();
    let mut r: f64 = 1.0;
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            for k in j + 1..terms.len() {
                // d_i + a_i·x = d_j + a_j·x = d_k + a_k·x
                let (p, q, s) = (terms[i], terms[j], terms[k]);
                let m = [[(p.0[0] - q.0[0]) as f64, (p.0[1] - q.0[1]) as f64], [(p.0[0] - s.0[0]) as f64, (p.0[1] - s.0[1]) as f64]];
                let rhs = [(q.1 - p.1) as f64, (s.1 - p.1) as f64];
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                if det != 0.0 {
                    let u = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det;
                    let v = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det;
                    r = r.max(u.abs()).max(v.abs());
                }
            }
        }
    }
    let r = r + 3.0;
    let steps = (2.0 * r / h).ceil() as usize;
    let f = |u: f64, v: f64| -> f64 {
        let e: Vec<f64> = terms.iter().map(|(a, d, _)| *d as f64 + a[0] as f64 * u + a[1] as f64 * v).collect();
        let m = e.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        terms.iter().zip(&e).map(|((_, _, s), x)| *s as f64 * ((x - m) * lt).exp()).sum()
    };
    let n = steps + 1;
    let grid: Vec<bool> = (0..n * n).map(|k| f(-r + (k / n) as f64 * h, -r + (k % n) as f64 * h) > 0.0).collect();
    let at = |i: usize, j: usize| grid[i * n + j];
    // edges: horizontal (i,j)-(i+1,j) as 2(i n + j), vertical (i,j)-(i,j+1) as 2(i n + j) + 1
    let mut parent: Vec<usize> = (0..2 * n * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            p[r] = p[p[r]];
            r = p[r];
        }
        r
    }
    let mut crossing = vec![false; 2 * n * n];
    for i in 0..n {
        for j in 0..n {
            if i + 1 < n && at(i, j) != at(i + 1, j) {
                crossing[2 * (i * n + j)] = true;
            }
            if j + 1 < n && at(i, j) != at(i, j + 1) {
                crossing[2 * (i * n + j) + 1] = true;
            }
        }
    }
    for i in 0..steps {
        for j in 0..steps {
            let edges = [2 * (i * n + j), 2 * (i * n + j + 1), 2 * (i * n + j) + 1, 2 * ((i + 1) * n + j) + 1];
            let cut: Vec<usize> = edges.iter().copied().filter(|&e| crossing[e]).collect();
            let pairs: Vec<(usize, usize)> = match cut.len() {
                2 => vec![(cut[0], cut[1])],
                4 => {
                    // saddle: decide by the centre value which corners connect
                    let c = f(-r + (i as f64 + 0.5) * h, -r + (j as f64 + 0.5) * h) > 0.0;
                    if c == at(i, j) {
                        vec![(edges[0], edges[3]), (edges[1], edges[2])]
                    } else {
                        vec![(edges[0], edges[2]), (edges[1], edges[3])]
                    }
                }
                _ => vec![],
            };
            for (a, b) in pairs {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut roots: Vec<usize> = (0..2 * n * n).filter(|&e| crossing[e]).map(|e| find(&mut parent, e)).collect();
    roots.sort();
    roots.dedup();
    roots.len()
}

pub fn wpoly(c: &[i64]) -> WPoly {
    c.iter().map(|&x| BigInt::from(x)).collect()
}
