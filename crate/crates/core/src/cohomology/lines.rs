//! Interesting pairs of line families in `ℝP³`.

use num_traits::{One, Zero};

use crate::arith::{dot_rr, nullspace, rank_rat, RVec, Rat};
use crate::{Error, Result};

/// A projective line, spanned by two homogeneous points of `ℚ^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLine {
    pub p: RVec,
    pub q: RVec,
}

impl ProjLine {
    /// Accepts homogeneous points in `ℚ^4` or affine points in `ℚ^3`.
    pub fn new(p: RVec, q: RVec) -> Result<ProjLine> {
        let lift = |mut v: RVec| -> Result<RVec> {
            match v.len() {
                3 => {
                    v.push(Rat::one());
                    Ok(v)
                }
                4 => Ok(v),
                d => Err(Error::DimMismatch { expected: 4, got: d }),
            }
        };
        let (p, q) = (lift(p)?, lift(q)?);
        if rank_rat(&[p.clone(), q.clone()], 4) < 2 {
            return Err(Error::Schema { path: "line".into(), message: "points do not span a line".into() });
        }
        Ok(ProjLine { p, q })
    }

    fn rows(&self) -> [RVec; 2] {
        [self.p.clone(), self.q.clone()]
    }

    fn contains(&self, a: &[Rat]) -> bool {
        rank_rat(&[self.p.clone(), self.q.clone(), a.to_vec()], 4) == 2
    }

    fn in_plane(&self, h: &[Rat]) -> bool {
        dot_rr(&self.p, h).is_zero() && dot_rr(&self.q, h).is_zero()
    }

    fn same(&self, o: &ProjLine) -> bool {
        o.contains(&self.p) && o.contains(&self.q)
    }

    fn meets(&self, o: &ProjLine) -> bool {
        let mut r = self.rows().to_vec();
        r.extend(o.rows());
        rank_rat(&r, 4) <= 3
    }

    /// Common point and common plane of two distinct meeting lines.
    fn point_and_plane(&self, o: &ProjLine) -> Option<(RVec, RVec)> {
        if self.same(o) || !self.meets(o) {
            return None;
        }
        let mut r = self.rows().to_vec();
        r.extend(o.rows());
        let plane = normalize(nullspace(&r, 4).pop()?);
        // x = s p + t q on self with x in span(o): solve via the plane equations of o
        let eqs = nullspace(&o.rows(), 4);
        let coeffs: Vec<RVec> = eqs.iter().map(|h| vec![dot_rr(&self.p, h), dot_rr(&self.q, h)]).collect();
        let st = nullspace(&coeffs, 2).pop()?;
        let point: RVec = (0..4).map(|i| &st[0] * &self.p[i] + &st[1] * &self.q[i]).collect();
        Some((normalize(point), plane))
    }
}

fn normalize(v: RVec) -> RVec {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x / &lead).collect()
        }
        None => v,
    }
}

fn distinct(ls: &[ProjLine]) -> Vec<ProjLine> {
    let mut out: Vec<ProjLine> = Vec::new();
    for l in ls {
        if !out.iter().any(|o| o.same(l)) {
            out.push(l.clone());
        }
    }
    out
}

fn connected(ls: &[ProjLine]) -> bool {
    let mut seen = vec![false; ls.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..ls.len() {
            if !seen[j] && ls[i].meets(&ls[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineClassification {
    /// First matching type, 1 to 6.
    pub tag: u8,
    /// Whether the first match needs `L` and `R` interchanged.
    pub swapped: bool,
    /// All matching `(type, swapped)` pairs.
    pub matches: Vec<(u8, bool)>,
}

struct Candidates {
    points: Vec<RVec>,
    planes: Vec<RVec>,
}

fn candidates(all: &[ProjLine]) -> Candidates {
    let mut points: Vec<RVec> = Vec::new();
    let mut planes: Vec<RVec> = Vec::new();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if let Some((a, h)) = all[i].point_and_plane(&all[j]) {
                if !points.contains(&a) {
                    points.push(a);
                }
                if !planes.contains(&h) {
                    planes.push(h);
                }
            }
        }
    }
    Candidates { points, planes }
}

fn type1(all: &[ProjLine], c: &Candidates) -> bool {
    all.len() == 1 || c.points.iter().any(|a| all.iter().all(|l| l.contains(a)))
}

fn type2(all: &[ProjLine], c: &Candidates) -> bool {
    all.len() == 1 || c.planes.iter().any(|h| all.iter().all(|l| l.in_plane(h)))
}

fn on_plane(a: &[Rat], h: &[Rat]) -> bool {
    dot_rr(a, h).is_zero()
}

fn type3(ls: &[ProjLine], rs: &[ProjLine], c: &Candidates) -> bool {
    c.points.iter().any(|a| {
        ls.iter().all(|l| l.contains(a))
            && c.planes.iter().any(|h| {
                on_plane(a, h)
                    && ls.iter().all(|l| l.in_plane(h))
                    && rs.iter().all(|r| r.in_plane(h) || r.contains(a))
            })
    })
}

fn type4(ls: &[ProjLine], rs: &[ProjLine], c: &Candidates) -> bool {
    for (i, h1) in c.planes.iter().enumerate() {
        for h2 in &c.planes[i..] {
            let pts: Vec<&RVec> = c.points.iter().filter(|a| on_plane(a, h1) && on_plane(a, h2)).collect();
            for a1 in &pts {
                for a2 in &pts {
                    let l_ok = ls.iter().all(|l| (l.in_plane(h1) && l.contains(a1)) || (l.in_plane(h2) && l.contains(a2)));
                    let r_ok = rs.iter().all(|r| (r.in_plane(h1) && r.contains(a2)) || (r.in_plane(h2) && r.contains(a1)));
                    if l_ok && r_ok {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn type6(ls: &[ProjLine], rs: &[ProjLine]) -> bool {
    ls.len() == 2 && !ls[0].meets(&ls[1]) && rs.iter().all(|r| r.meets(&ls[0]) && r.meets(&ls[1]))
}

/// Classifies an interesting pair of line families.
pub fn classify_line_pair(ls: &[ProjLine], rs: &[ProjLine]) -> Result<LineClassification> {
    if ls.is_empty() || rs.is_empty() {
        return Err(Error::NotInteresting("empty family".into()));
    }
    let (ls, rs) = (distinct(ls), distinct(rs));
    for (i, l) in ls.iter().enumerate() {
        for (j, r) in rs.iter().enumerate() {
            if !l.meets(r) {
                return Err(Error::NotInteresting(format!("L{} and R{} are disjoint", i, j)));
            }
        }
    }
    let all = distinct(&[ls.clone(), rs.clone()].concat());
    let c = candidates(&all);
    let mut matches = Vec::new();
    if type1(&all, &c) {
        matches.push((1, false));
    }
    if type2(&all, &c) {
        matches.push((2, false));
    }
    for (t, f) in [
        (3u8, &type3 as &dyn Fn(&[ProjLine], &[ProjLine], &Candidates) -> bool),
        (4, &type4),
    ] {
        if f(&ls, &rs, &c) {
            matches.push((t, false));
        }
        if f(&rs, &ls, &c) {
            matches.push((t, true));
        }
    }
    if ls.len() == 1 {
        matches.push((5, false));
    }
    if rs.len() == 1 {
        matches.push((5, true));
    }
    if type6(&ls, &rs) {
        matches.push((6, false));
    }
    if type6(&rs, &ls) {
        matches.push((6, true));
    }
    // connectivity is only needed when no type applies: type 6 itself has a
    // disconnected family
    let Some(&(tag, swapped)) = matches.first() else {
        if !connected(&ls) && !connected(&rs) {
            return Err(Error::NotInteresting("neither family has a connected union".into()));
        }
        return Err(Error::Internal("interesting pair fits none of the six types".into()));
    };
    Ok(LineClassification { tag, swapped, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn pt(v: &[i64]) -> RVec {
        v.iter().map(|x| rat(*x, 1)).collect()
    }

    fn line(a: &[i64], b: &[i64]) -> ProjLine {
        ProjLine::new(pt(a), pt(b)).unwrap()
    }

    #[test]
    fn concurrent_lines() {
        let ls = [line(&[0, 0, 0], &[1, 0, 0]), line(&[0, 0, 0], &[0, 1, 0])];
        let rs = [line(&[0, 0, 0], &[0, 0, 1]), line(&[0, 0, 0], &[1, 1, 1])];
        let c = classify_line_pair(&ls, &rs).unwrap();
        assert_eq!((c.tag, c.swapped), (1, false));
    }

    #[test]
    fn coplanar_lines() {
        let ls = [line(&[0, 0, 0], &[1, 0, 0]), line(&[0, 1, 0], &[1, 1, 0])];
        let rs = [line(&[0, 0, 0], &[0, 1, 0]), line(&[2, 0, 0], &[3, 1, 0])];
        let c = classify_line_pair(&ls, &rs).unwrap();
        assert_eq!(c.tag, 2);
    }

    #[test]
    fn pencil_and_plane() {
        // L: a pencil through the origin in z = 0; R: one line in z = 0 and one through the origin
        let ls = [line(&[0, 0, 0], &[1, 0, 0]), line(&[0, 0, 0], &[0, 1, 0])];
        let rs = [line(&[1, 0, 0], &[0, 1, 0]), line(&[0, 0, 0], &[0, 0, 1])];
        let c = classify_line_pair(&ls, &rs).unwrap();
        assert_eq!((c.tag, c.swapped), (3, false));
    }

    #[test]
    fn double_pencil() {
        // P1: z = 0, P2: y = 0, a1 = origin, a2 = (1,0,0)
        let ls = [line(&[0, 0, 0], &[1, 1, 0]), line(&[1, 0, 0], &[1, 0, 1]), line(&[0, 0, 0], &[1, 0, 0])];
        let rs = [line(&[1, 0, 0], &[0, 1, 0]), line(&[0, 0, 0], &[1, 0, 1])];
        let c = classify_line_pair(&ls, &rs).unwrap();
        assert_eq!(c.tag, 4);
    }

    #[test]
    fn single_line_and_two_skew_lines() {
        let l = line(&[0, 0, 0], &[1, 0, 0]);
        let rs = [line(&[0, 0, 0], &[0, 1, 1]), line(&[1, 0, 0], &[1, 1, 3]), line(&[2, 0, 0], &[3, 5, 7])];
        let c = classify_line_pair(&[l.clone()], &rs).unwrap();
        assert_eq!((c.tag, c.swapped), (5, false));
        // two skew lines with three common transversals
        let m = line(&[0, 0, 1], &[0, 1, 1]);
        let ts = [line(&[0, 0, 0], &[0, 0, 1]), line(&[1, 0, 0], &[0, 1, 1]), line(&[2, 0, 0], &[0, 3, 1])];
        let c = classify_line_pair(&[l, m], &ts).unwrap();
        assert_eq!(c.tag, 6);
    }

    #[test]
    fn disjoint_lines_are_rejected() {
        let ls = [line(&[0, 0, 0], &[1, 0, 0])];
        let rs = [line(&[0, 0, 1], &[0, 1, 1])];
        assert!(matches!(classify_line_pair(&ls, &rs), Err(Error::NotInteresting(_))));
        let skew = [line(&[0, 0, 0], &[1, 0, 0]), line(&[0, 0, 1], &[0, 1, 1])];
        assert!(matches!(classify_line_pair(&skew, &rs), Err(Error::NotInteresting(_))));
        // three lines of one ruling of x y = z w and two of the other ruling
        let hyp = |a: i64| ProjLine::new(pt(&[a, 0, 1, 0]), pt(&[0, 1, 0, a])).unwrap();
        let other = |b: i64| ProjLine::new(pt(&[0, 1, b, 0]), pt(&[b, 0, 0, 1])).unwrap();
        let r = classify_line_pair(&[hyp(1), hyp(2), hyp(3)], &[other(1), other(2)]);
        assert_eq!(r.unwrap().tag, 6);
        let r = classify_line_pair(&[hyp(1), hyp(2), hyp(3)], &[other(1), other(2), other(3)]);
        assert!(matches!(r, Err(Error::NotInteresting(_))), "{:?}", r);
    }
}
