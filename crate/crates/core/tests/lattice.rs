mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use tropeci::arith::{ivec, IVec};
use tropeci::lattice::LatticePolytope;

use common::*;

fn poly<const N: usize>(pts: &[[i64; N]]) -> LatticePolytope {
    let v: Vec<IVec> = pts.iter().map(|p| ivec(p)).collect();
    LatticePolytope::hull(N, &v).unwrap()
}

fn polygon() -> impl Strategy<Value = Vec<P2>> {
    prop::collection::vec(prop::array::uniform2(-4i64..=4), 3..8).prop_filter("full", |p| twice_area(p) > 0)
}

fn polytope3() -> impl Strategy<Value = Vec<P3>> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 4..8).prop_filter("full", |p| six_volume(p) > 0)
}

fn big(x: i128) -> BigInt {
    BigInt::from(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polygon_volume_matches_shoelace(pts in polygon()) {
        let p = poly(&pts);
        prop_assert_eq!(p.dim(), 2);
        prop_assert_eq!(p.normalized_volume(), big(twice_area(&pts)));
        prop_assert_eq!(p.vertices().len(), hull2(&pts).len());
    }

    #[test]
    fn polygon_counts_match_pick(pts in polygon()) {
        let p = poly(&pts);
        let (interior, boundary) = pick(&pts);
        prop_assert_eq!(p.interior_lattice_points(), big(interior));
        prop_assert_eq!(p.lattice_points(), big(interior + boundary));
        prop_assert_eq!(p.enumerate_lattice_points().len() as i128, interior + boundary);
    }

    #[test]
    fn polytope3_volume_matches_facets(pts in polytope3()) {
        prop_assert_eq!(poly(&pts).normalized_volume(), big(six_volume(&pts)));
    }

    #[test]
    fn minkowski_sum_matches_pointwise_sum(a in polygon(), b in polygon()) {
        let s = poly(&a).minkowski_sum(&poly(&b)).unwrap();
        prop_assert_eq!(s.normalized_volume(), big(twice_area(&minkowski(&a, &b))));
        let expected = poly(&minkowski(&a, &b));
        prop_assert_eq!(s.vertices(), expected.vertices());
    }

    #[test]
    fn dilation_scales_volume(pts in polytope3(), t in 0i64..4) {
        let p = poly(&pts);
        prop_assert_eq!(p.dilate(&BigInt::from(t)).normalized_volume(), p.normalized_volume() * BigInt::from(t.pow(3)));
    }

    #[test]
    fn membership_by_brute_force(pts in polygon(), x in -5i64..=5, y in -5i64..=5) {
        let p = poly(&pts);
        let h = hull2(&pts);
        // inside iff on the left of (or on) every edge of the counterclockwise hull
        let inside = (0..h.len()).all(|i| {
            let (a, b) = (h[i], h[(i + 1) % h.len()]);
            (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) >= 0
        });
        prop_assert_eq!(p.contains(&ivec(&[x, y])), inside);
    }
}

#[test]
fn segment_and_point() {
    let s = poly(&[[0, 0], [2, 4]]);
    assert_eq!(s.dim(), 1);
    assert_eq!(s.lattice_length(), big(2));
    assert_eq!(s.lattice_points(), big(3));
    assert_eq!(s.normalized_volume(), big(0));
    let o = LatticePolytope::origin(3);
    assert_eq!(o.dim(), 0);
    assert_eq!(o.lattice_points(), big(1));
}

#[test]
fn empty_hull_is_rejected() {
    assert!(LatticePolytope::hull(2, &[]).is_err());
}
