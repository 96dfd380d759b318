mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use tropeci::arith::{ivec, rat, IVec, RVec};
use tropeci::lattice::{LatticePolytope, WeightedFan};
use tropeci::pl::{corner_locus, iterated_corner_locus, reconstruct_polytope, PLFunction};

use common::*;

fn poly<const N: usize>(pts: &[[i64; N]]) -> LatticePolytope {
    let v: Vec<IVec> = pts.iter().map(|p| ivec(p)).collect();
    LatticePolytope::hull(N, &v).unwrap()
}

fn h<const N: usize>(pts: &[[i64; N]]) -> PLFunction {
    PLFunction::support_function(&poly(pts))
}

fn rv(v: &[i64]) -> RVec {
    v.iter().map(|x| rat(*x, 1)).collect()
}

fn polygon() -> impl Strategy<Value = Vec<P2>> {
    prop::collection::vec(prop::array::uniform2(-3i64..=3), 3..7).prop_filter("full", |p| twice_area(p) > 0)
}

fn points3() -> impl Strategy<Value = Vec<P3>> {
    prop::collection::vec(prop::array::uniform3(-1i64..=1), 2..6)
}

fn degree(f: &WeightedFan) -> BigInt {
    let d = f.degree();
    assert!(d.is_integer());
    d.to_integer()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn support_function_is_max_of_pairings(pts in polygon(), x in prop::array::uniform2(-5i64..=5)) {
        let expected = pts.iter().map(|a| a[0] * x[0] + a[1] * x[1]).max().unwrap();
        prop_assert_eq!(h(&pts).value(&rv(&x)), rat(expected, 1));
    }

    #[test]
    fn corner_locus_is_balanced(pts in polygon(), q in polygon()) {
        let f = h(&pts).sub(&h(&q));
        let c = corner_locus(&f, &WeightedFan::whole_space(2)).unwrap();
        prop_assert!(c.is_balanced().unwrap());
    }

    #[test]
    fn self_intersection_is_volume(pts in polygon()) {
        let f = h(&pts);
        let c = iterated_corner_locus(&[f.clone(), f], &WeightedFan::whole_space(2)).unwrap();
        prop_assert_eq!(degree(&c), BigInt::from(twice_area(&pts)));
    }

    #[test]
    fn mixed_intersection_is_mixed_volume(a in polygon(), b in polygon()) {
        let c = iterated_corner_locus(&[h(&a), h(&b)], &WeightedFan::whole_space(2)).unwrap();
        prop_assert_eq!(degree(&c), BigInt::from(mixed_volume2(&[a, b])));
    }

    #[test]
    fn corner_loci_commute(a in points3(), b in points3()) {
        let r3 = WeightedFan::whole_space(3);
        let ab = iterated_corner_locus(&[h(&a), h(&b)], &r3).unwrap();
        let ba = iterated_corner_locus(&[h(&b), h(&a)], &r3).unwrap();
        prop_assert!(ab.same_cycle(&ba));
        prop_assert!(ab.is_balanced().unwrap());
    }

    #[test]
    fn corner_locus_is_additive(a in points3(), b in points3()) {
        let r3 = WeightedFan::whole_space(3);
        let sum = corner_locus(&h(&a).add(&h(&b)), &r3).unwrap();
        let parts = corner_locus(&h(&a), &r3).unwrap().add(&corner_locus(&h(&b), &r3).unwrap());
        prop_assert!(sum.same_cycle(&parts));
    }

    #[test]
    fn triple_intersection_is_mixed_volume(a in points3(), b in points3(), c in points3()) {
        let fan = iterated_corner_locus(&[h(&a), h(&b), h(&c)], &WeightedFan::whole_space(3)).unwrap();
        prop_assert_eq!(degree(&fan), BigInt::from(mixed_volume3(&[a, b, c])));
    }

    #[test]
    fn polytope_is_recovered_from_its_tropical_hypersurface(pts in points3()) {
        let p = poly(&pts);
        let c = corner_locus(&PLFunction::support_function(&p), &WeightedFan::whole_space(3)).unwrap();
        if p.dim() == 0 {
            prop_assert!(c.is_empty());
        } else {
            let q = reconstruct_polytope(&c).unwrap();
            // equal up to translation
            let shift: IVec = (0..3).map(|i| &p.vertices()[0][i] - &q.vertices()[0][i]).collect();
            let moved = q.translate(&shift);
            prop_assert_eq!(moved.vertices(), p.vertices());
        }
    }
}

#[test]
fn linear_functions_have_empty_corner_locus() {
    let f = PLFunction::linear(rv(&[3, -1, 2]));
    assert!(corner_locus(&f, &WeightedFan::whole_space(3)).unwrap().is_empty());
    assert!(f.value(&rv(&[1, 1, 1])) == rat(4, 1));
    assert!(PLFunction::zero(2).value(&rv(&[7, 7])).is_zero());
}

#[test]
fn explicit_function_must_be_continuous() {
    let f = h(&[[0, 0], [1, 0], [0, 1]]);
    let (cones, covectors) = f.to_explicit();
    let g = PLFunction::explicit(2, cones.clone(), covectors.clone()).unwrap();
    assert!(g.agrees_on(&f, &WeightedFan::whole_space(2)));
    let mut broken = covectors;
    broken[0][0] += rat(1, 1);
    assert!(PLFunction::explicit(2, cones, broken).is_err());
}
