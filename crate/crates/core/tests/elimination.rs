mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use tropeci::arith::{ivec, IVec};
use tropeci::elimination::{eliminant_polytope, ProjectionSplit};
use tropeci::matroid::Mci;

use common::*;

/// Terms `(z-exponent, w-exponent, coefficient)` as a list of `w`-polynomials
/// indexed by the power of `z`.
fn by_z(terms: &[(usize, usize, i64)]) -> Vec<WPoly> {
    let dz = terms.iter().map(|t| t.0).max().unwrap();
    let dw = terms.iter().map(|t| t.1).max().unwrap();
    let mut f = vec![vec![BigInt::from(0); dw + 1]; dz + 1];
    for &(i, j, c) in terms {
        f[i][j] += c;
    }
    f
}

/// Exponents `(z, w)` of two or three terms, with a constant term in `z` and
/// positive `z`-degree.
fn exponents() -> impl Strategy<Value = Vec<(usize, usize)>> {
    (prop::collection::btree_set((1usize..=2, 0usize..=2), 1..=2), 0usize..=2).prop_map(|(m, w0)| {
        let mut t: Vec<(usize, usize)> = m.into_iter().collect();
        t.push((0, w0));
        t
    })
}

fn coefficients() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-97i64..=-1, 1i64..=97], 3)
}

fn support(e: &[(usize, usize)]) -> Vec<IVec> {
    e.iter().map(|t| ivec(&[t.0 as i64, t.1 as i64])).collect()
}

fn terms(e: &[(usize, usize)], c: &[i64]) -> Vec<(usize, usize, i64)> {
    e.iter().zip(c).map(|(&(i, j), &c)| (i, j, c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // special coefficients only shrink the resultant, so the widest of a few
    // random draws is the generic span
    #[test]
    fn eliminant_length_is_resultant_span(
        f in exponents(),
        g in exponents(),
        draws in prop::collection::vec((coefficients(), coefficients()), 4),
    ) {
        let span = draws
            .iter()
            .map(|(cf, cg)| sylvester(&by_z(&terms(&f, cf)), &by_z(&terms(&g, cg))))
            .filter(|r| r.iter().any(|c| c != &BigInt::from(0)))
            .map(|r| newton_length(&r))
            .max();
        prop_assume!(span.is_some());
        let mci = Mci::classical(&[support(&f), support(&g)]).unwrap();
        let r = eliminant_polytope(&mci, ProjectionSplit::new(2, 1).unwrap(), true).unwrap();
        prop_assert_eq!(r.agree, Some(true));
        prop_assert_eq!(r.polytope.lattice_length(), BigInt::from(span.unwrap()));
    }
}

#[test]
fn hypersurface_projects_to_its_shadow() {
    // eliminating nothing from a plane curve in 3-space keeps a polygon
    let mci = Mci::classical(&[
        vec![ivec(&[0, 0, 0]), ivec(&[1, 0, 0]), ivec(&[0, 1, 0])],
        vec![ivec(&[0, 0, 0]), ivec(&[0, 0, 1]), ivec(&[1, 1, 0])],
    ])
    .unwrap();
    let r = eliminant_polytope(&mci, ProjectionSplit::new(3, 2).unwrap(), true).unwrap();
    assert_eq!(r.agree, Some(true));
    assert_eq!(r.polytope.ambient(), 2);
}

#[test]
fn split_must_keep_some_coordinates() {
    assert!(ProjectionSplit::new(2, 3).is_err());
    assert!(ProjectionSplit::new(2, 0).is_err());
    assert_eq!(ProjectionSplit::new(3, 3).unwrap().eliminated, 0);
}
