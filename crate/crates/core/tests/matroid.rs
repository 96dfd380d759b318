mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use tropeci::arith::{ivec, rat, IVec, RVec};
use tropeci::matroid::{bkk_number, tci_from_mci, Matroid, Mci, SupportMultiset};

use common::*;

fn ivecs<const N: usize>(pts: &[[i64; N]]) -> Vec<IVec> {
    pts.iter().map(|p| ivec(p)).collect()
}

fn support2() -> impl Strategy<Value = Vec<P2>> {
    prop::collection::vec(prop::array::uniform2(0i64..=3), 2..5)
}

fn bkk(supports: &[Vec<IVec>]) -> BigInt {
    bkk_number(&tci_from_mci(&Mci::classical(supports).unwrap()).unwrap()).unwrap()
}

/// Rank of a set of integer vectors by fraction-free elimination.
fn rank(vs: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = vs.iter().map(|v| v.iter().map(|x| *x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let (a, b) = (m[r][c], m[i][c]);
            for j in 0..cols {
                m[i][j] = m[i][j] * a - m[r][j] * b;
            }
        }
        r += 1;
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bkk_is_mixed_volume(a in support2(), b in support2()) {
        prop_assert_eq!(bkk(&[ivecs(&a), ivecs(&b)]), BigInt::from(mixed_volume2(&[a, b])));
    }

    #[test]
    fn bkk_is_symmetric_and_unimodular_invariant(a in support2(), b in support2(), s in -2i64..=2) {
        let shear = |pts: &[P2]| -> Vec<IVec> { pts.iter().map(|p| ivec(&[p[0] + s * p[1], p[1]])).collect() };
        let base = bkk(&[ivecs(&a), ivecs(&b)]);
        prop_assert_eq!(&bkk(&[ivecs(&b), ivecs(&a)]), &base);
        prop_assert_eq!(&bkk(&[shear(&a), shear(&b)]), &base);
    }

    #[test]
    fn matroid_rank_matches_elimination(cols in prop::collection::vec(prop::array::uniform3(-2i64..=2), 1..6)) {
        let ground: Vec<String> = (0..cols.len()).map(|i| format!("e{}", i)).collect();
        let vectors: Vec<RVec> = cols.iter().map(|c| c.iter().map(|x| rat(*x, 1)).collect()).collect();
        let m = Matroid::from_vectors(ground.clone(), vectors).unwrap();
        for mask in 0u32..(1 << cols.len()) {
            let set: Vec<usize> = (0..cols.len()).filter(|i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<i64>> = set.iter().map(|&i| cols[i].to_vec()).collect();
            prop_assert_eq!(m.rank_idx(&set), rank(&sub));
        }
        let table = m.rank_table().unwrap();
        let again = Matroid::from_rank_table(ground, &table).unwrap();
        prop_assert_eq!(again.rank_table(), Some(table));
        prop_assert_eq!(m.truncate(1).full_rank(), m.full_rank().min(1));
    }
}

#[test]
fn hexagon_system_has_three_solutions() {
    let ids = ["r0", "r1", "g0", "g1", "b0", "b1"];
    let pts = ivecs(&[[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]]);
    let support = SupportMultiset::new(ids.iter().map(|s| s.to_string()).zip(pts.clone()).collect()).unwrap();
    let cols = [[1, 1], [1, 1], [1, 2], [1, 2], [1, 3], [1, 3]];
    let m = Matroid::from_vectors(support.ids().to_vec(), cols.iter().map(|c| vec![rat(c[0], 1), rat(c[1], 1)]).collect()).unwrap();
    let tci = tci_from_mci(&Mci::new(support, m, 2).unwrap()).unwrap();
    assert!(tci.verify().unwrap());
    assert_eq!(bkk_number(&tci).unwrap(), BigInt::from(3));
    // the same support with generic coefficients
    assert_eq!(bkk(&[pts.clone(), pts]), BigInt::from(6));
}

#[test]
fn rank_table_must_be_a_matroid() {
    let ground = vec!["a".to_string(), "b".to_string()];
    let mut table = std::collections::BTreeMap::new();
    let set = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    table.insert(set(&[]), 0);
    table.insert(set(&["a"]), 1);
    table.insert(set(&["b"]), 1);
    table.insert(set(&["a", "b"]), 3);
    assert!(Matroid::from_rank_table(ground, &table).is_err());
}

#[test]
fn duplicate_ids_are_rejected() {
    let entries = vec![("x".to_string(), ivec(&[0, 0])), ("x".to_string(), ivec(&[1, 0]))];
    assert!(SupportMultiset::new(entries).is_err());
}
