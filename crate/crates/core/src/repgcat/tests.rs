use super::*;
use crate::algebra::GroupTable;
use crate::exactla::{PrimeField, Rationals};
use crate::gvcore::coherence::check_coherence;
use crate::gvcore::duality::{check_phi_psi, check_pivotal, check_snakes};
use crate::gvcore::Report;

fn assert_all_pass(r: &Report) {
    let fails: Vec<String> = r.failures().map(|l| l.to_string()).collect();
    assert!(fails.is_empty(), "{} failures, first: {:?}", fails.len(), &fails[..fails.len().min(5)]);
}

fn c3_over_f7() -> (RepCat<PrimeField>, Vec<ObjId>) {
    let f = PrimeField::new(7).unwrap();
    let c = RepCat::new(&f, GroupTable::cyclic(3)).unwrap();
    let w = c.add_rep_generated("w", &[(1, Mat::from_i64(&f, &[vec![2]]))]).unwrap();
    let w2 = c.add_rep_generated("w2", &[(1, Mat::from_i64(&f, &[vec![4]]))]).unwrap();
    (c, vec![ObjId(0), w, w2])
}

/// Standard representation of S3: permutation action on the sum-zero plane
/// with basis e0 - e1, e1 - e2.
fn standard_s3(c: &RepCat<Rationals>) -> ObjId {
    let q = Rationals;
    let basis = Mat::from_i64(&q, &[vec![1, 0], vec![-1, 1], vec![0, -1]]);
    // element order of GroupTable::symmetric: image lists in lexicographic order
    let action = permutations_s3()
        .iter()
        .map(|p| basis.solve(&Mat::permutation(&q, p).mul(&basis)).unwrap())
        .collect();
    c.add_rep("V", action).unwrap()
}

fn permutations_s3() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]]
}

fn sign_s3(c: &RepCat<Rationals>) -> ObjId {
    let q = Rationals;
    let signs = [1, -1, -1, 1, 1, -1];
    c.add_rep("sgn", signs.iter().map(|&s| Mat::from_i64(&q, &[vec![s]])).collect()).unwrap()
}

#[test]
fn modular_characteristic_is_rejected() {
    let f = PrimeField::new(3).unwrap();
    assert!(matches!(RepCat::new(&f, GroupTable::cyclic(3)), Err(Error::ModularCharacteristic(3))));
    assert!(RepCat::new(&PrimeField::new(2).unwrap(), GroupTable::quaternion()).is_err());
}

#[test]
fn dims_and_fixed_vectors() {
    let (c, objs) = c3_over_f7();
    assert_eq!(c.dim(c.tensor(objs[1], objs[2])), 1);
    assert!(c.hom_space(c.unit(), objs[1]).is_empty());
    // w ⊗ w2 is trivial
    assert_eq!(c.hom_space(c.unit(), c.tensor(objs[1], objs[2])).len(), 1);
    assert_eq!(c.dual(c.dual(objs[1])), objs[1]);
}

#[test]
fn bad_representations_are_rejected() {
    let f = PrimeField::new(7).unwrap();
    let c = RepCat::new(&f, GroupTable::cyclic(3)).unwrap();
    // 3 has order 6 mod 7, so g ↦ 3 is not a C3 representation
    assert!(c.add_rep_generated("bad", &[(1, Mat::from_i64(&f, &[vec![3]]))]).is_err());
    assert!(c.add_rep("bad", vec![Mat::identity(&f, 1); 2]).is_err());
}

#[test]
fn c3_over_f7_passes() {
    let (c, objs) = c3_over_f7();
    assert_all_pass(&check_coherence(&c, &objs));
    assert_all_pass(&check_snakes(&c, &objs));
    assert_all_pass(&check_phi_psi(&c, &objs, 1));
    assert_all_pass(&check_pivotal(&c, &objs, 2));
}

#[test]
fn s3_over_rationals_passes() {
    let q = Rationals;
    let c = RepCat::new(&q, GroupTable::symmetric(3)).unwrap();
    let v = standard_s3(&c);
    let s = sign_s3(&c);
    let objs = vec![c.unit(), s, v];
    assert_eq!(c.hom_space(v, v).len(), 1);
    assert_eq!(c.hom_space(c.tensor(v, v), c.unit()).len(), 1);
    assert_all_pass(&check_snakes(&c, &objs));
    assert_all_pass(&check_pivotal(&c, &objs, 3));
    assert_all_pass(&check_coherence(&c, &objs));
}

#[test]
fn quaternion_rep_over_f5() {
    let f = PrimeField::new(5).unwrap();
    let c = RepCat::new(&f, GroupTable::quaternion()).unwrap();
    let i = Mat::from_i64(&f, &[vec![2, 0], vec![0, 3]]);
    let j = Mat::from_i64(&f, &[vec![0, 4], vec![1, 0]]);
    let v = c.add_rep_generated("H", &[(2, i), (4, j)]).unwrap();
    assert_eq!(c.hom_space(v, v).len(), 1);
    assert_eq!(c.character(v, 1), f.from_i64(-2));
    assert_all_pass(&check_snakes(&c, &[c.unit(), v]));
    assert_all_pass(&check_pivotal(&c, &[c.unit(), v], 4));
}
