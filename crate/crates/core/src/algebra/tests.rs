use super::*;
use crate::exactla::{PrimeField, Rationals};

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn s3() -> GroupTable {
    // permutations of {0,1,2} as images, composed right to left
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let table = (0..6)
        .map(|a| (0..6).map(|b| idx([perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]])).collect())
        .collect();
    GroupTable::new("S3", table).unwrap()
}

fn assert_left_regular_is_algebra_map<F: Field>(a: &Algebra<F>) {
    let f = a.field();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.left_mult(i).mul(&a.left_mult(j));
            let mut rhs = Mat::zeros(f, n, n);
            for k in 0..n {
                rhs = rhs.add(&a.left_mult(k).scale(a.constant(i, j, k)));
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn group_algebras_are_valid() {
    let c2 = Algebra::group_algebra(&f5(), &GroupTable::cyclic(2));
    assert!(c2.validate().is_empty());
    assert_eq!(c2.dim(), 2);
    let q = Algebra::group_algebra(&Rationals, &GroupTable::cyclic(2));
    assert_eq!(q.dim(), 2);
    let s = Algebra::group_algebra(&Rationals, &s3());
    assert!(s.validate().is_empty());
    assert_eq!(s.dim(), 6);
    assert!(!s.is_commutative());
    assert_left_regular_is_algebra_map(&s);
}

#[test]
fn not_a_group_is_rejected() {
    assert!(matches!(GroupTable::new("bad", vec![vec![0, 0], vec![0, 1]]), Err(Error::NotAGroup(_))));
    assert!(matches!(GroupTable::new("bad", vec![vec![0, 2], vec![1, 0]]), Err(Error::NotAGroup(_))));
}

#[test]
fn invalid_unit_is_reported() {
    let f = f5();
    // e*e = x, x*x = e, x*e = e*x = 0, claimed unit e
    let mut consts = vec![0u64; 8];
    consts[1] = 1; // (0,0) -> e1
    consts[(1 * 2 + 1) * 2] = 1; // (1,1) -> e0
    let a = Algebra::from_structure_constants(&f, "bad", 2, consts, vec![1, 0]).unwrap();
    let v = a.validate();
    assert!(v.contains(&AlgebraViolation::LeftUnit(1)));
    assert!(v.contains(&AlgebraViolation::RightUnit(1)));
}

#[test]
fn ground_field_is_valid() {
    assert!(Algebra::ground_field(&f5()).validate().is_empty());
}

#[test]
fn polynomial_quotients() {
    let f = f5();
    let dual = Algebra::quotient_poly(&f, &[0, 0, 1]).unwrap();
    assert!(dual.validate().is_empty());
    assert_eq!(dual.dim(), 2);
    assert_eq!(dual.mul(&[0, 1], &[0, 1]), vec![0, 0]);
    let lin = Algebra::quotient_poly(&f, &[4, 1]).unwrap();
    assert_eq!(lin.dim(), 1);
    let cube = Algebra::quotient_poly(&f, &[0, 0, 0, 1]).unwrap();
    assert_eq!(cube.mul(&[0, 1, 0], &[0, 0, 1]), vec![0, 0, 0]);
    assert_eq!(cube.mul(&[0, 1, 0], &[0, 1, 0]), vec![0, 0, 1]);
    // x^2 = x + 1 reduces correctly
    let fib = Algebra::quotient_poly(&f, &[4, 4, 1]).unwrap();
    assert_eq!(fib.mul(&[0, 1], &[0, 1]), vec![1, 1]);
    assert!(fib.validate().is_empty());
    assert_eq!(Algebra::quotient_poly(&f, &[0, 0, 2]), Err(Error::NonMonic));
    assert_eq!(Algebra::quotient_poly(&f, &[1]), Err(Error::NonMonic));
}

#[test]
fn triangular_algebra_and_centers() {
    let f = f5();
    let t2 = Algebra::upper_triangular(&f, 2);
    assert!(t2.validate().is_empty());
    assert_eq!(t2.basis_names(), &["e11", "e12", "e22"]);
    assert_eq!(t2.center().cols(), 1);
    assert_left_regular_is_algebra_map(&t2);
    let s = Algebra::group_algebra(&f, &s3());
    assert_eq!(s.center().cols(), 3);
    let dual = Algebra::quotient_poly(&f, &[0, 0, 1]).unwrap();
    assert_eq!(dual.center().cols(), 2);
}

#[test]
fn generators_generate() {
    let f = f5();
    assert_eq!(Algebra::quotient_poly(&f, &[0, 0, 1]).unwrap().generators(), vec![1]);
    assert_eq!(Algebra::group_algebra(&f, &GroupTable::cyclic(3)).generators(), vec![1]);
    assert_eq!(Algebra::upper_triangular(&f, 2).generators(), vec![0, 1]);
    assert!(Algebra::ground_field(&f).generators().is_empty());
    assert_eq!(Algebra::group_algebra(&f, &s3()).generators().len(), 2);
    assert_eq!(s3().generators().len(), 2);
}

#[test]
fn named_groups() {
    let s = GroupTable::symmetric(3);
    assert_eq!(s.order(), 6);
    assert!(!s.is_abelian());
    let q = GroupTable::quaternion();
    assert_eq!(q.order(), 8);
    assert_eq!(q.mul(2, 4), 6); // ij = k
    assert_eq!(q.mul(4, 2), 7); // ji = -k
    assert_eq!(q.mul(2, 2), 1); // i^2 = -1
    assert!((0..8).filter(|&g| q.power(g, 2) == 0).count() == 2);
}
