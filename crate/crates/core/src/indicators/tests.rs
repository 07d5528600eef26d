use proptest::prelude::*;

use super::*;
use crate::algebra::Algebra;
use crate::bimodcat::{BimodCat, ConjugationFunctor};
use crate::exactla::{PrimeField, Rationals};
use crate::repgcat::RepCat;

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn vect_space<F: Field>(c: &BimodCat<F>, d: usize) -> ObjId {
    let id = Mat::identity(c.field(), d);
    c.add_object(&format!("k{d}"), vec![id.clone()], vec![id]).unwrap()
}

fn scalars<F: Field>(f: &F, vals: &[i64]) -> Vec<Mat<F>> {
    vals.iter().map(|&v| Mat::from_i64(f, &[vec![v]])).collect()
}

fn dual_numbers() -> (BimodCat<PrimeField>, Vec<ObjId>) {
    let f = f5();
    let c = BimodCat::new(Algebra::quotient_poly(&f, &[0, 0, 1]).unwrap()).unwrap();
    let (a, da) = (c.unit(), c.dual(c.unit()));
    let k = c.add_object("k", scalars(&f, &[1, 0]), scalars(&f, &[1, 0])).unwrap();
    let id = Mat::identity(&f, 2);
    let x = Mat::from_i64(&f, &[vec![0, 0], vec![1, 0]]);
    let ml = c.add_object("M_L", vec![id.clone(), x], vec![id, Mat::zeros(&f, 2, 2)]).unwrap();
    (c, vec![a, da, k, ml])
}

/// Dimension of the G-fixed subspace of V^{⊗n}: the rank of Σ_g ρ(g)^{⊗n}.
fn fixed_dim_by_averaging<F: Field>(c: &RepCat<F>, v: ObjId, n: usize) -> usize {
    let f = c.field();
    let g = c.group();
    let power = (1..n).fold(c.action(v, 0), |acc, _| acc.kron(&c.action(v, 0)));
    let mut avg = Mat::zeros(f, power.rows(), power.cols());
    for e in 0..g.order() {
        let a = (1..n).fold(c.action(v, e), |acc, _| acc.kron(&c.action(v, e)));
        avg = avg.add(&a);
    }
    avg.rank()
}

#[test]
fn first_rotation_is_identity_and_powers_close_up() {
    let (c, objs) = dual_numbers();
    let rep = check_rotation_identities(&c, &objs, 4);
    let fails: Vec<String> = rep.failures().map(|l| l.to_string()).collect();
    assert!(fails.is_empty(), "{fails:?}");
    assert_eq!(rep.len(), objs.len() * 5);
    // ν_{1,1} counts invariant vectors: Hom(A, A) is the centre, Hom(A, k) is a line
    let nu: Vec<u64> = objs.iter().map(|&v| indicator(&c, v, 1, 1).unwrap()).collect();
    assert_eq!(nu, vec![2, 2, 1, 1]);
}

#[test]
fn vect_indicators_match_power_of_dimension() {
    let q = Rationals;
    let c = BimodCat::vect(&q);
    for d in 1..=3 {
        let v = vect_space(&c, d);
        let table = IndicatorTable::compute(&c, v, 4, 4).unwrap();
        for &(n, r, ref val) in &table.entries {
            assert_eq!(val, &vect_oracle(&q, d, n, r as usize), "d={d} n={n} r={r}");
        }
    }
}

#[test]
fn vect_rotation_on_two_factors_is_the_flip() {
    let f = f5();
    let c = BimodCat::vect(&f);
    let v = vect_space(&c, 2);
    let e = rotation_matrix(&c, v, 2).unwrap();
    let space = InvariantSpace::new(&c, v, 2);
    assert_eq!(space.dim(), 4);
    // the invariant space is V ⅋ V itself; in coordinates the rotation is a
    // permutation matrix of order two fixing exactly the diagonal tensors
    assert_eq!(e.mul(&e), Mat::identity(&f, 4));
    assert_eq!(e.trace(), f.from_i64(2));
    assert!(!e.is_identity());
}

#[test]
fn indicators_do_not_depend_on_basis_order() {
    let (c, objs) = dual_numbers();
    for &v in &objs {
        for n in 1..=3 {
            assert!(check_basis_independence(&c, v, n, 3).unwrap());
        }
    }
}

#[test]
fn b_map_is_linear() {
    let (c, objs) = dual_numbers();
    let mut rng = rand::SeedableRng::seed_from_u64(3);
    let rng: &mut rand_chacha::ChaCha8Rng = &mut rng;
    let f = c.field();
    for &v in &objs {
        let w = par_power(&c, v, 2);
        let target = c.par(v, w);
        let basis = c.hom_space(c.unit(), target);
        if basis.is_empty() {
            continue;
        }
        let (a, b) = (c.random_morphism(c.unit(), target, rng), c.random_morphism(c.unit(), target, rng));
        let s = f.from_i64(3);
        let combo = Mor { src: a.src, tgt: a.tgt, mat: a.mat.add(&b.mat.scale(&s)) };
        let lhs = b_map(&c, v, w, &combo).mat;
        let rhs = b_map(&c, v, w, &a).mat.add(&b_map(&c, v, w, &b).mat.scale(&s));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn trivial_rep_has_indicator_one() {
    let f = PrimeField::new(7).unwrap();
    let c = RepCat::new(&f, GroupTable::cyclic(3)).unwrap();
    for n in 1..=4 {
        assert_eq!(indicator(&c, ObjId(0), n, 1).unwrap(), f.one());
    }
}

#[test]
fn cyclic_characters_match_classical_formula() {
    let f = PrimeField::new(7).unwrap();
    let g = GroupTable::cyclic(3);
    let c = RepCat::new(&f, g.clone()).unwrap();
    let w = c.add_rep_generated("w", &[(1, Mat::from_i64(&f, &[vec![2]]))]).unwrap();
    let chi: Vec<u64> = (0..3).map(|e| c.character(w, e)).collect();
    for n in 1..=4 {
        let expected = classical_fs_oracle(&f, &g, &chi, n).unwrap();
        assert_eq!(indicator(&c, w, n, 1).unwrap(), expected, "n={n}");
        // dimension of fixed tensors, read in the field
        assert_eq!(expected, f.from_i64(fixed_dim_by_averaging(&c, w, n) as i64));
    }
    assert_eq!(indicator(&c, w, 2, 1).unwrap(), 0);
    assert_eq!(indicator(&c, w, 3, 1).unwrap(), 1);
}

fn s3_reps(c: &RepCat<Rationals>) -> (ObjId, ObjId) {
    let q = Rationals;
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let signs = [1, -1, -1, 1, 1, -1];
    let sgn = c.add_rep("sgn", signs.iter().map(|&s| Mat::from_i64(&q, &[vec![s]])).collect()).unwrap();
    let basis = Mat::from_i64(&q, &[vec![1, 0], vec![-1, 1], vec![0, -1]]);
    let action = perms.iter().map(|p| basis.solve(&Mat::permutation(&q, p).mul(&basis)).unwrap()).collect();
    let std = c.add_rep("V", action).unwrap();
    (sgn, std)
}

#[test]
fn symmetric_group_reps_are_real() {
    let q = Rationals;
    let g = GroupTable::symmetric(3);
    let c = RepCat::new(&q, g.clone()).unwrap();
    let (sgn, std) = s3_reps(&c);
    for v in [sgn, std] {
        let chi: Vec<_> = (0..6).map(|e| c.character(v, e)).collect();
        assert_eq!(indicator(&c, v, 2, 1).unwrap(), q.one());
        for n in 1..=4 {
            assert_eq!(indicator(&c, v, n, 1).unwrap(), classical_fs_oracle(&q, &g, &chi, n).unwrap());
        }
    }
}

#[test]
fn quaternion_rep_matches_classical_formula() {
    let f = f5();
    let g = GroupTable::quaternion();
    let c = RepCat::new(&f, g.clone()).unwrap();
    let i = Mat::from_i64(&f, &[vec![2, 0], vec![0, 3]]);
    let j = Mat::from_i64(&f, &[vec![0, 4], vec![1, 0]]);
    let v = c.add_rep_generated("H", &[(2, i), (4, j)]).unwrap();
    let chi: Vec<u64> = (0..8).map(|e| c.character(v, e)).collect();
    // quaternionic: ν₂ = -1
    assert_eq!(classical_fs_oracle(&f, &g, &chi, 2).unwrap(), f.from_i64(-1));
    assert_eq!(classical_fs_oracle(&f, &g, &chi, 4).unwrap(), f.from_i64(2));
    for n in 1..=4 {
        assert_eq!(indicator(&c, v, n, 1).unwrap(), classical_fs_oracle(&f, &g, &chi, n).unwrap(), "n={n}");
    }
}

#[test]
fn classical_oracle_rejects_modular_characteristic() {
    let f = PrimeField::new(3).unwrap();
    let g = GroupTable::cyclic(3);
    assert!(matches!(classical_fs_oracle(&f, &g, &[1, 1, 1], 2), Err(Error::ModularCharacteristic(3))));
}

#[test]
fn indicators_are_invariant_under_relabelling() {
    let (c, objs) = dual_numbers();
    let fun = ConjugationFunctor::relabel(&c);
    let rep = check_invariance(&fun, &objs, 3, 3, 5).unwrap();
    let fails: Vec<String> = rep.failures().map(|l| l.to_string()).collect();
    assert!(fails.is_empty(), "{fails:?}");
}

#[test]
fn invariance_rejects_a_broken_functor() {
    let f = f5();
    let c = BimodCat::new(Algebra::group_algebra(&f, &GroupTable::cyclic(3))).unwrap();
    let sigma = Mat::permutation(&f, &[0, 2, 1]);
    let fun = ConjugationFunctor::twist(&c, sigma).unwrap().with_wrong_unit();
    let objs = vec![c.unit(), c.dual(c.unit())];
    assert!(matches!(check_invariance(&fun, &objs, 2, 2, 1), Err(Error::FunctorRejected(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn indicator_is_periodic_in_r(obj in 0usize..4, n in 1usize..4, r in 1u32..12) {
        let (c, objs) = dual_numbers();
        let e = rotation_matrix(&c, objs[obj], n).unwrap();
        let reduced = r % n as u32;
        prop_assert_eq!(e.pow(r).trace(), e.pow(reduced).trace());
    }
}
