use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{Algebra, GroupTable};
use crate::bimodcat::BimodCat;
use crate::exactla::PrimeField;

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn dual_numbers(c: &BimodCat<PrimeField>) -> AlgebraObject<PrimeField> {
    AlgebraObject::in_vect(c, &Algebra::quotient_poly(&f5(), &[0, 0, 1]).unwrap(), "D").unwrap()
}

fn triangular(c: &BimodCat<PrimeField>) -> AlgebraObject<PrimeField> {
    AlgebraObject::in_vect(c, &Algebra::upper_triangular(&f5(), 2), "T2").unwrap()
}

fn form(c: &BimodCat<PrimeField>, a: &AlgebraObject<PrimeField>, coeffs: &[i64]) -> FormData<PrimeField> {
    let lambda = Mor::new(a.obj, c.dualizing(), Mat::from_i64(c.field(), &[coeffs.to_vec()]));
    FormData { alg: a.clone(), lambda }
}

fn same_span<F: Field>(a: &Mat<F>, b: &Mat<F>) -> bool {
    a.cols() == b.cols() && a.hstack(b).rank() == a.rank() && a.rank() == a.cols()
}

#[test]
fn ideal_criterion_is_exhaustively_true_for_dual_numbers() {
    let c = BimodCat::vect(&f5());
    let a = dual_numbers(&c);
    let forms = all_forms(&c, &a).unwrap();
    assert_eq!(forms.len(), 25);
    let mut frobenius = 0;
    for fd in &forms {
        let ideal = max_ideal_in_kernel(&c, fd);
        assert!(same_span(&ideal, &ideal_closed_form(&c, fd)));
        assert!(is_left_ideal(&c, &a, &ideal));
        let invertible = psi_r(&c, fd).unwrap().mat.is_invertible();
        assert_eq!(invertible, ideal.cols() == 0);
        // classical: λ is Frobenius iff λ(x) ≠ 0
        assert_eq!(invertible, *fd.lambda.mat.get(0, 1) != 0);
        if invertible {
            frobenius += 1;
            let d = build_from_form(&c, fd).unwrap();
            let r = check_frobenius(&c, &d);
            assert!(r.all_pass(), "{r}");
        } else {
            assert!(matches!(build_from_form(&c, fd), Err(Error::NotFrobenius { .. })));
        }
    }
    assert_eq!(frobenius, 20);
}

#[test]
fn triangular_algebra_has_no_frobenius_form() {
    let c = BimodCat::vect(&f5());
    let a = triangular(&c);
    let forms = all_forms(&c, &a).unwrap();
    assert_eq!(forms.len(), 125);
    for fd in &forms {
        let ideal = max_ideal_in_kernel(&c, fd);
        assert!(ideal.cols() > 0);
        assert!(same_span(&ideal, &ideal_closed_form(&c, fd)));
        assert!(!psi_r(&c, fd).unwrap().mat.is_invertible());
    }
    // λ = e12-coefficient: A·e11 = k·e11 lies in ker λ, and nothing else does
    let fd = form(&c, &a, &[0, 1, 0]);
    let ideal = max_ideal_in_kernel(&c, &fd);
    assert!(same_span(&ideal, &Mat::from_i64(c.field(), &[vec![1], vec![0], vec![0]])));
}

#[test]
fn zero_form_has_the_whole_algebra_as_ideal() {
    let c = BimodCat::vect(&f5());
    let a = dual_numbers(&c);
    assert_eq!(max_ideal_in_kernel(&c, &form(&c, &a, &[0, 0])).cols(), 2);
}

#[test]
fn group_algebra_with_symmetric_form() {
    let c = BimodCat::vect(&f5());
    let a = AlgebraObject::in_vect(&c, &Algebra::group_algebra(&f5(), &GroupTable::cyclic(2)), "C2").unwrap();
    let fd = form(&c, &a, &[1, 0]);
    assert_eq!(max_ideal_in_kernel(&c, &fd).cols(), 0);
    let d = build_from_form(&c, &fd).unwrap();
    assert!(check_frobenius(&c, &d).all_pass());
    // Δ(1) = 1⊗1 + g⊗g for the trace form
    let expected = Mat::from_i64(c.field(), &[vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 0]]);
    assert_eq!(d.delta.mat, expected);
}

#[test]
fn unit_object_is_trivially_frobenius() {
    let c = BimodCat::vect(&f5());
    let a = AlgebraObject::unit(&c);
    let fd = form(&c, &a, &[1]);
    let d = build_from_form(&c, &fd).unwrap();
    assert!(check_frobenius(&c, &d).all_pass());
    assert!(check_f1(&c, &d.alg, &d.delta) && check_f2(&c, &d.alg, &d.delta));
}

#[test]
fn unit_of_bimodules_is_frobenius_for_dual_numbers() {
    let f = f5();
    let c = BimodCat::new(Algebra::quotient_poly(&f, &[0, 0, 1]).unwrap()).unwrap();
    let a = AlgebraObject::unit(&c);
    let forms = all_forms(&c, &a).unwrap();
    assert_eq!(forms.len(), 25);
    let mut found = 0;
    for fd in &forms {
        let invertible = psi_r(&c, fd).unwrap().mat.is_invertible();
        assert_eq!(invertible, max_ideal_in_kernel(&c, fd).cols() == 0);
        if invertible {
            found += 1;
            assert!(check_frobenius(&c, &build_from_form(&c, fd).unwrap()).all_pass());
        }
    }
    assert!(found > 0);
}

#[test]
fn f1_implies_f2_on_random_candidates() {
    let c = BimodCat::vect(&f5());
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut total = ImplicationReport::default();
    for a in [dual_numbers(&c), triangular(&c), AlgebraObject::unit(&c)] {
        let r = f1_implies_f2(&c, &a, 60, &mut rng);
        total.candidates += r.candidates;
        total.satisfying_f1 += r.satisfying_f1;
        total.counterexamples += r.counterexamples;
    }
    assert!(total.satisfying_f1 >= 100, "{total:?}");
    assert_eq!(total.counterexamples, 0);
}

#[test]
fn perturbed_comultiplication_fails_f1() {
    let c = BimodCat::vect(&f5());
    let a = dual_numbers(&c);
    let d = build_from_form(&c, &form(&c, &a, &[0, 1])).unwrap();
    let space = f1_solution_space(&c, &a);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = 0;
    for _ in 0..20 {
        let tweak = c.random_morphism(a.obj, c.par(a.obj, a.obj), &mut rng);
        let in_space = c.coordinates(&space, &tweak).is_some();
        let perturbed = d.delta.add(&tweak);
        assert_eq!(check_f1(&c, &a, &perturbed), in_space);
        failures += usize::from(!in_space);
    }
    assert!(failures > 0);
}

#[test]
fn modules_and_comodules_correspond() {
    let c = BimodCat::vect(&f5());
    let a = dual_numbers(&c);
    let d = build_from_form(&c, &form(&c, &a, &[1, 1])).unwrap();
    let v2 = c.add_object("V2", vec![Mat::identity(c.field(), 2)], vec![Mat::identity(c.field(), 2)]).unwrap();
    let extra = [c.unit(), v2];
    let mods = sample_modules(&c, &d, &extra);
    let comods = sample_comodules(&c, &d, &extra);
    assert_eq!(mods.len(), 3);
    // the regular module goes to the regular comodule
    assert_eq!(module_to_comodule(&c, &d, &mods[0]).coaction, d.delta);
    let r = roundtrip_report(&c, &d, &mods, &comods);
    assert!(r.all_pass(), "{r}");
}

#[test]
fn frobenius_morphisms_are_invertible() {
    let c = BimodCat::vect(&f5());
    let a = dual_numbers(&c);
    let d1 = build_from_form(&c, &form(&c, &a, &[0, 1])).unwrap();
    let d2 = build_from_form(&c, &form(&c, &a, &[2, 3])).unwrap();
    let (found, inv) = groupoid_search(&c, &d1, &d1).unwrap();
    assert!(found >= 1);
    assert_eq!(found, inv);
    let (found, inv) = groupoid_search(&c, &d1, &d2).unwrap();
    assert_eq!(found, inv);
}
