//! LD-Frobenius algebras in a backend: forms, the ideal criterion, building
//! Δ from a Frobenius form, the two Frobenius relations, and the passage
//! between modules and comodules.

mod modules;
#[cfg(test)]
mod tests;

use rand::Rng;

pub use modules::{
    check_comodule, check_module, comodule_to_module, module_to_comodule, roundtrip_report, sample_comodules,
    sample_modules, Comodule, Module,
};

use crate::algebra::Algebra;
use crate::bimodcat::BimodCat;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::gvcore::duality::phi;
use crate::gvcore::{same_morphism, GvBackend, Mor, ObjId, Report};

/// A monoid (A, μ, η) for ⊗.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraObject<F: Field> {
    pub obj: ObjId,
    pub mu: Mor<F>,
    pub eta: Mor<F>,
}

impl<F: Field> AlgebraObject<F> {
    pub fn new<B: GvBackend<F = F>>(c: &B, obj: ObjId, mu: Mor<F>, eta: Mor<F>) -> Result<Self> {
        let ok_types = mu.src == c.tensor(obj, obj) && mu.tgt == obj && eta.src == c.unit() && eta.tgt == obj;
        if !ok_types || !c.is_morphism(&mu) || !c.is_morphism(&eta) {
            return Err(Error::InvalidObject(format!("{}: μ or η has the wrong type", c.label(obj))));
        }
        let a = AlgebraObject { obj, mu, eta };
        if !check_algebra(c, &a).all_pass() {
            return Err(Error::InvalidObject(format!("{}: not an associative unital algebra", c.label(obj))));
        }
        Ok(a)
    }

    /// An algebra given by structure constants, placed on a new object of
    /// the vector-space backend.
    pub fn in_vect(c: &BimodCat<F>, alg: &Algebra<F>, label: &str) -> Result<Self> {
        if c.algebra().dim() != 1 {
            return Err(Error::Usage("algebra objects from structure constants need the vector-space backend".into()));
        }
        let f = c.field();
        let n = alg.dim();
        let obj = c.add_object(label, vec![Mat::identity(f, n)], vec![Mat::identity(f, n)])?;
        let mu = Mor::new(c.tensor(obj, obj), obj, alg.multiplication_matrix());
        let eta = Mor::new(c.unit(), obj, alg.unit_vector());
        AlgebraObject::new(c, obj, mu, eta)
    }

    /// The unit object with μ = l⊗_1 and η = id.
    pub fn unit<B: GvBackend<F = F>>(c: &B) -> Self {
        let one = c.unit();
        AlgebraObject { obj: one, mu: c.l_tensor(one), eta: c.identity(one) }
    }
}

/// An algebra object together with a form λ: A → K.
#[derive(Clone, Debug, PartialEq)]
pub struct FormData<F: Field> {
    pub alg: AlgebraObject<F>,
    pub lambda: Mor<F>,
}

/// An algebra for ⊗ and a coalgebra for ⅋ on the same object.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusData<F: Field> {
    pub alg: AlgebraObject<F>,
    pub delta: Mor<F>,
    pub eps: Mor<F>,
}

impl<F: Field> FrobeniusData<F> {
    pub fn obj(&self) -> ObjId {
        self.alg.obj
    }
}

/// Associativity and unitality of (A, μ, η).
pub fn check_algebra<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>) -> Report {
    let x = a.obj;
    let mut r = Report::new();
    let t = format!("({})", c.label(x));
    let lhs = c.compose(&a.mu, &c.tensor_map(&a.mu, &c.identity(x)));
    let rhs = c.chain(&[&a.mu, &c.tensor_map(&c.identity(x), &a.mu), &c.assoc(x, x, x)]);
    r.push("ALG-ASSOC", t.clone(), same_morphism(&lhs, &rhs));
    let left = same_morphism(&c.compose(&a.mu, &c.tensor_map(&a.eta, &c.identity(x))), &c.l_tensor(x));
    let right = same_morphism(&c.compose(&a.mu, &c.tensor_map(&c.identity(x), &a.eta)), &c.r_tensor(x));
    r.push("ALG-UNIT", t, left && right);
    r
}

/// Coassociativity and counitality of (A, Δ, ε) for ⅋.
pub fn check_coalgebra<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>) -> Report {
    let x = d.obj();
    let mut r = Report::new();
    let t = format!("({})", c.label(x));
    let lhs = c.chain(&[&c.par_assoc(x, x, x), &c.par_map(&d.delta, &c.identity(x)), &d.delta]);
    let rhs = c.compose(&c.par_map(&c.identity(x), &d.delta), &d.delta);
    r.push("COALG-COASSOC", t.clone(), same_morphism(&lhs, &rhs));
    let left = c.chain(&[&c.l_par(x), &c.par_map(&d.eps, &c.identity(x)), &d.delta]);
    let right = c.chain(&[&c.r_par(x), &c.par_map(&c.identity(x), &d.eps), &d.delta]);
    r.push("COALG-COUNIT", t, left.mat.is_identity() && right.mat.is_identity());
    r
}

fn f1_sides<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>, delta: &Mor<B::F>) -> (Mor<B::F>, Mor<B::F>) {
    let x = a.obj;
    let id = c.identity(x);
    let lhs = c.chain(&[&c.par_map(&a.mu, &id), &c.dist_left(x, x, x), &c.tensor_map(&id, delta)]);
    let rhs = c.chain(&[&c.par_map(&id, &a.mu), &c.dist_right(x, x, x), &c.tensor_map(delta, &id)]);
    (lhs, rhs)
}

/// (F1): (μ ⅋ A) ∘ δ_l ∘ (A ⊗ Δ) = (A ⅋ μ) ∘ δ_r ∘ (Δ ⊗ A).
pub fn check_f1<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>, delta: &Mor<B::F>) -> bool {
    let (lhs, rhs) = f1_sides(c, a, delta);
    same_morphism(&lhs, &rhs)
}

/// (F2): both composites of (F1) equal Δ ∘ μ.
pub fn check_f2<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>, delta: &Mor<B::F>) -> bool {
    let (lhs, rhs) = f1_sides(c, a, delta);
    let dm = c.compose(delta, &a.mu);
    same_morphism(&lhs, &dm) && same_morphism(&rhs, &dm)
}

/// ψ^r_λ = r⅋_{D'A} ∘ (D'A ⅋ λ) ∘ (D'A ⅋ μ) ∘ δ_r(D'A,A,A) ∘ (coev'_A ⊗ A) ∘ (l⊗_A)⁻¹.
pub fn psi_r<B: GvBackend>(c: &B, form: &FormData<B::F>) -> Result<Mor<B::F>> {
    let x = form.alg.obj;
    let sx = c.dual_prime(x);
    let ids = c.identity(sx);
    Ok(c.chain(&[
        &c.r_par(sx),
        &c.par_map(&ids, &form.lambda),
        &c.par_map(&ids, &form.alg.mu),
        &c.dist_right(sx, x, x),
        &c.tensor_map(&c.coev_prime(x)?, &c.identity(x)),
        &c.iso_inverse(&c.l_tensor(x)),
    ]))
}

/// Left multiplication by the b-th basis vector of A, as an operator on A.
fn left_mult_ops<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>) -> Vec<Mat<B::F>> {
    let f = c.field();
    let n = c.dim(a.obj);
    let id = Mat::identity(f, n);
    (0..n)
        .map(|b| a.mu.mat.mul(&c.elem_tensor(a.obj, a.obj, &Mat::unit_vector(f, n, b), &id)))
        .collect()
}

/// Columns spanning {v ∈ span(s) : T v ∈ span(s)} for every operator T.
fn shrink<F: Field>(s: &Mat<F>, ops: &[Mat<F>]) -> Mat<F> {
    if s.cols() == 0 {
        return s.clone();
    }
    let f = s.field();
    let n = s.rows();
    // v = s·c qualifies iff each T s c lies in span(s): project onto a complement
    let (proj, _) = s.cokernel();
    let blocks: Vec<Mat<F>> = ops.iter().map(|t| proj.mul(t).mul(s)).collect();
    if blocks.is_empty() {
        return s.clone();
    }
    let coeffs = Mat::vstack_all(f, s.cols(), &blocks).kernel();
    let out = s.mul(&coeffs);
    debug_assert_eq!(out.rows(), n);
    out
}

/// The largest subobject of A that is a left ideal inside ker λ, by
/// shrinking ker λ until it is stable under the actions and under left
/// multiplication.
pub fn max_ideal_in_kernel<B: GvBackend>(c: &B, form: &FormData<B::F>) -> Mat<B::F> {
    let mut ops = c.action_matrices(form.alg.obj);
    ops.extend(left_mult_ops(c, &form.alg));
    let mut s = form.lambda.mat.kernel();
    loop {
        let next = shrink(&s, &ops);
        if next.cols() == s.cols() {
            return s;
        }
        s = next;
    }
}

/// {a : λ(b·a) = 0 for every basis vector b}, computed directly.
pub fn ideal_closed_form<B: GvBackend>(c: &B, form: &FormData<B::F>) -> Mat<B::F> {
    let f = c.field();
    let n = c.dim(form.alg.obj);
    let blocks: Vec<Mat<B::F>> = left_mult_ops(c, &form.alg).iter().map(|l| form.lambda.mat.mul(l)).collect();
    Mat::vstack_all(f, n, &blocks).kernel()
}

/// Whether the column span of `basis` is closed under the actions and under
/// left multiplication by A.
pub fn is_left_ideal<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>, basis: &Mat<B::F>) -> bool {
    let mut ops = c.action_matrices(a.obj);
    ops.extend(left_mult_ops(c, a));
    ops.iter().all(|t| basis.hstack(&t.mul(basis)).rank() == basis.rank())
}

/// For each form: ψ^r_λ is invertible exactly when the largest ideal in
/// ker λ is zero, and the shrinking computation agrees with the closed
/// form. Returns the report and the number of Frobenius forms.
pub fn check_ideal_criterion<B: GvBackend>(c: &B, forms: &[FormData<B::F>]) -> Result<(Report, usize)> {
    let mut r = Report::new();
    let mut frobenius = 0;
    for (i, form) in forms.iter().enumerate() {
        let ideal = max_ideal_in_kernel(c, form);
        let closed = ideal_closed_form(c, form);
        let same = ideal.rank() == closed.rank() && ideal.hstack(&closed).rank() == ideal.rank();
        let invertible = psi_r(c, form)?.mat.is_invertible();
        frobenius += usize::from(invertible);
        let t = format!("({},form{i})", c.label(form.alg.obj));
        r.push("IDEAL-CRITERION", t, same && invertible == (ideal.cols() == 0));
    }
    Ok((r, frobenius))
}

/// Basis of the solutions Δ ∈ Hom(A, A⅋A) of the homogeneous equation (F1).
pub fn f1_solution_space<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>) -> Vec<Mor<B::F>> {
    let x = a.obj;
    let basis = c.hom_space(x, c.par(x, x));
    let cols: Vec<Vec<_>> = basis
        .iter()
        .map(|h| {
            let (lhs, rhs) = f1_sides(c, a, h);
            lhs.mat.sub(&rhs.mat).data().to_vec()
        })
        .collect();
    let rows = cols.first().map_or(0, Vec::len);
    let kernel = Mat::from_cols(c.field(), rows, &cols).kernel();
    combine(c, &basis, x, c.par(x, x), &kernel)
}

fn combine<B: GvBackend>(c: &B, basis: &[Mor<B::F>], x: ObjId, y: ObjId, coeffs: &Mat<B::F>) -> Vec<Mor<B::F>> {
    (0..coeffs.cols())
        .map(|j| {
            basis
                .iter()
                .enumerate()
                .fold(c.zero_map(x, y), |acc, (i, h)| acc.add(&h.scale(coeffs.get(i, j))))
        })
        .collect()
}

/// ε := λ and Δ the unique solution of (F1) with both counit equations.
/// Forms that are not Frobenius are rejected with the dimension of the
/// witness ideal.
pub fn build_from_form<B: GvBackend>(c: &B, form: &FormData<B::F>) -> Result<FrobeniusData<B::F>> {
    let ideal = max_ideal_in_kernel(c, form);
    if ideal.cols() > 0 {
        return Err(Error::NotFrobenius { ideal_dim: ideal.cols() });
    }
    let x = form.alg.obj;
    let f = c.field();
    let basis = c.hom_space(x, c.par(x, x));
    let id = c.identity(x);
    let eqs = |h: &Mor<B::F>| -> Vec<<B::F as Field>::Elem> {
        let (lhs, rhs) = f1_sides(c, &form.alg, h);
        let mut v = lhs.mat.sub(&rhs.mat).data().to_vec();
        v.extend_from_slice(c.chain(&[&c.l_par(x), &c.par_map(&form.lambda, &id), h]).mat.data());
        v.extend_from_slice(c.chain(&[&c.r_par(x), &c.par_map(&id, &form.lambda), h]).mat.data());
        v
    };
    let cols: Vec<Vec<_>> = basis.iter().map(eqs).collect();
    let n = c.dim(x);
    let f1_len = c.dim(c.par(x, x)) * c.dim(c.tensor(x, x));
    let mut target = vec![f.zero(); f1_len];
    target.extend_from_slice(Mat::identity(f, n).data());
    target.extend_from_slice(Mat::identity(f, n).data());
    let system = Mat::from_cols(f, target.len(), &cols);
    let coeffs = system
        .solve(&Mat::column_vector(f, target))
        .ok_or_else(|| Error::Inconsistent(format!("no comultiplication for the form on {}", c.label(x))))?;
    if system.rank() < basis.len() {
        return Err(Error::Inconsistent(format!("comultiplication on {} is not unique", c.label(x))));
    }
    let delta = combine(c, &basis, x, c.par(x, x), &coeffs).remove(0);
    Ok(FrobeniusData { alg: form.alg.clone(), delta, eps: form.lambda.clone() })
}

/// Every invariant of a Frobenius instance, plus the invariant pairing
/// κ = λ∘μ being non-degenerate.
pub fn check_frobenius<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>) -> Report {
    let t = format!("({})", c.label(d.obj()));
    let mut r = check_algebra(c, &d.alg);
    r.extend(check_coalgebra(c, d));
    r.push("FROB-VALID", t.clone(), c.is_morphism(&d.delta) && c.is_morphism(&d.eps));
    r.push("F1", t.clone(), check_f1(c, &d.alg, &d.delta));
    r.push("F2", t.clone(), check_f2(c, &d.alg, &d.delta));
    let x = d.obj();
    let kappa = c.compose(&d.eps, &d.alg.mu);
    let lhs = c.compose(&kappa, &c.tensor_map(&d.alg.mu, &c.identity(x)));
    let rhs = c.chain(&[&kappa, &c.tensor_map(&c.identity(x), &d.alg.mu), &c.assoc(x, x, x)]);
    r.push("PAIRING-INVARIANT", t.clone(), same_morphism(&lhs, &rhs));
    let nondeg = phi(c, &kappa, x, x).map(|m| m.mat.is_invertible()).unwrap_or(false);
    r.push("PAIRING-NONDEGENERATE", t, nondeg);
    r
}

/// Outcome of the (F1) ⇒ (F2) experiment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ImplicationReport {
    /// Candidates tried.
    pub candidates: usize,
    /// Candidates satisfying (F1).
    pub satisfying_f1: usize,
    /// Candidates satisfying (F1) but not (F2).
    pub counterexamples: usize,
}

/// Draws `samples` random elements of the (F1) solution space and `samples`
/// unconstrained random Δ, keeps those satisfying (F1) and tests (F2).
pub fn f1_implies_f2<B: GvBackend, R: Rng>(
    c: &B,
    a: &AlgebraObject<B::F>,
    samples: usize,
    rng: &mut R,
) -> ImplicationReport {
    let f = c.field();
    let x = a.obj;
    let space = f1_solution_space(c, a);
    let mut out = ImplicationReport::default();
    let test = |delta: &Mor<B::F>, out: &mut ImplicationReport| {
        out.candidates += 1;
        if check_f1(c, a, delta) {
            out.satisfying_f1 += 1;
            if !check_f2(c, a, delta) {
                out.counterexamples += 1;
            }
        }
    };
    for _ in 0..samples {
        let delta = space
            .iter()
            .fold(c.zero_map(x, c.par(x, x)), |acc, h| acc.add(&h.scale(&f.random(rng))));
        test(&delta, &mut out);
    }
    for _ in 0..samples {
        let delta = c.random_morphism(x, c.par(x, x), rng);
        test(&delta, &mut out);
    }
    out
}

/// Every element of Hom(A, K) over a finite field, in a fixed order.
pub fn all_forms<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>) -> Option<Vec<FormData<B::F>>> {
    let f = c.field();
    let elems = f.elements()?;
    let basis = c.hom_space(a.obj, c.dualizing());
    let total = elems.len().checked_pow(basis.len() as u32)?;
    Some(
        (0..total)
            .map(|mut idx| {
                let lambda = basis.iter().fold(c.zero_map(a.obj, c.dualizing()), |acc, h| {
                    let coeff = &elems[idx % elems.len()];
                    idx /= elems.len();
                    acc.add(&h.scale(coeff))
                });
                FormData { alg: a.clone(), lambda }
            })
            .collect(),
    )
}

/// Whether f: A → B is a morphism of algebras and of coalgebras.
pub fn is_frobenius_morphism<B: GvBackend>(
    c: &B,
    d1: &FrobeniusData<B::F>,
    d2: &FrobeniusData<B::F>,
    f: &Mor<B::F>,
) -> bool {
    c.is_morphism(f)
        && same_morphism(&c.compose(f, &d1.alg.mu), &c.compose(&d2.alg.mu, &c.tensor_map(f, f)))
        && same_morphism(&c.compose(f, &d1.alg.eta), &d2.alg.eta)
        && same_morphism(&c.compose(&c.par_map(f, f), &d1.delta), &c.compose(&d2.delta, f))
        && same_morphism(&c.compose(&d2.eps, f), &d1.eps)
}

/// Enumerates Hom(A, B) over a finite field and returns how many elements
/// are Frobenius morphisms and how many of those are invertible.
pub fn groupoid_search<B: GvBackend>(
    c: &B,
    d1: &FrobeniusData<B::F>,
    d2: &FrobeniusData<B::F>,
) -> Option<(usize, usize)> {
    let f = c.field();
    let elems = f.elements()?;
    let basis = c.hom_space(d1.obj(), d2.obj());
    let total = elems.len().checked_pow(basis.len() as u32)?;
    let mut found = 0;
    let mut invertible = 0;
    for mut idx in 0..total {
        let m = basis.iter().fold(c.zero_map(d1.obj(), d2.obj()), |acc, h| {
            let coeff = &elems[idx % elems.len()];
            idx /= elems.len();
            acc.add(&h.scale(coeff))
        });
        if is_frobenius_morphism(c, d1, d2, &m) {
            found += 1;
            if m.mat.is_invertible() {
                invertible += 1;
            }
        }
    }
    Some((found, invertible))
}
