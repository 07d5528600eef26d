//! Modules over (A, μ, η) and comodules over (A, Δ, ε), and the two
//! constructions that identify them for a Frobenius algebra.

use super::FrobeniusData;
use crate::exactla::Field;
use crate::gvcore::{same_morphism, GvBackend, Mor, ObjId, Report};

/// A left module β: A ⊗ M → M.
#[derive(Clone, Debug, PartialEq)]
pub struct Module<F: Field> {
    pub obj: ObjId,
    pub action: Mor<F>,
}

/// A left comodule γ: N → A ⅋ N.
#[derive(Clone, Debug, PartialEq)]
pub struct Comodule<F: Field> {
    pub obj: ObjId,
    pub coaction: Mor<F>,
}

pub fn check_module<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, m: &Module<B::F>) -> bool {
    let (a, x) = (d.obj(), m.obj);
    let beta = &m.action;
    let lhs = c.chain(&[beta, &c.tensor_map(&c.identity(a), beta), &c.assoc(a, a, x)]);
    let rhs = c.compose(beta, &c.tensor_map(&d.alg.mu, &c.identity(x)));
    let unit = c.compose(beta, &c.tensor_map(&d.alg.eta, &c.identity(x)));
    c.is_morphism(beta) && same_morphism(&lhs, &rhs) && same_morphism(&unit, &c.l_tensor(x))
}

pub fn check_comodule<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, n: &Comodule<B::F>) -> bool {
    let (a, x) = (d.obj(), n.obj);
    let gamma = &n.coaction;
    let lhs = c.compose(&c.par_map(&c.identity(a), gamma), gamma);
    let rhs = c.chain(&[&c.par_assoc(a, a, x), &c.par_map(&d.delta, &c.identity(x)), gamma]);
    let counit = c.chain(&[&c.l_par(x), &c.par_map(&d.eps, &c.identity(x)), gamma]);
    c.is_morphism(gamma) && same_morphism(&lhs, &rhs) && counit.mat.is_identity()
}

/// β̄ = (A ⅋ β) ∘ δ_r(A,A,M) ∘ ((Δ∘η) ⊗ M) ∘ (l⊗_M)⁻¹.
pub fn module_to_comodule<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, m: &Module<B::F>) -> Comodule<B::F> {
    let (a, x) = (d.obj(), m.obj);
    let copairing = c.compose(&d.delta, &d.alg.eta);
    let coaction = c.chain(&[
        &c.par_map(&c.identity(a), &m.action),
        &c.dist_right(a, a, x),
        &c.tensor_map(&copairing, &c.identity(x)),
        &c.iso_inverse(&c.l_tensor(x)),
    ]);
    Comodule { obj: x, coaction }
}

/// γ̄ = l⅋_N ∘ ((ε∘μ) ⅋ N) ∘ δ_l(A,A,N) ∘ (A ⊗ γ).
pub fn comodule_to_module<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, n: &Comodule<B::F>) -> Module<B::F> {
    let (a, x) = (d.obj(), n.obj);
    let pairing = c.compose(&d.eps, &d.alg.mu);
    let action = c.chain(&[
        &c.l_par(x),
        &c.par_map(&pairing, &c.identity(x)),
        &c.dist_left(a, a, x),
        &c.tensor_map(&c.identity(a), &n.coaction),
    ]);
    Module { obj: x, action }
}

/// The regular module and the free modules A ⊗ X, β = (μ ⊗ X) ∘ α⁻¹.
pub fn sample_modules<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, extra: &[ObjId]) -> Vec<Module<B::F>> {
    let a = d.obj();
    let mut out = vec![Module { obj: a, action: d.alg.mu.clone() }];
    for &x in extra {
        let action = c.compose(&c.tensor_map(&d.alg.mu, &c.identity(x)), &c.iso_inverse(&c.assoc(a, a, x)));
        out.push(Module { obj: c.tensor(a, x), action });
    }
    out
}

/// The regular comodule and the cofree comodules A ⅋ X, γ = α⅋ ∘ (Δ ⅋ X).
pub fn sample_comodules<B: GvBackend>(c: &B, d: &FrobeniusData<B::F>, extra: &[ObjId]) -> Vec<Comodule<B::F>> {
    let a = d.obj();
    let mut out = vec![Comodule { obj: a, coaction: d.delta.clone() }];
    for &x in extra {
        let coaction = c.compose(&c.par_assoc(a, a, x), &c.par_map(&d.delta, &c.identity(x)));
        out.push(Comodule { obj: c.par(a, x), coaction });
    }
    out
}

/// For each sample: the input and the output satisfy their axioms, the
/// underlying object is unchanged, and the round trip returns the input.
pub fn roundtrip_report<B: GvBackend>(
    c: &B,
    d: &FrobeniusData<B::F>,
    modules: &[Module<B::F>],
    comodules: &[Comodule<B::F>],
) -> Report {
    let mut r = Report::new();
    for m in modules {
        let t = format!("({})", c.label(m.obj));
        let co = module_to_comodule(c, d, m);
        r.push("MODULE-VALID", t.clone(), check_module(c, d, m));
        r.push("MODULE-TO-COMODULE", t.clone(), co.obj == m.obj && check_comodule(c, d, &co));
        let back = comodule_to_module(c, d, &co);
        r.push("MODULE-ROUNDTRIP", t, back.obj == m.obj && same_morphism(&back.action, &m.action));
    }
    for n in comodules {
        let t = format!("({})", c.label(n.obj));
        let m = comodule_to_module(c, d, n);
        r.push("COMODULE-VALID", t.clone(), check_comodule(c, d, n));
        r.push("COMODULE-TO-MODULE", t.clone(), m.obj == n.obj && check_module(c, d, &m));
        let back = module_to_comodule(c, d, &m);
        r.push("COMODULE-ROUNDTRIP", t, back.obj == n.obj && same_morphism(&back.coaction, &n.coaction));
    }
    r
}
