//! LD-duals, the pairing correspondence Φ/Ψ, and pivotal structures.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{same_morphism, tuple_label, GvBackend, Mor, ObjId, Report};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// Left side of (S1) for a pairing κ: P⊗Q → K and copairing κ̄: 1 → Q⅋P:
/// (κ ⅋ P) ∘ δ_l(P,Q,P) ∘ (P ⊗ κ̄).
pub fn snake1_lhs<B: GvBackend>(c: &B, pairing: &Mor<B::F>, copairing: &Mor<B::F>, p: ObjId, q: ObjId) -> Mor<B::F> {
    c.chain(&[
        &c.par_map(pairing, &c.identity(p)),
        &c.dist_left(p, q, p),
        &c.tensor_map(&c.identity(p), copairing),
    ])
}

/// Right side of (S1): (l⅋_P)⁻¹ ∘ r⊗_P.
pub fn snake1_rhs<B: GvBackend>(c: &B, p: ObjId) -> Mor<B::F> {
    c.compose(&c.iso_inverse(&c.l_par(p)), &c.r_tensor(p))
}

/// Left side of (S2): (Q ⅋ κ) ∘ δ_r(Q,P,Q) ∘ (κ̄ ⊗ Q).
pub fn snake2_lhs<B: GvBackend>(c: &B, pairing: &Mor<B::F>, copairing: &Mor<B::F>, p: ObjId, q: ObjId) -> Mor<B::F> {
    c.chain(&[
        &c.par_map(&c.identity(q), pairing),
        &c.dist_right(q, p, q),
        &c.tensor_map(copairing, &c.identity(q)),
    ])
}

/// Right side of (S2): (r⅋_Q)⁻¹ ∘ l⊗_Q.
pub fn snake2_rhs<B: GvBackend>(c: &B, q: ObjId) -> Mor<B::F> {
    c.compose(&c.iso_inverse(&c.r_par(q)), &c.l_tensor(q))
}

/// The unique copairing 1 → Q⅋P making (S1) and (S2) hold for the given
/// pairing P⊗Q → K, found by a linear solve over Hom(1, Q⅋P).
pub fn solve_copairing<B: GvBackend>(c: &B, pairing: &Mor<B::F>, p: ObjId, q: ObjId) -> Result<Mor<B::F>> {
    let f = c.field();
    let basis = c.hom_space(c.unit(), c.par(q, p));
    let rhs1 = snake1_rhs(c, p).mat.vectorize();
    let rhs2 = snake2_rhs(c, q).mat.vectorize();
    let rhs = rhs1.vstack(&rhs2);
    let cols: Vec<Vec<<B::F as Field>::Elem>> = basis
        .iter()
        .map(|h| {
            let mut v = snake1_lhs(c, pairing, h, p, q).mat.data().to_vec();
            v.extend_from_slice(snake2_lhs(c, pairing, h, p, q).mat.data());
            v
        })
        .collect();
    let system = Mat::from_cols(f, rhs.rows(), &cols);
    let coeffs = system.solve(&rhs).ok_or_else(|| {
        Error::Inconsistent(format!("no copairing for {} and {}", c.label(p), c.label(q)))
    })?;
    if system.rank() < basis.len() {
        return Err(Error::Inconsistent(format!(
            "copairing for {} and {} is not unique",
            c.label(p),
            c.label(q)
        )));
    }
    let zero = c.zero_map(c.unit(), c.par(q, p));
    Ok(basis.iter().zip(coeffs.col(0)).fold(zero, |acc, (h, a)| acc.add(&h.scale(&a))))
}

/// Ψ(g) = ev_Y ∘ (g ⊗ Y) for g: X → DY.
pub fn psi<B: GvBackend>(c: &B, g: &Mor<B::F>, y: ObjId) -> Mor<B::F> {
    assert_eq!(g.tgt, c.dual(y), "psi expects a map into D(Y)");
    c.compose(&c.ev(y), &c.tensor_map(g, &c.identity(y)))
}

/// Φ(γ) = l⅋_{DY} ∘ (γ ⅋ DY) ∘ δ_l(X,Y,DY) ∘ (X ⊗ coev_Y) ∘ (r⊗_X)⁻¹ for γ: X⊗Y → K.
pub fn phi<B: GvBackend>(c: &B, gamma: &Mor<B::F>, x: ObjId, y: ObjId) -> Result<Mor<B::F>> {
    assert_eq!(gamma.src, c.tensor(x, y), "phi expects a map out of X⊗Y");
    let dy = c.dual(y);
    Ok(c.chain(&[
        &c.l_par(dy),
        &c.par_map(gamma, &c.identity(dy)),
        &c.dist_left(x, y, dy),
        &c.tensor_map(&c.identity(x), &c.coev(y)?),
        &c.iso_inverse(&c.r_tensor(x)),
    ]))
}

/// ψ_{X,Y}(γ) := Ψ(D(Φ(γ)) ∘ ρ_Y), a map Y⊗X → K.
pub fn pivot_hom_iso<B: GvBackend>(c: &B, gamma: &Mor<B::F>, x: ObjId, y: ObjId) -> Result<Mor<B::F>> {
    let g = c.compose(&c.dual_map(&phi(c, gamma, x, y)?), &c.pivot(y));
    Ok(psi(c, &g, x))
}

fn ok_or_fail(r: Result<bool>) -> bool {
    r.unwrap_or(false)
}

/// (S1) and (S2) for left duals (ev, coev) and right duals (ev', coev'),
/// uniqueness of coev, and the unit pairing 1⊗K → K.
pub fn check_snakes<B: GvBackend>(c: &B, cat: &[ObjId]) -> Report {
    let mut r = Report::new();
    for &x in cat {
        let t = tuple_label(c, &[x]);
        let dx = c.dual(x);
        let ev = c.ev(x);
        r.push("EV-VALID", t.clone(), c.is_morphism(&ev) && c.is_morphism(&c.ev_prime(x)));
        let left = c.coev(x).map(|coev| {
            (
                same_morphism(&snake1_lhs(c, &ev, &coev, dx, x), &snake1_rhs(c, dx)),
                same_morphism(&snake2_lhs(c, &ev, &coev, dx, x), &snake2_rhs(c, x)),
            )
        });
        let (s1, s2) = left.unwrap_or((false, false));
        r.push("SNAKE-S1", t.clone(), s1);
        r.push("SNAKE-S2", t.clone(), s2);

        let sx = c.dual_prime(x);
        let evp = c.ev_prime(x);
        let right = c.coev_prime(x).map(|coevp| {
            (
                same_morphism(&snake1_lhs(c, &evp, &coevp, x, sx), &snake1_rhs(c, x)),
                same_morphism(&snake2_lhs(c, &evp, &coevp, x, sx), &snake2_rhs(c, sx)),
            )
        });
        let (s1, s2) = right.unwrap_or((false, false));
        r.push("SNAKE-RIGHT-S1", t.clone(), s1);
        r.push("SNAKE-RIGHT-S2", t.clone(), s2);

        r.push("COEV-UNIQUE", t, coev_perturbations_break_s1(c, x));
    }
    let one = c.unit();
    let k = c.dualizing();
    let pairing = c.l_tensor(k);
    let copairing = c.iso_inverse(&c.l_par(one));
    let ok = same_morphism(&snake1_lhs(c, &pairing, &copairing, one, k), &snake1_rhs(c, one))
        && same_morphism(&snake2_lhs(c, &pairing, &copairing, one, k), &snake2_rhs(c, k));
    r.push("UNIT-SNAKE", tuple_label(c, &[one, k]), ok);
    r
}

/// Adding any nonzero element of Hom(1, X⅋DX) to coev_X breaks (S1): the
/// linear map h ↦ S1-lhs(h) is injective.
pub fn coev_perturbations_break_s1<B: GvBackend>(c: &B, x: ObjId) -> bool {
    let dx = c.dual(x);
    let ev = c.ev(x);
    let basis = c.hom_space(c.unit(), c.par(x, dx));
    let cols: Vec<Vec<_>> = basis.iter().map(|h| snake1_lhs(c, &ev, h, dx, x).mat.data().to_vec()).collect();
    let n = cols.first().map_or(0, |v| v.len());
    Mat::from_cols(c.field(), n, &cols).rank() == basis.len()
}

/// Φ and Ψ are mutually inverse on Hom(X⊗Y, K) and Hom(X, DY); the sliding
/// identity ev_X ∘ (D(f) ⊗ X) = ev_Y ∘ (DY ⊗ f) holds on random f: X → Y.
pub fn check_phi_psi<B: GvBackend>(c: &B, cat: &[ObjId], seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new();
    for &x in cat {
        for &y in cat {
            let t = tuple_label(c, &[x, y]);
            let k = c.dualizing();
            let ok = c.hom_space(c.tensor(x, y), k).iter().all(|gamma| {
                ok_or_fail(phi(c, gamma, x, y).map(|g| same_morphism(&psi(c, &g, y), gamma)))
            });
            r.push("PSI-PHI", t.clone(), ok);
            let ok = c
                .hom_space(x, c.dual(y))
                .iter()
                .all(|g| ok_or_fail(phi(c, &psi(c, g, y), x, y).map(|back| same_morphism(&back, g))));
            r.push("PHI-PSI", t.clone(), ok);

            let f = c.random_morphism(x, y, &mut rng);
            let lhs = c.compose(&c.ev(x), &c.tensor_map(&c.dual_map(&f), &c.identity(x)));
            let rhs = c.compose(&c.ev(y), &c.tensor_map(&c.identity(c.dual(y)), &f));
            r.push("SLIDING", t, same_morphism(&lhs, &rhs));
        }
    }
    r
}

/// Pivotal structure: ρ invertible and natural, ψ_{Y,X} ∘ ψ_{X,Y} = id, and
/// the hexagon relating ψ with the associators.
pub fn check_pivotal<B: GvBackend>(c: &B, cat: &[ObjId], seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new();
    let k = c.dualizing();
    for &x in cat {
        let rho = c.pivot(x);
        r.push("PIVOT-ISO", tuple_label(c, &[x]), c.is_morphism(&rho) && rho.mat.is_invertible());
    }
    for &x in cat {
        for &y in cat {
            let t = tuple_label(c, &[x, y]);
            let f = c.random_morphism(x, y, &mut rng);
            let lhs = c.compose(&c.pivot(y), &f);
            let rhs = c.compose(&c.dual_map(&c.dual_map(&f)), &c.pivot(x));
            r.push("PIVOT-NATURAL", t.clone(), same_morphism(&lhs, &rhs));
            let ok = c.hom_space(c.tensor(x, y), k).iter().all(|gamma| {
                ok_or_fail(
                    pivot_hom_iso(c, gamma, x, y)
                        .and_then(|g| pivot_hom_iso(c, &g, y, x))
                        .map(|back| same_morphism(&back, gamma)),
                )
            });
            r.push("PIVOT-INVOLUTIVE", t, ok);
        }
    }
    for &x in cat {
        for &y in cat {
            for &z in cat {
                let t = tuple_label(c, &[x, y, z]);
                let ok = c
                    .hom_space(c.tensor(c.tensor(z, x), y), k)
                    .iter()
                    .all(|gamma| ok_or_fail(pivot_hexagon(c, gamma, x, y, z)));
                r.push("PIVOT-HEXAGON", t, ok);
            }
        }
    }
    r
}

/// γ ∘ α⁻¹(Z,X,Y) = ψ_{X⊗Y,Z}(ψ_{Y⊗Z,X}(ψ_{Z⊗X,Y}(γ) ∘ α(Y,Z,X)) ∘ α(X,Y,Z))
/// for γ: (Z⊗X)⊗Y → K.
pub fn pivot_hexagon<B: GvBackend>(c: &B, gamma: &Mor<B::F>, x: ObjId, y: ObjId, z: ObjId) -> Result<bool> {
    let top = c.compose(gamma, &c.iso_inverse(&c.assoc(z, x, y)));
    let g1 = pivot_hom_iso(c, gamma, c.tensor(z, x), y)?;
    let g2 = c.compose(&g1, &c.assoc(y, z, x));
    let g3 = pivot_hom_iso(c, &g2, c.tensor(y, z), x)?;
    let g4 = c.compose(&g3, &c.assoc(x, y, z));
    let g5 = pivot_hom_iso(c, &g4, c.tensor(x, y), z)?;
    Ok(same_morphism(&top, &g5))
}
