//! Coherence of the two monoidal structures and the distributors.
//!
//! A1–A4 relate unitors and distributors, A5–A8 associators and
//! distributors, A9–A10 the two distributors with each other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{same_morphism, tuple_label, GvBackend, ObjId, Report};

fn pairs(cat: &[ObjId]) -> Vec<[ObjId; 2]> {
    cat.iter().flat_map(|&x| cat.iter().map(move |&y| [x, y])).collect()
}

fn triples(cat: &[ObjId]) -> Vec<[ObjId; 3]> {
    pairs(cat).into_iter().flat_map(|[x, y]| cat.iter().map(move |&z| [x, y, z])).collect()
}

fn quadruples(cat: &[ObjId]) -> Vec<[ObjId; 4]> {
    triples(cat).into_iter().flat_map(|[x, y, z]| cat.iter().map(move |&w| [x, y, z, w])).collect()
}

pub fn tensor_pentagon<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.compose(&c.assoc(x, y, c.tensor(z, w)), &c.assoc(c.tensor(x, y), z, w));
    let rhs = c.chain(&[
        &c.tensor_map(&c.identity(x), &c.assoc(y, z, w)),
        &c.assoc(x, c.tensor(y, z), w),
        &c.tensor_map(&c.assoc(x, y, z), &c.identity(w)),
    ]);
    same_morphism(&lhs, &rhs)
}

pub fn tensor_triangle<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.tensor_map(&c.identity(x), &c.l_tensor(y)), &c.assoc(x, c.unit(), y));
    let rhs = c.tensor_map(&c.r_tensor(x), &c.identity(y));
    same_morphism(&lhs, &rhs)
}

pub fn par_pentagon<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.compose(&c.par_assoc(x, y, c.par(z, w)), &c.par_assoc(c.par(x, y), z, w));
    let rhs = c.chain(&[
        &c.par_map(&c.identity(x), &c.par_assoc(y, z, w)),
        &c.par_assoc(x, c.par(y, z), w),
        &c.par_map(&c.par_assoc(x, y, z), &c.identity(w)),
    ]);
    same_morphism(&lhs, &rhs)
}

pub fn par_triangle<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.par_map(&c.identity(x), &c.l_par(y)), &c.par_assoc(x, c.dualizing(), y));
    let rhs = c.par_map(&c.r_par(x), &c.identity(y));
    same_morphism(&lhs, &rhs)
}

/// A1: (l⊗_X ⅋ Y) ∘ δ_l(1,X,Y) = l⊗_{X⅋Y}.
pub fn a1<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.par_map(&c.l_tensor(x), &c.identity(y)), &c.dist_left(c.unit(), x, y));
    same_morphism(&lhs, &c.l_tensor(c.par(x, y)))
}

/// A2: (X ⅋ r⊗_Y) ∘ δ_r(X,Y,1) = r⊗_{X⅋Y}.
pub fn a2<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.par_map(&c.identity(x), &c.r_tensor(y)), &c.dist_right(x, y, c.unit()));
    same_morphism(&lhs, &c.r_tensor(c.par(x, y)))
}

/// A3: r⅋_{X⊗Y} ∘ δ_l(X,Y,K) = X ⊗ r⅋_Y.
pub fn a3<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.r_par(c.tensor(x, y)), &c.dist_left(x, y, c.dualizing()));
    same_morphism(&lhs, &c.tensor_map(&c.identity(x), &c.r_par(y)))
}

/// A4: l⅋_{X⊗Y} ∘ δ_r(K,X,Y) = l⅋_X ⊗ Y.
pub fn a4<B: GvBackend>(c: &B, x: ObjId, y: ObjId) -> bool {
    let lhs = c.compose(&c.l_par(c.tensor(x, y)), &c.dist_right(c.dualizing(), x, y));
    same_morphism(&lhs, &c.tensor_map(&c.l_par(x), &c.identity(y)))
}

/// A5: δ_l(X⊗Y,Z,W) = (α⁻¹ ⅋ W) ∘ δ_l(X,Y⊗Z,W) ∘ (X ⊗ δ_l(Y,Z,W)) ∘ α(X,Y,Z⅋W).
pub fn a5<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.dist_left(c.tensor(x, y), z, w);
    let rhs = c.chain(&[
        &c.par_map(&c.iso_inverse(&c.assoc(x, y, z)), &c.identity(w)),
        &c.dist_left(x, c.tensor(y, z), w),
        &c.tensor_map(&c.identity(x), &c.dist_left(y, z, w)),
        &c.assoc(x, y, c.par(z, w)),
    ]);
    same_morphism(&lhs, &rhs)
}

/// A6: α⅋(X⊗Y,Z,W) ∘ (δ_l(X,Y,Z) ⅋ W) ∘ δ_l(X,Y⅋Z,W) = δ_l(X,Y,Z⅋W) ∘ (X ⊗ α⅋(Y,Z,W)).
pub fn a6<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.chain(&[
        &c.par_assoc(c.tensor(x, y), z, w),
        &c.par_map(&c.dist_left(x, y, z), &c.identity(w)),
        &c.dist_left(x, c.par(y, z), w),
    ]);
    let rhs = c.compose(&c.dist_left(x, y, c.par(z, w)), &c.tensor_map(&c.identity(x), &c.par_assoc(y, z, w)));
    same_morphism(&lhs, &rhs)
}

/// A7: (X ⅋ α(Y,Z,W)) ∘ δ_r(X,Y⊗Z,W) ∘ (δ_r(X,Y,Z) ⊗ W) = δ_r(X,Y,Z⊗W) ∘ α(X⅋Y,Z,W).
pub fn a7<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.chain(&[
        &c.par_map(&c.identity(x), &c.assoc(y, z, w)),
        &c.dist_right(x, c.tensor(y, z), w),
        &c.tensor_map(&c.dist_right(x, y, z), &c.identity(w)),
    ]);
    let rhs = c.compose(&c.dist_right(x, y, c.tensor(z, w)), &c.assoc(c.par(x, y), z, w));
    same_morphism(&lhs, &rhs)
}

/// A8: (X ⅋ δ_r(Y,Z,W)) ∘ δ_r(X,Y⅋Z,W) ∘ (α⅋(X,Y,Z) ⊗ W) = α⅋(X,Y,Z⊗W) ∘ δ_r(X⅋Y,Z,W).
pub fn a8<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.chain(&[
        &c.par_map(&c.identity(x), &c.dist_right(y, z, w)),
        &c.dist_right(x, c.par(y, z), w),
        &c.tensor_map(&c.par_assoc(x, y, z), &c.identity(w)),
    ]);
    let rhs = c.compose(&c.par_assoc(x, y, c.tensor(z, w)), &c.dist_right(c.par(x, y), z, w));
    same_morphism(&lhs, &rhs)
}

/// A9: δ_r(X⊗Y,Z,W) ∘ (δ_l(X,Y,Z) ⊗ W) = δ_l(X,Y,Z⊗W) ∘ (X ⊗ δ_r(Y,Z,W)) ∘ α(X,Y⅋Z,W).
pub fn a9<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.compose(&c.dist_right(c.tensor(x, y), z, w), &c.tensor_map(&c.dist_left(x, y, z), &c.identity(w)));
    let rhs = c.chain(&[
        &c.dist_left(x, y, c.tensor(z, w)),
        &c.tensor_map(&c.identity(x), &c.dist_right(y, z, w)),
        &c.assoc(x, c.par(y, z), w),
    ]);
    same_morphism(&lhs, &rhs)
}

/// A10: (δ_r(X,Y,Z) ⅋ W) ∘ δ_l(X⅋Y,Z,W) = α⅋(X,Y⊗Z,W)⁻¹ ∘ (X ⅋ δ_l(Y,Z,W)) ∘ δ_r(X,Y,Z⅋W).
pub fn a10<B: GvBackend>(c: &B, x: ObjId, y: ObjId, z: ObjId, w: ObjId) -> bool {
    let lhs = c.compose(&c.par_map(&c.dist_right(x, y, z), &c.identity(w)), &c.dist_left(c.par(x, y), z, w));
    let rhs = c.chain(&[
        &c.iso_inverse(&c.par_assoc(x, c.tensor(y, z), w)),
        &c.par_map(&c.identity(x), &c.dist_left(y, z, w)),
        &c.dist_right(x, y, c.par(z, w)),
    ]);
    same_morphism(&lhs, &rhs)
}

type Check2<B> = fn(&B, ObjId, ObjId) -> bool;
type Check4<B> = fn(&B, ObjId, ObjId, ObjId, ObjId) -> bool;

fn run2<B: GvBackend>(c: &B, cat: &[ObjId], name: &str, check: Check2<B>, out: &mut Report) {
    let results: Vec<(String, bool)> =
        pairs(cat).par_iter().map(|&[x, y]| (tuple_label(c, &[x, y]), check(c, x, y))).collect();
    for (t, ok) in results {
        out.push(name, t, ok);
    }
}

fn run4<B: GvBackend>(c: &B, cat: &[ObjId], name: &str, check: Check4<B>, out: &mut Report) {
    let results: Vec<(String, bool)> = quadruples(cat)
        .par_iter()
        .map(|&[x, y, z, w]| (tuple_label(c, &[x, y, z, w]), check(c, x, y, z, w)))
        .collect();
    for (t, ok) in results {
        out.push(name, t, ok);
    }
}

/// Mac Lane pentagon and triangle for ⊗ and ⅋, then A1–A10, over every
/// tuple of catalog objects.
pub fn check_coherence<B: GvBackend>(c: &B, cat: &[ObjId]) -> Report {
    let mut r = Report::new();
    run4(c, cat, "TENSOR-PENTAGON", tensor_pentagon::<B>, &mut r);
    run2(c, cat, "TENSOR-TRIANGLE", tensor_triangle::<B>, &mut r);
    run4(c, cat, "PAR-PENTAGON", par_pentagon::<B>, &mut r);
    run2(c, cat, "PAR-TRIANGLE", par_triangle::<B>, &mut r);
    run2(c, cat, "A1", a1::<B>, &mut r);
    run2(c, cat, "A2", a2::<B>, &mut r);
    run2(c, cat, "A3", a3::<B>, &mut r);
    run2(c, cat, "A4", a4::<B>, &mut r);
    run4(c, cat, "A5", a5::<B>, &mut r);
    run4(c, cat, "A6", a6::<B>, &mut r);
    run4(c, cat, "A7", a7::<B>, &mut r);
    run4(c, cat, "A8", a8::<B>, &mut r);
    run4(c, cat, "A9", a9::<B>, &mut r);
    run4(c, cat, "A10", a10::<B>, &mut r);
    r
}

/// Naturality of associators, unitors and distributors on seeded random
/// morphisms between catalog objects.
pub fn check_naturality<B: GvBackend>(c: &B, cat: &[ObjId], seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new();
    for [x, y, z] in triples(cat) {
        let xs = cat[rng.gen_range(0..cat.len())];
        let ys = cat[rng.gen_range(0..cat.len())];
        let zs = cat[rng.gen_range(0..cat.len())];
        let f = c.random_morphism(x, xs, &mut rng);
        let g = c.random_morphism(y, ys, &mut rng);
        let h = c.random_morphism(z, zs, &mut rng);
        let t = tuple_label(c, &[x, y, z, xs, ys, zs]);

        let lhs = c.compose(&c.dist_left(xs, ys, zs), &c.tensor_map(&f, &c.par_map(&g, &h)));
        let rhs = c.compose(&c.par_map(&c.tensor_map(&f, &g), &h), &c.dist_left(x, y, z));
        r.push("NAT-DIST-LEFT", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = c.compose(&c.dist_right(xs, ys, zs), &c.tensor_map(&c.par_map(&f, &g), &h));
        let rhs = c.compose(&c.par_map(&f, &c.tensor_map(&g, &h)), &c.dist_right(x, y, z));
        r.push("NAT-DIST-RIGHT", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = c.compose(&c.assoc(xs, ys, zs), &c.tensor_map(&c.tensor_map(&f, &g), &h));
        let rhs = c.compose(&c.tensor_map(&f, &c.tensor_map(&g, &h)), &c.assoc(x, y, z));
        r.push("NAT-ASSOC", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = c.compose(&c.par_assoc(xs, ys, zs), &c.par_map(&c.par_map(&f, &g), &h));
        let rhs = c.compose(&c.par_map(&f, &c.par_map(&g, &h)), &c.par_assoc(x, y, z));
        r.push("NAT-PAR-ASSOC", t, same_morphism(&lhs, &rhs));
    }
    for &x in cat {
        let xs = cat[rng.gen_range(0..cat.len())];
        let f = c.random_morphism(x, xs, &mut rng);
        let t = tuple_label(c, &[x, xs]);
        let one = c.identity(c.unit());
        let k = c.identity(c.dualizing());
        let ok = same_morphism(
            &c.compose(&c.l_tensor(xs), &c.tensor_map(&one, &f)),
            &c.compose(&f, &c.l_tensor(x)),
        ) && same_morphism(
            &c.compose(&c.r_tensor(xs), &c.tensor_map(&f, &one)),
            &c.compose(&f, &c.r_tensor(x)),
        ) && same_morphism(&c.compose(&c.l_par(xs), &c.par_map(&k, &f)), &c.compose(&f, &c.l_par(x)))
            && same_morphism(&c.compose(&c.r_par(xs), &c.par_map(&f, &k)), &c.compose(&f, &c.r_par(x)));
        r.push("NAT-UNITORS", t, ok);
    }
    r
}

/// Every structural morphism on catalog tuples is a morphism of the category
/// and the unitors and associators are invertible.
pub fn check_structure_validity<B: GvBackend>(c: &B, cat: &[ObjId]) -> Report {
    let mut r = Report::new();
    for &x in cat {
        let t = tuple_label(c, &[x]);
        let isos = [c.l_tensor(x), c.r_tensor(x), c.l_par(x), c.r_par(x), c.pivot(x)];
        let ok = isos.iter().all(|m| c.is_morphism(m) && m.mat.is_invertible());
        r.push("UNITORS-VALID", t, ok);
    }
    for [x, y, z] in triples(cat) {
        let t = tuple_label(c, &[x, y, z]);
        let a = [c.assoc(x, y, z), c.par_assoc(x, y, z)];
        let d = [c.dist_left(x, y, z), c.dist_right(x, y, z)];
        let ok = a.iter().all(|m| c.is_morphism(m) && m.mat.is_invertible()) && d.iter().all(|m| c.is_morphism(m));
        r.push("STRUCTURE-VALID", t, ok);
    }
    r
}

/// The first catalog triple whose left distributor is singular, with its
/// rank and size.
pub fn singular_left_distributor<B: GvBackend>(c: &B, cat: &[ObjId]) -> Option<([ObjId; 3], usize, usize)> {
    triples(cat).into_iter().find_map(|t @ [x, y, z]| {
        let m = c.dist_left(x, y, z).mat;
        let rank = m.rank();
        (m.rows() != m.cols() || rank < m.rows()).then_some((t, rank, m.rows().max(m.cols())))
    })
}
