//! Linearly distributive functors between backends, and pivotality of a
//! functor with respect to the canonical duality transformation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{same_morphism, tuple_label, GvBackend, Mor, ObjId, Report};
use crate::error::{Error, Result};
use crate::exactla::Mat;

/// A functor with lax structure for ⊗ and oplax structure for ⅋.
pub trait LdFunctor<C: GvBackend, D: GvBackend<F = C::F>>: Send + Sync {
    fn source(&self) -> &C;
    fn target(&self) -> &D;
    fn obj(&self, x: ObjId) -> ObjId;
    fn mor(&self, f: &Mor<C::F>) -> Mor<C::F>;
    /// φ²_{X,Y}: FX ⊗ FY → F(X⊗Y).
    fn phi2(&self, x: ObjId, y: ObjId) -> Mor<C::F>;
    /// φ⁰: 1 → F1.
    fn phi0(&self) -> Mor<C::F>;
    /// υ²_{X,Y}: F(X⅋Y) → FX ⅋ FY.
    fn ups2(&self, x: ObjId, y: ObjId) -> Mor<C::F>;
    /// υ⁰: FK → K.
    fn ups0(&self) -> Mor<C::F>;
}

/// Identity functor of a backend with identity coherence data.
pub struct IdentityFunctor<'a, B: GvBackend> {
    cat: &'a B,
}

impl<'a, B: GvBackend> IdentityFunctor<'a, B> {
    pub fn new(cat: &'a B) -> Self {
        IdentityFunctor { cat }
    }
}

impl<B: GvBackend> LdFunctor<B, B> for IdentityFunctor<'_, B> {
    fn source(&self) -> &B {
        self.cat
    }
    fn target(&self) -> &B {
        self.cat
    }
    fn obj(&self, x: ObjId) -> ObjId {
        x
    }
    fn mor(&self, f: &Mor<B::F>) -> Mor<B::F> {
        f.clone()
    }
    fn phi2(&self, x: ObjId, y: ObjId) -> Mor<B::F> {
        self.cat.identity(self.cat.tensor(x, y))
    }
    fn phi0(&self) -> Mor<B::F> {
        self.cat.identity(self.cat.unit())
    }
    fn ups2(&self, x: ObjId, y: ObjId) -> Mor<B::F> {
        self.cat.identity(self.cat.par(x, y))
    }
    fn ups0(&self) -> Mor<B::F> {
        self.cat.identity(self.cat.dualizing())
    }
}

fn triples(cat: &[ObjId]) -> Vec<[ObjId; 3]> {
    cat.iter()
        .flat_map(|&x| cat.iter().flat_map(move |&y| cat.iter().map(move |&z| [x, y, z])))
        .collect()
}

/// Functoriality, lax/oplax coherence, and compatibility with both
/// distributors, on every tuple drawn from the catalog.
pub fn check_functor<C, D, G>(fun: &G, cat: &[ObjId], seed: u64) -> Report
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let src = fun.source();
    let tgt = fun.target();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new();
    let fo = |x: ObjId| fun.obj(x);

    let data_ok = tgt.is_morphism(&fun.phi0()) && tgt.is_morphism(&fun.ups0());
    r.push("FUNCTOR-DATA-VALID", "()", data_ok);

    for &x in cat {
        let t = tuple_label(src, &[x]);
        let id_ok = same_morphism(&fun.mor(&src.identity(x)), &tgt.identity(fo(x)));
        r.push("FUNCTOR-ID", t.clone(), id_ok);

        let lhs = tgt.chain(&[
            &fun.mor(&src.l_tensor(x)),
            &fun.phi2(src.unit(), x),
            &tgt.tensor_map(&fun.phi0(), &tgt.identity(fo(x))),
        ]);
        r.push("LAX-UNIT-LEFT", t.clone(), same_morphism(&lhs, &tgt.l_tensor(fo(x))));
        let lhs = tgt.chain(&[
            &fun.mor(&src.r_tensor(x)),
            &fun.phi2(x, src.unit()),
            &tgt.tensor_map(&tgt.identity(fo(x)), &fun.phi0()),
        ]);
        r.push("LAX-UNIT-RIGHT", t.clone(), same_morphism(&lhs, &tgt.r_tensor(fo(x))));

        let lhs = tgt.chain(&[
            &tgt.l_par(fo(x)),
            &tgt.par_map(&fun.ups0(), &tgt.identity(fo(x))),
            &fun.ups2(src.dualizing(), x),
        ]);
        r.push("OPLAX-COUNIT-LEFT", t.clone(), same_morphism(&lhs, &fun.mor(&src.l_par(x))));
        let lhs = tgt.chain(&[
            &tgt.r_par(fo(x)),
            &tgt.par_map(&tgt.identity(fo(x)), &fun.ups0()),
            &fun.ups2(x, src.dualizing()),
        ]);
        r.push("OPLAX-COUNIT-RIGHT", t, same_morphism(&lhs, &fun.mor(&src.r_par(x))));
    }

    for &x in cat {
        for &y in cat {
            let t = tuple_label(src, &[x, y]);
            let valid = tgt.is_morphism(&fun.phi2(x, y)) && tgt.is_morphism(&fun.ups2(x, y));
            r.push("FUNCTOR-DATA-VALID", t.clone(), valid);

            let f = src.random_morphism(x, y, &mut rng);
            let g = src.random_morphism(y, x, &mut rng);
            let comp = same_morphism(&fun.mor(&src.compose(&g, &f)), &tgt.compose(&fun.mor(&g), &fun.mor(&f)));
            r.push("FUNCTOR-COMPOSE", t.clone(), comp);

            let ff = fun.mor(&f);
            let fg = fun.mor(&g);
            let lhs = tgt.compose(&fun.phi2(y, x), &tgt.tensor_map(&ff, &fg));
            let rhs = tgt.compose(&fun.mor(&src.tensor_map(&f, &g)), &fun.phi2(x, y));
            r.push("LAX-NATURAL", t.clone(), same_morphism(&lhs, &rhs));
            let lhs = tgt.compose(&tgt.par_map(&ff, &fg), &fun.ups2(x, y));
            let rhs = tgt.compose(&fun.ups2(y, x), &fun.mor(&src.par_map(&f, &g)));
            r.push("OPLAX-NATURAL", t, same_morphism(&lhs, &rhs));
        }
    }

    for [x, y, z] in triples(cat) {
        let t = tuple_label(src, &[x, y, z]);
        let (fx, fy, fz) = (fo(x), fo(y), fo(z));

        let lhs = tgt.chain(&[
            &fun.phi2(x, src.tensor(y, z)),
            &tgt.tensor_map(&tgt.identity(fx), &fun.phi2(y, z)),
            &tgt.assoc(fx, fy, fz),
        ]);
        let rhs = tgt.chain(&[
            &fun.mor(&src.assoc(x, y, z)),
            &fun.phi2(src.tensor(x, y), z),
            &tgt.tensor_map(&fun.phi2(x, y), &tgt.identity(fz)),
        ]);
        r.push("LAX-ASSOC", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = tgt.chain(&[
            &tgt.par_assoc(fx, fy, fz),
            &tgt.par_map(&fun.ups2(x, y), &tgt.identity(fz)),
            &fun.ups2(src.par(x, y), z),
        ]);
        let rhs = tgt.chain(&[
            &tgt.par_map(&tgt.identity(fx), &fun.ups2(y, z)),
            &fun.ups2(x, src.par(y, z)),
            &fun.mor(&src.par_assoc(x, y, z)),
        ]);
        r.push("OPLAX-COASSOC", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = tgt.chain(&[
            &fun.ups2(src.tensor(x, y), z),
            &fun.mor(&src.dist_left(x, y, z)),
            &fun.phi2(x, src.par(y, z)),
        ]);
        let rhs = tgt.chain(&[
            &tgt.par_map(&fun.phi2(x, y), &tgt.identity(fz)),
            &tgt.dist_left(fx, fy, fz),
            &tgt.tensor_map(&tgt.identity(fx), &fun.ups2(y, z)),
        ]);
        r.push("LD-DIST-LEFT", t.clone(), same_morphism(&lhs, &rhs));

        let lhs = tgt.chain(&[
            &fun.ups2(x, src.tensor(y, z)),
            &fun.mor(&src.dist_right(x, y, z)),
            &fun.phi2(src.par(x, y), z),
        ]);
        let rhs = tgt.chain(&[
            &tgt.par_map(&tgt.identity(fx), &fun.phi2(y, z)),
            &tgt.dist_right(fx, fy, fz),
            &tgt.tensor_map(&fun.ups2(x, y), &tgt.identity(fz)),
        ]);
        r.push("LD-DIST-RIGHT", t, same_morphism(&lhs, &rhs));
    }
    r
}

/// ξ_X: F(DX) → D(FX), the unique map with
/// (FX ⅋ ξ) ∘ υ²_{X,DX} ∘ F(coev_X) ∘ φ⁰ = coev_{FX}.
pub fn duality_transformation<C, D, G>(fun: &G, x: ObjId) -> Result<Mor<C::F>>
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let src = fun.source();
    let tgt = fun.target();
    let fx = fun.obj(x);
    let fdx = fun.obj(src.dual(x));
    let dfx = tgt.dual(fx);
    let transported = tgt.chain(&[&fun.ups2(x, src.dual(x)), &fun.mor(&src.coev(x)?), &fun.phi0()]);
    let goal = tgt.coev(fx)?;
    let basis = tgt.hom_space(fdx, dfx);
    let cols: Vec<Vec<_>> = basis
        .iter()
        .map(|h| {
            tgt.compose(&tgt.par_map(&tgt.identity(fx), h), &transported)
                .mat
                .data()
                .to_vec()
        })
        .collect();
    let system = Mat::from_cols(tgt.field(), goal.mat.rows() * goal.mat.cols(), &cols);
    let coeffs = system
        .solve(&goal.mat.vectorize())
        .ok_or_else(|| Error::FunctorRejected(format!("no duality transformation at {}", src.label(x))))?;
    if system.rank() < basis.len() {
        return Err(Error::FunctorRejected(format!("duality transformation at {} is not unique", src.label(x))));
    }
    let zero = tgt.zero_map(fdx, dfx);
    Ok(basis.iter().zip(coeffs.col(0)).fold(zero, |acc, (h, a)| acc.add(&h.scale(&a))))
}

/// Functor checks, then: ξ exists and is invertible, and
/// F(ρ_X) = ξ_{DX}⁻¹ ∘ D(ξ_X) ∘ ρ_{FX}.
pub fn check_pivotal_functor<C, D, G>(fun: &G, cat: &[ObjId], seed: u64) -> Report
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let src = fun.source();
    let tgt = fun.target();
    let mut r = check_functor(fun, cat, seed);
    for &x in cat {
        let t = tuple_label(src, &[x]);
        let xi = duality_transformation(fun, x);
        let xi_d = duality_transformation(fun, src.dual(x));
        let iso = matches!((&xi, &xi_d), (Ok(a), Ok(b)) if a.mat.is_invertible() && b.mat.is_invertible());
        r.push("XI-ISO", t.clone(), iso);
        let square = match (xi, xi_d) {
            (Ok(xi), Ok(xi_d)) if iso => {
                let rhs = tgt.chain(&[&tgt.iso_inverse(&xi_d), &tgt.dual_map(&xi), &tgt.pivot(fun.obj(x))]);
                same_morphism(&fun.mor(&src.pivot(x)), &rhs)
            }
            _ => false,
        };
        r.push("PIVOTAL-FUNCTOR", t, square);
    }
    r
}
