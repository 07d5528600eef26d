//! Invariant tensors Hom(1, V^{⅋n}), the rotation E^(n)_V and the
//! indicators ν_{n,r}(V) = Tr((E^(n)_V)^r).
//!
//! V^{⅋n} is right-bracketed. The rotation peels the first ⅋-factor off
//! and appends it last.

#[cfg(test)]
mod tests;

use num_integer::Integer;

use crate::algebra::GroupTable;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::gvcore::functor::{check_pivotal_functor, LdFunctor};
use crate::gvcore::{tuple_label, GvBackend, Mor, ObjId, Report};

/// V^{⅋n}, right-bracketed; V^{⅋1} = V.
pub fn par_power<B: GvBackend>(c: &B, v: ObjId, n: usize) -> ObjId {
    assert!(n >= 1, "par powers start at 1");
    (1..n).fold(v, |acc, _| c.par(v, acc))
}

/// A basis of Hom(1, V^{⅋n}).
#[derive(Clone, Debug)]
pub struct InvariantSpace<F: Field> {
    pub obj: ObjId,
    pub arity: usize,
    pub basis: Vec<Mor<F>>,
}

impl<F: Field> InvariantSpace<F> {
    pub fn new<B: GvBackend<F = F>>(c: &B, v: ObjId, n: usize) -> Self {
        InvariantSpace { obj: v, arity: n, basis: c.hom_space(c.unit(), par_power(c, v, n)) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn matrix_of<B: GvBackend<F = F>>(&self, c: &B, images: &[Mor<F>], target: &[Mor<F>]) -> Result<Mat<F>> {
        let cols = images
            .iter()
            .map(|m| {
                c.coordinates(target, m)
                    .ok_or_else(|| Error::Inconsistent(format!("image outside Hom(1, {})", c.label(m.tgt))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_cols(c.field(), target.len(), &cols))
    }
}

/// B^{V,W}(f) = l⅋_W ∘ (ev_V ⅋ W) ∘ δ_l(DV,V,W) ∘ (DV ⊗ f) ∘ (r⊗_{DV})⁻¹ for f: 1 → V⅋W.
pub fn b_map<B: GvBackend>(c: &B, v: ObjId, w: ObjId, f: &Mor<B::F>) -> Mor<B::F> {
    let dv = c.dual(v);
    c.chain(&[
        &c.l_par(w),
        &c.par_map(&c.ev(v), &c.identity(w)),
        &c.dist_left(dv, v, w),
        &c.tensor_map(&c.identity(dv), f),
        &c.iso_inverse(&c.r_tensor(dv)),
    ])
}

/// (V^{⅋(n-1)}) ⅋ V → V^{⅋n}, built from ⅋-associators.
pub fn reassociate<B: GvBackend>(c: &B, v: ObjId, n: usize) -> Mor<B::F> {
    assert!(n >= 2);
    if n == 2 {
        return c.identity(c.par(v, v));
    }
    let inner = par_power(c, v, n - 2);
    c.compose(&c.par_map(&c.identity(v), &reassociate(c, v, n - 1)), &c.par_assoc(v, inner, v))
}

/// The rotation E^(n)_V as a function on Hom(1, V^{⅋n}), with the parts
/// that do not depend on the argument computed once.
pub struct Rotation<'a, B: GvBackend> {
    c: &'a B,
    v: ObjId,
    n: usize,
    w: ObjId,
    head: Mor<B::F>,
    ddv_id: Mor<B::F>,
    tail: Mor<B::F>,
    coev_dv: Mor<B::F>,
    // B-map pieces
    b_left: Mor<B::F>,
    dv_id: Mor<B::F>,
    r_inv: Mor<B::F>,
}

impl<'a, B: GvBackend> Rotation<'a, B> {
    pub fn new(c: &'a B, v: ObjId, n: usize) -> Result<Self> {
        assert!(n >= 1, "rotation needs n ≥ 1");
        let dv = c.dual(v);
        let ddv = c.dual(dv);
        // for n = 1 the second factor is K
        let w = if n == 1 { c.dualizing() } else { par_power(c, v, n - 1) };
        let rho_inv = c.inverse(&c.pivot(v))?;
        let tail = if n == 1 {
            c.compose(&rho_inv, &c.l_par(ddv))
        } else {
            c.compose(&reassociate(c, v, n), &c.par_map(&c.identity(w), &rho_inv))
        };
        let head = if n == 1 { c.inverse(&c.r_par(v))? } else { c.identity(c.par(v, w)) };
        let b_left = c.chain(&[&c.l_par(w), &c.par_map(&c.ev(v), &c.identity(w)), &c.dist_left(dv, v, w)]);
        Ok(Rotation {
            c,
            v,
            n,
            w,
            head,
            ddv_id: c.identity(ddv),
            tail,
            coev_dv: c.coev(dv)?,
            b_left,
            dv_id: c.identity(dv),
            r_inv: c.inverse(&c.r_tensor(dv))?,
        })
    }

    /// E(f) for f: 1 → V^{⅋n}.
    pub fn apply(&self, f: &Mor<B::F>) -> Mor<B::F> {
        let c = self.c;
        let g = c.compose(&self.head, f);
        let b = c.chain(&[&self.b_left, &c.tensor_map(&self.dv_id, &g), &self.r_inv]);
        debug_assert_eq!(b.tgt, self.w);
        c.chain(&[&self.tail, &c.par_map(&b, &self.ddv_id), &self.coev_dv])
    }

    /// Matrix of E in the given basis of the invariant space.
    pub fn matrix(&self, space: &InvariantSpace<B::F>) -> Result<Mat<B::F>> {
        assert_eq!((space.obj, space.arity), (self.v, self.n));
        let images: Vec<Mor<B::F>> = space.basis.iter().map(|f| self.apply(f)).collect();
        space.matrix_of(self.c, &images, &space.basis)
    }
}

/// E^(n)_V in the standard basis of Hom(1, V^{⅋n}).
pub fn rotation_matrix<B: GvBackend>(c: &B, v: ObjId, n: usize) -> Result<Mat<B::F>> {
    Rotation::new(c, v, n)?.matrix(&InvariantSpace::new(c, v, n))
}

/// ν_{n,r}(V) = Tr((E^(n)_V)^r).
pub fn indicator<B: GvBackend>(c: &B, v: ObjId, n: usize, r: u32) -> Result<<B::F as Field>::Elem> {
    Ok(rotation_matrix(c, v, n)?.pow(r).trace())
}

/// ν_{n,r} for all 1 ≤ n ≤ max_n and 1 ≤ r ≤ max_r.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicatorTable<F: Field> {
    pub entries: Vec<(usize, u32, F::Elem)>,
}

impl<F: Field> IndicatorTable<F> {
    pub fn compute<B: GvBackend<F = F>>(c: &B, v: ObjId, max_n: usize, max_r: u32) -> Result<Self> {
        let mut entries = Vec::new();
        for n in 1..=max_n {
            let e = rotation_matrix(c, v, n)?;
            let mut power = e.clone();
            for r in 1..=max_r {
                entries.push((n, r, power.trace()));
                power = power.mul(&e);
            }
        }
        Ok(IndicatorTable { entries })
    }

    pub fn get(&self, n: usize, r: u32) -> Option<&F::Elem> {
        self.entries.iter().find(|(a, b, _)| (*a, *b) == (n, r)).map(|(_, _, v)| v)
    }
}

/// E^(1) = id, and (E^(n))^n = id for 2 ≤ n ≤ max_n. Since E^(1) is the
/// identity, ν_{1,1}(V) is dim Hom(1, V) read in the field.
pub fn check_rotation_identities<B: GvBackend>(c: &B, objs: &[ObjId], max_n: usize) -> Report {
    let mut rep = Report::new();
    for &v in objs {
        let t = tuple_label(c, &[v]);
        let e1 = rotation_matrix(c, v, 1);
        rep.push("E1-IDENTITY", t.clone(), e1.as_ref().map(|m| m.is_identity()).unwrap_or(false));
        let f = c.field();
        let nu11 = e1.map(|m| m.trace() == f.from_i64(m.rows() as i64)).unwrap_or(false);
        rep.push("NU11-HOM-DIM", t.clone(), nu11);
        for n in 2..=max_n {
            let ok = rotation_matrix(c, v, n).map(|m| m.pow(n as u32).is_identity()).unwrap_or(false);
            rep.push(&format!("E{n}-POWER"), t.clone(), ok);
        }
    }
    rep
}

/// Trace well-definedness: the rotation matrix in the reversed basis is
/// conjugate to the standard one and has the same powers' traces.
pub fn check_basis_independence<B: GvBackend>(c: &B, v: ObjId, n: usize, max_r: u32) -> Result<bool> {
    let rot = Rotation::new(c, v, n)?;
    let space = InvariantSpace::new(c, v, n);
    let mut reversed = space.clone();
    reversed.basis.reverse();
    let (e, e_rev) = (rot.matrix(&space)?, rot.matrix(&reversed)?);
    Ok((1..=max_r).all(|r| e.pow(r).trace() == e_rev.pow(r).trace()))
}

/// d^{gcd(n,r)}: the indicator of a d-dimensional vector space.
pub fn vect_oracle<F: Field>(f: &F, d: usize, n: usize, r: usize) -> F::Elem {
    f.pow(&f.from_i64(d as i64), n.gcd(&r) as u64)
}

/// (1/|G|) Σ_g χ(g^n) in the field.
pub fn classical_fs_oracle<F: Field>(f: &F, group: &GroupTable, character: &[F::Elem], n: usize) -> Result<F::Elem> {
    let order = group.order();
    let inv = f.inv(&f.from_i64(order as i64)).ok_or(Error::ModularCharacteristic(f.characteristic()))?;
    let sum = (0..order).fold(f.zero(), |acc, g| f.add(&acc, &character[group.power(g, n)]));
    Ok(f.mul(&sum, &inv))
}

/// υ^n: F(V^{⅋n}) → F(V)^{⅋n}, composed from υ².
pub fn ups_power<C, D, G>(fun: &G, v: ObjId, n: usize) -> Mor<C::F>
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let (src, tgt) = (fun.source(), fun.target());
    if n == 1 {
        return tgt.identity(fun.obj(v));
    }
    let rest = par_power(src, v, n - 1);
    tgt.compose(&tgt.par_map(&tgt.identity(fun.obj(v)), &ups_power(fun, v, n - 1)), &fun.ups2(v, rest))
}

/// F̃_n(f) = υ^n ∘ F(f) ∘ φ⁰, as a matrix between the invariant spaces of V
/// and F(V).
pub fn transported_map<C, D, G>(fun: &G, v: ObjId, n: usize) -> Result<Mat<C::F>>
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let (src, tgt) = (fun.source(), fun.target());
    let space = InvariantSpace::new(src, v, n);
    let target = InvariantSpace::new(tgt, fun.obj(v), n);
    let up = ups_power(fun, v, n);
    let phi0 = fun.phi0();
    let images: Vec<Mor<C::F>> = space.basis.iter().map(|f| tgt.chain(&[&up, &fun.mor(f), &phi0])).collect();
    target.matrix_of(tgt, &images, &target.basis)
}

/// Indicator invariance ν_{n,r}(V) = ν_{n,r}(FV) and the square
/// F̃_n ∘ E_V = E_{FV} ∘ F̃_n, after certifying the functor.
pub fn check_invariance<C, D, G>(fun: &G, objs: &[ObjId], max_n: usize, max_r: u32, seed: u64) -> Result<Report>
where
    C: GvBackend,
    D: GvBackend<F = C::F>,
    G: LdFunctor<C, D>,
{
    let (src, tgt) = (fun.source(), fun.target());
    let cert = check_pivotal_functor(fun, objs, seed);
    if let Some(bad) = cert.failures().next() {
        return Err(Error::FunctorRejected(format!("functor fails {bad}")));
    }
    if !fun.phi0().mat.is_invertible() {
        return Err(Error::FunctorRejected("φ⁰ is not invertible".into()));
    }
    let mut rep = Report::new();
    for &v in objs {
        for n in 1..=max_n {
            if n >= 2 && !fun.ups2(v, par_power(src, v, n - 1)).mat.is_invertible() {
                return Err(Error::FunctorRejected(format!("υ² not invertible at {}", src.label(v))));
            }
            let t = format!("({},{n})", src.label(v));
            let e = rotation_matrix(src, v, n)?;
            let fe = rotation_matrix(tgt, fun.obj(v), n)?;
            let transport = transported_map(fun, v, n)?;
            rep.push("TRANSPORT-SQUARE", t.clone(), transport.mul(&e) == fe.mul(&transport));
            for r in 1..=max_r {
                let t = format!("({},{n},{r})", src.label(v));
                rep.push("INDICATOR-INVARIANT", t, e.pow(r).trace() == fe.pow(r).trace());
            }
        }
    }
    Ok(rep)
}
