//! Endofunctors of bimodules that twist the actions by an algebra
//! automorphism σ and re-coordinatize every object by an invertible matrix.

use std::collections::HashMap;
use std::sync::Mutex;

use super::BimodCat;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::gvcore::functor::LdFunctor;
use crate::gvcore::{GvBackend, Mor, ObjId};

type Basis<F> = dyn Fn(usize) -> Mat<F> + Send + Sync;

/// F(X) is X with a ↦ P_X L_{σ(a)} P_X⁻¹ (likewise on the right) and
/// F(f) = P_Y f P_X⁻¹.
pub struct ConjugationFunctor<'a, F: Field> {
    cat: &'a BimodCat<F>,
    sigma: Mat<F>,
    change: Box<Basis<F>>,
    images: Mutex<HashMap<ObjId, ObjId>>,
    wrong_unit: bool,
}

impl<'a, F: Field> ConjugationFunctor<'a, F> {
    /// `sigma` has the image of the j-th basis element as column j; `change`
    /// gives the coordinate change for each dimension.
    pub fn new(
        cat: &'a BimodCat<F>,
        sigma: Mat<F>,
        change: impl Fn(usize) -> Mat<F> + Send + Sync + 'static,
    ) -> Result<Self> {
        let alg = cat.algebra();
        let n = alg.dim();
        if sigma.shape() != (n, n) || !sigma.is_invertible() {
            return Err(Error::FunctorRejected("σ must be an invertible n×n matrix".into()));
        }
        let f = alg.field();
        let col = |j: usize| sigma.col(j);
        if sigma.mul(&alg.unit_vector()) != alg.unit_vector() {
            return Err(Error::FunctorRejected("σ does not fix the unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = sigma.mul(&Mat::column_vector(f, alg.mul(&unit(f, n, i), &unit(f, n, j))));
                let rhs = Mat::column_vector(f, alg.mul(&col(i), &col(j)));
                if lhs != rhs {
                    return Err(Error::FunctorRejected(format!("σ is not multiplicative on e{i} e{j}")));
                }
            }
        }
        Ok(ConjugationFunctor { cat, sigma, change: Box::new(change), images: Mutex::new(HashMap::new()), wrong_unit: false })
    }

    /// σ = id, objects re-coordinatized by a fixed invertible matrix per
    /// dimension.
    pub fn relabel(cat: &'a BimodCat<F>) -> Self {
        let f = cat.field().clone();
        let n = cat.algebra().dim();
        ConjugationFunctor::new(cat, Mat::identity(&f, n), move |d| relabel_matrix(&f, d))
            .expect("identity is an automorphism")
    }

    /// Twist by σ with no coordinate change.
    pub fn twist(cat: &'a BimodCat<F>, sigma: Mat<F>) -> Result<Self> {
        let f = cat.field().clone();
        ConjugationFunctor::new(cat, sigma, move |d| Mat::identity(&f, d))
    }

    /// The same functor with φ⁰ replaced by the plain coordinate change,
    /// forgetting σ; a deliberately broken structure for negative tests.
    pub fn with_wrong_unit(mut self) -> Self {
        self.wrong_unit = true;
        self
    }

    fn p(&self, x: ObjId) -> Mat<F> {
        (self.change)(self.cat.dim(x))
    }

    fn p_inv(&self, x: ObjId) -> Mat<F> {
        self.p(x).inverse().expect("coordinate change must be invertible")
    }

    fn twisted(&self, ms: &[Mat<F>], p: &Mat<F>, p_inv: &Mat<F>) -> Vec<Mat<F>> {
        let f = self.cat.field();
        let d = p.rows();
        (0..ms.len())
            .map(|i| {
                let s = self.sigma.col(i);
                let m = ms.iter().zip(&s).fold(Mat::zeros(f, d, d), |acc, (mj, c)| acc.add(&mj.scale(c)));
                p.mul(&m).mul(p_inv)
            })
            .collect()
    }
}

fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Upper unitriangular matrix with all ones above the diagonal, composed with
/// the reversal permutation; invertible over every field.
pub fn relabel_matrix<F: Field>(f: &F, d: usize) -> Mat<F> {
    let mut m = Mat::zeros(f, d, d);
    for i in 0..d {
        for j in i..d {
            m.set(d - 1 - i, j, f.one());
        }
    }
    m
}

impl<F: Field> LdFunctor<BimodCat<F>, BimodCat<F>> for ConjugationFunctor<'_, F> {
    fn source(&self) -> &BimodCat<F> {
        self.cat
    }

    fn target(&self) -> &BimodCat<F> {
        self.cat
    }

    fn obj(&self, x: ObjId) -> ObjId {
        if let Some(&y) = self.images.lock().expect("image lock").get(&x) {
            return y;
        }
        let (p, p_inv) = (self.p(x), self.p_inv(x));
        let left: Vec<Mat<F>> = (0..self.cat.algebra().dim()).map(|i| self.cat.left_action(x, i)).collect();
        let right: Vec<Mat<F>> = (0..self.cat.algebra().dim()).map(|i| self.cat.right_action(x, i)).collect();
        let label = format!("F{}", self.cat.label(x));
        let y = self
            .cat
            .add_object(&label, self.twisted(&left, &p, &p_inv), self.twisted(&right, &p, &p_inv))
            .expect("a twisted bimodule is a bimodule");
        *self.images.lock().expect("image lock").entry(x).or_insert(y)
    }

    fn mor(&self, f: &Mor<F>) -> Mor<F> {
        Mor::new(self.obj(f.src), self.obj(f.tgt), self.p(f.tgt).mul(&f.mat).mul(&self.p_inv(f.src)))
    }

    fn phi2(&self, x: ObjId, y: ObjId) -> Mor<F> {
        let c = self.cat;
        let xy = c.tensor(x, y);
        let (fx, fy) = (self.obj(x), self.obj(y));
        let sect = c.tensor_data(fx, fy).1;
        let m = self
            .p(xy)
            .mul(&c.tensor_projection(x, y))
            .mul(&self.p_inv(x).kron(&self.p_inv(y)))
            .mul(&sect);
        Mor::new(c.tensor(fx, fy), self.obj(xy), m)
    }

    fn phi0(&self) -> Mor<F> {
        let one = self.cat.unit();
        let m = if self.wrong_unit { self.p(one) } else { self.p(one).mul(&self.sigma) };
        Mor::new(one, self.obj(one), m)
    }

    fn ups2(&self, x: ObjId, y: ObjId) -> Mor<F> {
        let c = self.cat;
        let xy = c.par(x, y);
        let (fx, fy) = (self.obj(x), self.obj(y));
        let ret = c.par_data(fx, fy).1;
        let m = ret
            .mul(&self.p(x).kron(&self.p(y)))
            .mul(&c.par_inclusion(x, y))
            .mul(&self.p_inv(xy));
        Mor::new(self.obj(xy), c.par(fx, fy), m)
    }

    fn ups0(&self) -> Mor<F> {
        let k = self.cat.dualizing();
        Mor::new(self.obj(k), k, self.sigma.transpose().mul(&self.p_inv(k)))
    }
}
