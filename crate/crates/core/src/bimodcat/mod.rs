//! The category of finite-dimensional bimodules over an algebra A, with
//! ⊗ = ⊗_A, D = linear dual, K = DA and X⅋Y = D(DY ⊗_A DX).
//!
//! Every object keeps the left and right action matrices of all basis
//! elements of A. Tensor products are cokernels of the balancing relations on
//! the raw space X ⊗_k Y; par products are the balanced subspaces of X ⊗_k Y.
//! With A = k this is the category of vector spaces.

mod conjugation;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

pub use conjugation::ConjugationFunctor;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::gvcore::duality::solve_copairing;
use crate::gvcore::{GvBackend, Mor, ObjId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    Tensor(ObjId, ObjId),
    Par(ObjId, ObjId),
    Dual(ObjId),
}

#[derive(Debug)]
enum Shape<F: Field> {
    Base,
    Dual,
    /// proj: raw → X⊗_A Y and a section of it.
    Tensor { proj: Mat<F>, sect: Mat<F> },
    /// incl: X⅋Y → raw and a left inverse of it.
    Par { incl: Mat<F>, ret: Mat<F> },
}

#[derive(Debug)]
struct Node<F: Field> {
    label: String,
    dim: usize,
    left: Vec<Mat<F>>,
    right: Vec<Mat<F>>,
    shape: Shape<F>,
}

#[derive(Debug, Default)]
struct Store<F: Field> {
    nodes: Vec<Arc<Node<F>>>,
    memo: HashMap<Key, ObjId>,
}

/// Bimodules over a fixed algebra.
#[derive(Debug)]
pub struct BimodCat<F: Field> {
    alg: Algebra<F>,
    gens: Vec<usize>,
    name: String,
    store: RwLock<Store<F>>,
    unit: ObjId,
    coev_cache: Mutex<HashMap<ObjId, Mor<F>>>,
    coev_prime_cache: Mutex<HashMap<ObjId, Mor<F>>>,
    hom_cache: RwLock<HashMap<(ObjId, ObjId), Vec<Mor<F>>>>,
}

impl<F: Field> BimodCat<F> {
    /// A-bimodules; the unit object is the regular bimodule, labelled `A`.
    pub fn new(alg: Algebra<F>) -> Result<Self> {
        if let Some(v) = alg.validate().first() {
            return Err(Error::InvalidAlgebra(format!("{} fails {:?}", alg.name(), v)));
        }
        let gens = alg.generators();
        let name = format!("{}-bimod", alg.name());
        let left = (0..alg.dim()).map(|i| alg.left_mult(i)).collect();
        let right = (0..alg.dim()).map(|i| alg.right_mult(i)).collect();
        let regular = Node { label: "A".into(), dim: alg.dim(), left, right, shape: Shape::Base };
        let store = Store { nodes: vec![Arc::new(regular)], memo: HashMap::new() };
        Ok(BimodCat {
            alg,
            gens,
            name,
            store: RwLock::new(store),
            unit: ObjId(0),
            coev_cache: Mutex::new(HashMap::new()),
            coev_prime_cache: Mutex::new(HashMap::new()),
            hom_cache: RwLock::new(HashMap::new()),
        })
    }

    /// Finite-dimensional vector spaces: bimodules over the ground field.
    pub fn vect(field: &F) -> Self {
        let mut c = BimodCat::new(Algebra::ground_field(field)).expect("ground field is an algebra");
        c.name = format!("Vect({})", field.spec());
        c
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    /// Basis indices of A whose actions determine all others.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    fn node(&self, x: ObjId) -> Arc<Node<F>> {
        Arc::clone(&self.store.read().expect("store lock").nodes[x.0])
    }

    fn insert(&self, key: Option<Key>, node: Node<F>) -> ObjId {
        let mut st = self.store.write().expect("store lock");
        if let Some(k) = key {
            if let Some(&id) = st.memo.get(&k) {
                return id;
            }
        }
        let id = ObjId(st.nodes.len());
        st.nodes.push(Arc::new(node));
        if let Some(k) = key {
            st.memo.insert(k, id);
        }
        id
    }

    fn lookup(&self, key: Key) -> Option<ObjId> {
        self.store.read().expect("store lock").memo.get(&key).copied()
    }

    /// Adds a bimodule given by the action matrices of every basis element.
    pub fn add_object(&self, label: &str, left: Vec<Mat<F>>, right: Vec<Mat<F>>) -> Result<ObjId> {
        if label.is_empty() || label.contains(char::is_whitespace) {
            return Err(Error::InvalidObject(format!("bad label {label:?}")));
        }
        let n = self.alg.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::InvalidObject(format!("{label}: expected {n} left and {n} right matrices")));
        }
        let dim = left[0].rows();
        if left.iter().chain(&right).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidObject(format!("{label}: action matrices must all be {dim}x{dim}")));
        }
        self.check_actions(label, &left, &right)?;
        Ok(self.insert(None, Node { label: label.into(), dim, left, right, shape: Shape::Base }))
    }

    /// Checks that the matrices define commuting left and right module
    /// structures.
    fn check_actions(&self, label: &str, left: &[Mat<F>], right: &[Mat<F>]) -> Result<()> {
        let a = &self.alg;
        let f = a.field();
        let n = a.dim();
        let dim = left[0].rows();
        let combo = |ms: &[Mat<F>], coeff: &dyn Fn(usize) -> F::Elem| {
            (0..n).fold(Mat::zeros(f, dim, dim), |acc, k| acc.add(&ms[k].scale(&coeff(k))))
        };
        let unit = |ms: &[Mat<F>]| combo(ms, &|k| a.unit()[k].clone());
        if !unit(left).is_identity() || !unit(right).is_identity() {
            return Err(Error::InvalidObject(format!("{label}: the unit does not act as the identity")));
        }
        for i in 0..n {
            for j in 0..n {
                if left[i].mul(&left[j]) != combo(left, &|k| a.constant(i, j, k).clone()) {
                    return Err(Error::InvalidObject(format!("{label}: left action fails on e{i} e{j}")));
                }
                if right[i].mul(&right[j]) != combo(right, &|k| a.constant(j, i, k).clone()) {
                    return Err(Error::InvalidObject(format!("{label}: right action fails on e{i} e{j}")));
                }
                if left[i].mul(&right[j]) != right[j].mul(&left[i]) {
                    return Err(Error::InvalidObject(format!("{label}: actions of e{i} and e{j} do not commute")));
                }
            }
        }
        Ok(())
    }

    /// Left action L_i of the i-th basis element on x.
    pub fn left_action(&self, x: ObjId, i: usize) -> Mat<F> {
        self.node(x).left[i].clone()
    }

    /// Right action R_i of the i-th basis element on x.
    pub fn right_action(&self, x: ObjId, i: usize) -> Mat<F> {
        self.node(x).right[i].clone()
    }

    /// Objects created so far, in creation order.
    pub fn objects(&self) -> Vec<ObjId> {
        (0..self.store.read().expect("store lock").nodes.len()).map(ObjId).collect()
    }

    /// Object with the given label, if any.
    pub fn find(&self, label: &str) -> Option<ObjId> {
        let st = self.store.read().expect("store lock");
        st.nodes.iter().position(|n| n.label == label).map(ObjId)
    }

    fn tensor_quotient(&self, x: &Node<F>, y: &Node<F>) -> (Mat<F>, Mat<F>) {
        let f = self.alg.field();
        let (ix, iy) = (Mat::identity(f, x.dim), Mat::identity(f, y.dim));
        let rels: Vec<Mat<F>> =
            self.gens.iter().map(|&g| x.right[g].kron(&iy).sub(&ix.kron(&y.left[g]))).collect();
        Mat::hstack_all(f, x.dim * y.dim, &rels).cokernel()
    }

    pub(crate) fn tensor_data(&self, x: ObjId, y: ObjId) -> (Mat<F>, Mat<F>) {
        match &self.node(self.tensor(x, y)).shape {
            Shape::Tensor { proj, sect } => (proj.clone(), sect.clone()),
            _ => unreachable!("tensor node without quotient data"),
        }
    }

    pub(crate) fn par_data(&self, x: ObjId, y: ObjId) -> (Mat<F>, Mat<F>) {
        match &self.node(self.par(x, y)).shape {
            Shape::Par { incl, ret } => (incl.clone(), ret.clone()),
            _ => unreachable!("par node without inclusion data"),
        }
    }

    /// proj: X ⊗_k Y → X ⊗_A Y.
    pub fn tensor_projection(&self, x: ObjId, y: ObjId) -> Mat<F> {
        self.tensor_data(x, y).0
    }

    /// incl: X ⅋ Y → X ⊗_k Y, onto the balanced subspace.
    pub fn par_inclusion(&self, x: ObjId, y: ObjId) -> Mat<F> {
        self.par_data(x, y).0
    }

    fn id(&self, x: ObjId) -> Mat<F> {
        Mat::identity(self.alg.field(), self.dim(x))
    }

    fn unit_coefficients(&self) -> &[F::Elem] {
        self.alg.unit()
    }

    fn memo_solved(
        &self,
        cache: &Mutex<HashMap<ObjId, Mor<F>>>,
        x: ObjId,
        solve: impl FnOnce() -> Result<Mor<F>>,
    ) -> Result<Mor<F>> {
        if let Some(m) = cache.lock().expect("cache lock").get(&x) {
            return Ok(m.clone());
        }
        let m = solve()?;
        cache.lock().expect("cache lock").insert(x, m.clone());
        Ok(m)
    }

    fn compute_hom(&self, x: ObjId, y: ObjId) -> Vec<Mor<F>> {
        let f = self.alg.field();
        let (nx, ny) = (self.node(x), self.node(y));
        let (dx, dy) = (nx.dim, ny.dim);
        if dx == 0 || dy == 0 {
            return Vec::new();
        }
        if x == self.unit {
            // A → Y is a ↦ a·v for v with a·v = v·a
            let blocks: Vec<Mat<F>> = self.gens.iter().map(|&g| ny.left[g].sub(&ny.right[g])).collect();
            let kernel = Mat::vstack_all(f, dy, &blocks).kernel();
            return (0..kernel.cols())
                .map(|c| {
                    let v = kernel.col_mat(c);
                    let cols: Vec<Vec<F::Elem>> = ny.left.iter().map(|l| l.mul(&v).col(0)).collect();
                    Mor::new(x, y, Mat::from_cols(f, dy, &cols))
                })
                .collect();
        }
        let (ix, iy) = (Mat::identity(f, dx), Mat::identity(f, dy));
        let mut blocks = Vec::new();
        for &g in &self.gens {
            blocks.push(ny.left[g].kron(&ix).sub(&iy.kron(&nx.left[g].transpose())));
            blocks.push(ny.right[g].kron(&ix).sub(&iy.kron(&nx.right[g].transpose())));
        }
        let kernel = Mat::vstack_all(f, dx * dy, &blocks).kernel();
        (0..kernel.cols()).map(|c| Mor::new(x, y, kernel.col_mat(c).reshape(dy, dx))).collect()
    }
}

impl<F: Field> GvBackend for BimodCat<F> {
    type F = F;

    fn field(&self) -> &F {
        self.alg.field()
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn dim(&self, x: ObjId) -> usize {
        self.node(x).dim
    }

    fn label(&self, x: ObjId) -> String {
        self.node(x).label.clone()
    }

    fn unit(&self) -> ObjId {
        self.unit
    }

    fn dualizing(&self) -> ObjId {
        self.dual(self.unit)
    }

    fn tensor(&self, x: ObjId, y: ObjId) -> ObjId {
        let key = Key::Tensor(x, y);
        if let Some(id) = self.lookup(key) {
            return id;
        }
        let (nx, ny) = (self.node(x), self.node(y));
        let (proj, sect) = self.tensor_quotient(&nx, &ny);
        let f = self.alg.field();
        let (ix, iy) = (Mat::identity(f, nx.dim), Mat::identity(f, ny.dim));
        let left = nx.left.iter().map(|l| proj.mul(&l.kron(&iy)).mul(&sect)).collect();
        let right = ny.right.iter().map(|r| proj.mul(&ix.kron(r)).mul(&sect)).collect();
        let node = Node {
            label: format!("({}⊗{})", nx.label, ny.label),
            dim: proj.rows(),
            left,
            right,
            shape: Shape::Tensor { proj, sect },
        };
        self.insert(Some(key), node)
    }

    fn par(&self, x: ObjId, y: ObjId) -> ObjId {
        let key = Key::Par(x, y);
        if let Some(id) = self.lookup(key) {
            return id;
        }
        // X⅋Y = D(DY ⊗ DX); its dual basis sits inside Y ⊗_k X, swapped to X ⊗_k Y
        let f = self.alg.field();
        let (dx, dy) = (self.dim(x), self.dim(y));
        let t = self.tensor(self.dual(y), self.dual(x));
        let (proj, sect) = self.tensor_data(self.dual(y), self.dual(x));
        let swap = Mat::swap(f, dy, dx);
        let incl = swap.mul(&proj.transpose());
        let ret = sect.transpose().mul(&swap.transpose());
        let nt = self.node(t);
        let node = Node {
            label: format!("({}⅋{})", self.label(x), self.label(y)),
            dim: nt.dim,
            left: nt.right.iter().map(Mat::transpose).collect(),
            right: nt.left.iter().map(Mat::transpose).collect(),
            shape: Shape::Par { incl, ret },
        };
        self.insert(Some(key), node)
    }

    fn dual(&self, x: ObjId) -> ObjId {
        let key = Key::Dual(x);
        if let Some(id) = self.lookup(key) {
            return id;
        }
        let nx = self.node(x);
        let node = Node {
            label: format!("D{}", nx.label),
            dim: nx.dim,
            left: nx.right.iter().map(Mat::transpose).collect(),
            right: nx.left.iter().map(Mat::transpose).collect(),
            shape: Shape::Dual,
        };
        self.insert(Some(key), node)
    }

    fn dual_prime(&self, x: ObjId) -> ObjId {
        self.dual(x)
    }

    fn tensor_map(&self, f: &Mor<F>, g: &Mor<F>) -> Mor<F> {
        let (_, sect) = self.tensor_data(f.src, g.src);
        let (proj, _) = self.tensor_data(f.tgt, g.tgt);
        let m = proj.mul(&f.mat.kron(&g.mat)).mul(&sect);
        Mor::new(self.tensor(f.src, g.src), self.tensor(f.tgt, g.tgt), m)
    }

    fn par_map(&self, f: &Mor<F>, g: &Mor<F>) -> Mor<F> {
        let (incl, _) = self.par_data(f.src, g.src);
        let (_, ret) = self.par_data(f.tgt, g.tgt);
        let m = ret.mul(&f.mat.kron(&g.mat)).mul(&incl);
        Mor::new(self.par(f.src, g.src), self.par(f.tgt, g.tgt), m)
    }

    fn dual_map(&self, f: &Mor<F>) -> Mor<F> {
        Mor::new(self.dual(f.tgt), self.dual(f.src), f.mat.transpose())
    }

    fn dual_prime_map(&self, f: &Mor<F>) -> Mor<F> {
        self.dual_map(f)
    }

    fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let xy = self.tensor(x, y);
        let yz = self.tensor(y, z);
        let (_, sect_src) = self.tensor_data(xy, z);
        let (sect_xy, proj_yz) = (self.tensor_data(x, y).1, self.tensor_data(y, z).0);
        let (proj_tgt, _) = self.tensor_data(x, yz);
        let m = proj_tgt
            .mul(&self.id(x).kron(&proj_yz))
            .mul(&sect_xy.kron(&self.id(z)))
            .mul(&sect_src);
        Mor::new(self.tensor(xy, z), self.tensor(x, yz), m)
    }

    fn l_tensor(&self, x: ObjId) -> Mor<F> {
        let f = self.alg.field();
        let nx = self.node(x);
        let n = self.alg.dim();
        let mut raw = Mat::zeros(f, nx.dim, n * nx.dim);
        for k in 0..n {
            for j in 0..nx.dim {
                for i in 0..nx.dim {
                    raw.set(i, k * nx.dim + j, nx.left[k].get(i, j).clone());
                }
            }
        }
        let (_, sect) = self.tensor_data(self.unit, x);
        Mor::new(self.tensor(self.unit, x), x, raw.mul(&sect))
    }

    fn r_tensor(&self, x: ObjId) -> Mor<F> {
        let f = self.alg.field();
        let nx = self.node(x);
        let n = self.alg.dim();
        let mut raw = Mat::zeros(f, nx.dim, nx.dim * n);
        for j in 0..nx.dim {
            for k in 0..n {
                for i in 0..nx.dim {
                    raw.set(i, j * n + k, nx.right[k].get(i, j).clone());
                }
            }
        }
        let (_, sect) = self.tensor_data(x, self.unit);
        Mor::new(self.tensor(x, self.unit), x, raw.mul(&sect))
    }

    fn par_assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let xy = self.par(x, y);
        let yz = self.par(y, z);
        let (incl_src, _) = self.par_data(xy, z);
        let (incl_xy, ret_yz) = (self.par_data(x, y).0, self.par_data(y, z).1);
        let (_, ret_tgt) = self.par_data(x, yz);
        let m = ret_tgt
            .mul(&self.id(x).kron(&ret_yz))
            .mul(&incl_xy.kron(&self.id(z)))
            .mul(&incl_src);
        Mor::new(self.par(xy, z), self.par(x, yz), m)
    }

    fn l_par(&self, x: ObjId) -> Mor<F> {
        let f = self.alg.field();
        let k = self.dualizing();
        let d = self.dim(x);
        let u = self.unit_coefficients();
        let mut raw = Mat::zeros(f, d, u.len() * d);
        for (kk, uk) in u.iter().enumerate() {
            for j in 0..d {
                raw.set(j, kk * d + j, uk.clone());
            }
        }
        let (incl, _) = self.par_data(k, x);
        Mor::new(self.par(k, x), x, raw.mul(&incl))
    }

    fn r_par(&self, x: ObjId) -> Mor<F> {
        let f = self.alg.field();
        let k = self.dualizing();
        let d = self.dim(x);
        let u = self.unit_coefficients();
        let n = u.len();
        let mut raw = Mat::zeros(f, d, d * n);
        for j in 0..d {
            for (kk, uk) in u.iter().enumerate() {
                raw.set(j, j * n + kk, uk.clone());
            }
        }
        let (incl, _) = self.par_data(x, k);
        Mor::new(self.par(x, k), x, raw.mul(&incl))
    }

    fn dist_left(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let yz = self.par(y, z);
        let xy = self.tensor(x, y);
        let (_, sect_src) = self.tensor_data(x, yz);
        let incl_yz = self.par_data(y, z).0;
        let proj_xy = self.tensor_data(x, y).0;
        let (_, ret_tgt) = self.par_data(xy, z);
        let m = ret_tgt
            .mul(&proj_xy.kron(&self.id(z)))
            .mul(&self.id(x).kron(&incl_yz))
            .mul(&sect_src);
        Mor::new(self.tensor(x, yz), self.par(xy, z), m)
    }

    fn dist_right(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let xy = self.par(x, y);
        let yz = self.tensor(y, z);
        let (_, sect_src) = self.tensor_data(xy, z);
        let incl_xy = self.par_data(x, y).0;
        let proj_yz = self.tensor_data(y, z).0;
        let (_, ret_tgt) = self.par_data(x, yz);
        let m = ret_tgt
            .mul(&self.id(x).kron(&proj_yz))
            .mul(&incl_xy.kron(&self.id(z)))
            .mul(&sect_src);
        Mor::new(self.tensor(xy, z), self.par(x, yz), m)
    }

    fn ev(&self, x: ObjId) -> Mor<F> {
        // f ⊗ v ↦ (a ↦ f(v·a))
        let f = self.alg.field();
        let nx = self.node(x);
        let (d, n) = (nx.dim, self.alg.dim());
        let mut raw = Mat::zeros(f, n, d * d);
        for k in 0..n {
            for i in 0..d {
                for j in 0..d {
                    raw.set(k, i * d + j, nx.right[k].get(i, j).clone());
                }
            }
        }
        let dx = self.dual(x);
        let (_, sect) = self.tensor_data(dx, x);
        Mor::new(self.tensor(dx, x), self.dualizing(), raw.mul(&sect))
    }

    fn coev(&self, x: ObjId) -> Result<Mor<F>> {
        self.memo_solved(&self.coev_cache, x, || solve_copairing(self, &self.ev(x), self.dual(x), x))
    }

    fn ev_prime(&self, x: ObjId) -> Mor<F> {
        // v ⊗ f ↦ (a ↦ f(a·v))
        let f = self.alg.field();
        let nx = self.node(x);
        let (d, n) = (nx.dim, self.alg.dim());
        let mut raw = Mat::zeros(f, n, d * d);
        for k in 0..n {
            for i in 0..d {
                for j in 0..d {
                    raw.set(k, i * d + j, nx.left[k].get(j, i).clone());
                }
            }
        }
        let dx = self.dual_prime(x);
        let (_, sect) = self.tensor_data(x, dx);
        Mor::new(self.tensor(x, dx), self.dualizing(), raw.mul(&sect))
    }

    fn coev_prime(&self, x: ObjId) -> Result<Mor<F>> {
        self.memo_solved(&self.coev_prime_cache, x, || {
            solve_copairing(self, &self.ev_prime(x), x, self.dual_prime(x))
        })
    }

    fn pivot(&self, x: ObjId) -> Mor<F> {
        Mor::new(x, self.dual(self.dual(x)), self.id(x))
    }

    fn hom_space(&self, x: ObjId, y: ObjId) -> Vec<Mor<F>> {
        if let Some(b) = self.hom_cache.read().expect("hom lock").get(&(x, y)) {
            return b.clone();
        }
        let basis = self.compute_hom(x, y);
        self.hom_cache.write().expect("hom lock").insert((x, y), basis.clone());
        basis
    }

    fn is_morphism(&self, f: &Mor<F>) -> bool {
        let (ns, nt) = (self.node(f.src), self.node(f.tgt));
        f.mat.shape() == (nt.dim, ns.dim)
            && self.gens.iter().all(|&g| {
                nt.left[g].mul(&f.mat) == f.mat.mul(&ns.left[g]) && nt.right[g].mul(&f.mat) == f.mat.mul(&ns.right[g])
            })
    }

    fn action_matrices(&self, x: ObjId) -> Vec<Mat<F>> {
        let nx = self.node(x);
        self.gens.iter().flat_map(|&g| [nx.left[g].clone(), nx.right[g].clone()]).collect()
    }

    fn elem_tensor(&self, x: ObjId, y: ObjId, u: &Mat<F>, v: &Mat<F>) -> Mat<F> {
        self.tensor_data(x, y).0.mul(&u.kron(v))
    }
}
