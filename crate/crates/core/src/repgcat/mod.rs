//! Representations of a finite group in non-modular characteristic. Here
//! K = 1, ⅋ = ⊗ and the distributors are the associators, so every
//! structural morphism is an identity matrix in Kronecker coordinates.

#[cfg(test)]
mod tests;

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use crate::algebra::GroupTable;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::gvcore::{GvBackend, Mor, ObjId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    Tensor(ObjId, ObjId),
    Dual(ObjId),
}

#[derive(Debug)]
struct Rep<F: Field> {
    label: String,
    action: Vec<Mat<F>>,
}

#[derive(Debug)]
struct Store<F: Field> {
    reps: Vec<Arc<Rep<F>>>,
    memo: HashMap<Key, ObjId>,
}

/// Rep(G) over a field whose characteristic does not divide |G|.
#[derive(Debug)]
pub struct RepCat<F: Field> {
    field: F,
    group: GroupTable,
    gens: Vec<usize>,
    store: RwLock<Store<F>>,
    hom_cache: RwLock<HashMap<(ObjId, ObjId), Vec<Mor<F>>>>,
}

impl<F: Field> RepCat<F> {
    pub fn new(field: &F, group: GroupTable) -> Result<Self> {
        let p = field.characteristic();
        if p != 0 && group.order() as u64 % p == 0 {
            return Err(Error::ModularCharacteristic(p));
        }
        let trivial = Rep { label: "1".into(), action: vec![Mat::identity(field, 1); group.order()] };
        Ok(RepCat {
            field: field.clone(),
            gens: group.generators(),
            group,
            store: RwLock::new(Store { reps: vec![Arc::new(trivial)], memo: HashMap::new() }),
            hom_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    fn rep(&self, x: ObjId) -> Arc<Rep<F>> {
        Arc::clone(&self.store.read().expect("store lock").reps[x.0])
    }

    fn insert(&self, key: Option<Key>, rep: Rep<F>) -> ObjId {
        let mut st = self.store.write().expect("store lock");
        if let Some(id) = key.and_then(|k| st.memo.get(&k).copied()) {
            return id;
        }
        let id = ObjId(st.reps.len());
        st.reps.push(Arc::new(rep));
        if let Some(k) = key {
            st.memo.insert(k, id);
        }
        id
    }

    fn lookup(&self, key: Key) -> Option<ObjId> {
        self.store.read().expect("store lock").memo.get(&key).copied()
    }

    /// Adds a representation given by one matrix per group element.
    pub fn add_rep(&self, label: &str, action: Vec<Mat<F>>) -> Result<ObjId> {
        if label.is_empty() || label.contains(char::is_whitespace) {
            return Err(Error::InvalidObject(format!("bad label {label:?}")));
        }
        let n = self.group.order();
        if action.len() != n {
            return Err(Error::InvalidObject(format!("{label}: need {n} matrices")));
        }
        let d = action[0].rows();
        if action.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::InvalidObject(format!("{label}: matrices must be square of equal size")));
        }
        if !action[self.group.identity()].is_identity() {
            return Err(Error::InvalidObject(format!("{label}: identity element must act trivially")));
        }
        for g in 0..n {
            for h in 0..n {
                if action[g].mul(&action[h]) != action[self.group.mul(g, h)] {
                    return Err(Error::InvalidObject(format!("{label}: not a homomorphism at ({g},{h})")));
                }
            }
        }
        Ok(self.insert(None, Rep { label: label.into(), action }))
    }

    /// Adds a representation from the images of some elements, closing under
    /// products. The given elements must generate the group.
    pub fn add_rep_generated(&self, label: &str, given: &[(usize, Mat<F>)]) -> Result<ObjId> {
        let n = self.group.order();
        let d = given.first().map(|(_, m)| m.rows()).ok_or_else(|| {
            Error::InvalidObject(format!("{label}: no action matrices given"))
        })?;
        let mut action: Vec<Option<Mat<F>>> = vec![None; n];
        action[self.group.identity()] = Some(Mat::identity(&self.field, d));
        let mut queue: VecDeque<usize> = VecDeque::from([self.group.identity()]);
        while let Some(g) = queue.pop_front() {
            for (h, m) in given {
                if *h >= n || m.shape() != (d, d) {
                    return Err(Error::InvalidObject(format!("{label}: bad generator matrix for element {h}")));
                }
                let gh = self.group.mul(g, *h);
                let prod = action[g].as_ref().expect("visited").mul(m);
                match &action[gh] {
                    None => {
                        action[gh] = Some(prod);
                        queue.push_back(gh);
                    }
                    Some(existing) if *existing != prod => {
                        return Err(Error::InvalidObject(format!("{label}: relations of the group fail")));
                    }
                    Some(_) => {}
                }
            }
        }
        let action: Option<Vec<Mat<F>>> = action.into_iter().collect();
        let action = action.ok_or_else(|| Error::InvalidObject(format!("{label}: given elements do not generate")))?;
        self.add_rep(label, action)
    }

    /// ρ(g) on x.
    pub fn action(&self, x: ObjId, g: usize) -> Mat<F> {
        self.rep(x).action[g].clone()
    }

    /// χ(g) = trace ρ(g).
    pub fn character(&self, x: ObjId, g: usize) -> F::Elem {
        self.rep(x).action[g].trace()
    }

    pub fn find(&self, label: &str) -> Option<ObjId> {
        let st = self.store.read().expect("store lock");
        st.reps.iter().position(|r| r.label == label).map(ObjId)
    }

    fn id(&self, x: ObjId) -> Mat<F> {
        Mat::identity(&self.field, self.dim(x))
    }

    /// vec(I) as a column: Σ e_i ⊗ e^i.
    fn vec_identity(&self, d: usize) -> Mat<F> {
        Mat::identity(&self.field, d).vectorize()
    }
}

impl<F: Field> GvBackend for RepCat<F> {
    type F = F;

    fn field(&self) -> &F {
        &self.field
    }

    fn name(&self) -> String {
        format!("Rep({},{})", self.group.name(), self.field.spec())
    }

    fn dim(&self, x: ObjId) -> usize {
        self.rep(x).action[0].rows()
    }

    fn label(&self, x: ObjId) -> String {
        self.rep(x).label.clone()
    }

    fn unit(&self) -> ObjId {
        ObjId(0)
    }

    fn dualizing(&self) -> ObjId {
        ObjId(0)
    }

    fn tensor(&self, x: ObjId, y: ObjId) -> ObjId {
        let key = Key::Tensor(x, y);
        if let Some(id) = self.lookup(key) {
            return id;
        }
        let (rx, ry) = (self.rep(x), self.rep(y));
        let action = rx.action.iter().zip(&ry.action).map(|(a, b)| a.kron(b)).collect();
        self.insert(Some(key), Rep { label: format!("({}⊗{})", rx.label, ry.label), action })
    }

    fn par(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor(x, y)
    }

    fn dual(&self, x: ObjId) -> ObjId {
        let key = Key::Dual(x);
        if let Some(id) = self.lookup(key) {
            return id;
        }
        let rx = self.rep(x);
        let action = (0..self.group.order()).map(|g| rx.action[self.group.inverse(g)].transpose()).collect();
        let id = self.insert(Some(key), Rep { label: format!("D{}", rx.label), action });
        // D(DX) is X itself: the double transpose-inverse is the original action
        self.store.write().expect("store lock").memo.entry(Key::Dual(id)).or_insert(x);
        id
    }

    fn dual_prime(&self, x: ObjId) -> ObjId {
        self.dual(x)
    }

    fn tensor_map(&self, f: &Mor<F>, g: &Mor<F>) -> Mor<F> {
        Mor::new(self.tensor(f.src, g.src), self.tensor(f.tgt, g.tgt), f.mat.kron(&g.mat))
    }

    fn par_map(&self, f: &Mor<F>, g: &Mor<F>) -> Mor<F> {
        self.tensor_map(f, g)
    }

    fn dual_map(&self, f: &Mor<F>) -> Mor<F> {
        Mor::new(self.dual(f.tgt), self.dual(f.src), f.mat.transpose())
    }

    fn dual_prime_map(&self, f: &Mor<F>) -> Mor<F> {
        self.dual_map(f)
    }

    fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let src = self.tensor(self.tensor(x, y), z);
        Mor::new(src, self.tensor(x, self.tensor(y, z)), self.id(src))
    }

    fn l_tensor(&self, x: ObjId) -> Mor<F> {
        Mor::new(self.tensor(self.unit(), x), x, self.id(x))
    }

    fn r_tensor(&self, x: ObjId) -> Mor<F> {
        Mor::new(self.tensor(x, self.unit()), x, self.id(x))
    }

    fn par_assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        self.assoc(x, y, z)
    }

    fn l_par(&self, x: ObjId) -> Mor<F> {
        self.l_tensor(x)
    }

    fn r_par(&self, x: ObjId) -> Mor<F> {
        self.r_tensor(x)
    }

    fn dist_left(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        let src = self.tensor(x, self.tensor(y, z));
        Mor::new(src, self.tensor(self.tensor(x, y), z), self.id(src))
    }

    fn dist_right(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<F> {
        self.assoc(x, y, z)
    }

    fn ev(&self, x: ObjId) -> Mor<F> {
        let v = self.vec_identity(self.dim(x)).transpose();
        Mor::new(self.tensor(self.dual(x), x), self.unit(), v)
    }

    fn coev(&self, x: ObjId) -> Result<Mor<F>> {
        Ok(Mor::new(self.unit(), self.tensor(x, self.dual(x)), self.vec_identity(self.dim(x))))
    }

    fn ev_prime(&self, x: ObjId) -> Mor<F> {
        let v = self.vec_identity(self.dim(x)).transpose();
        Mor::new(self.tensor(x, self.dual(x)), self.unit(), v)
    }

    fn coev_prime(&self, x: ObjId) -> Result<Mor<F>> {
        Ok(Mor::new(self.unit(), self.tensor(self.dual(x), x), self.vec_identity(self.dim(x))))
    }

    fn pivot(&self, x: ObjId) -> Mor<F> {
        Mor::new(x, self.dual(self.dual(x)), self.id(x))
    }

    fn hom_space(&self, x: ObjId, y: ObjId) -> Vec<Mor<F>> {
        if let Some(b) = self.hom_cache.read().expect("hom lock").get(&(x, y)) {
            return b.clone();
        }
        let (rx, ry) = (self.rep(x), self.rep(y));
        let (dx, dy) = (self.dim(x), self.dim(y));
        let basis: Vec<Mor<F>> = if dx == 0 || dy == 0 {
            Vec::new()
        } else {
            let (ix, iy) = (Mat::identity(&self.field, dx), Mat::identity(&self.field, dy));
            let blocks: Vec<Mat<F>> = self
                .gens
                .iter()
                .map(|&g| ry.action[g].kron(&ix).sub(&iy.kron(&rx.action[g].transpose())))
                .collect();
            let kernel = if blocks.is_empty() {
                Mat::identity(&self.field, dx * dy)
            } else {
                Mat::vstack_all(&self.field, dx * dy, &blocks).kernel()
            };
            (0..kernel.cols()).map(|c| Mor::new(x, y, kernel.col_mat(c).reshape(dy, dx))).collect()
        };
        self.hom_cache.write().expect("hom lock").insert((x, y), basis.clone());
        basis
    }

    fn is_morphism(&self, f: &Mor<F>) -> bool {
        let (rs, rt) = (self.rep(f.src), self.rep(f.tgt));
        f.mat.shape() == (self.dim(f.tgt), self.dim(f.src))
            && self.gens.iter().all(|&g| rt.action[g].mul(&f.mat) == f.mat.mul(&rs.action[g]))
    }

    fn action_matrices(&self, x: ObjId) -> Vec<Mat<F>> {
        let r = self.rep(x);
        self.gens.iter().map(|&g| r.action[g].clone()).collect()
    }

    fn elem_tensor(&self, _x: ObjId, _y: ObjId, u: &Mat<F>, v: &Mat<F>) -> Mat<F> {
        u.kron(v)
    }
}
