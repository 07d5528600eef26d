//! Backend-generic interface for GV-categories and the verification suites.
//!
//! Conventions: α: (X⊗Y)⊗Z → X⊗(Y⊗Z), likewise for ⅋; δ_l: X⊗(Y⅋Z) → (X⊗Y)⅋Z,
//! δ_r: (X⅋Y)⊗Z → X⅋(Y⊗Z); ev_X: DX⊗X → K, coev_X: 1 → X⅋DX,
//! ev'_X: X⊗D'X → K, coev'_X: 1 → D'X⅋X; ρ_X: X → DDX.

pub mod coherence;
pub mod corrupt;
pub mod duality;
pub mod functor;
mod report;

use std::fmt;

use rand::Rng;

pub use report::{Report, ReportLine};

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// Handle of an object inside one backend. Equality is equality of handles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A morphism of a backend: a matrix between the chosen bases of its source
/// and target (columns indexed by the source).
#[derive(Clone, Debug, PartialEq)]
pub struct Mor<F: Field> {
    pub src: ObjId,
    pub tgt: ObjId,
    pub mat: Mat<F>,
}

impl<F: Field> Mor<F> {
    pub fn new(src: ObjId, tgt: ObjId, mat: Mat<F>) -> Self {
        Mor { src, tgt, mat }
    }

    pub fn add(&self, other: &Mor<F>) -> Mor<F> {
        assert_eq!((self.src, self.tgt), (other.src, other.tgt), "adding morphisms with different types");
        Mor::new(self.src, self.tgt, self.mat.add(&other.mat))
    }

    pub fn scale(&self, s: &F::Elem) -> Mor<F> {
        Mor::new(self.src, self.tgt, self.mat.scale(s))
    }
}

/// Everything a backend provides. Structural morphisms are total: they exist
/// for every argument tuple. Solved structure (coevaluations) may fail, which
/// signals an inconsistent backend.
pub trait GvBackend: Send + Sync {
    type F: Field;

    fn field(&self) -> &Self::F;
    fn name(&self) -> String;
    fn dim(&self, x: ObjId) -> usize;
    fn label(&self, x: ObjId) -> String;

    /// Monoidal unit 1 of ⊗.
    fn unit(&self) -> ObjId;
    /// Dualizing object K, the unit of ⅋.
    fn dualizing(&self) -> ObjId;
    fn tensor(&self, x: ObjId, y: ObjId) -> ObjId;
    fn par(&self, x: ObjId, y: ObjId) -> ObjId;
    /// The duality functor D on objects.
    fn dual(&self, x: ObjId) -> ObjId;
    /// Its quasi-inverse D' on objects.
    fn dual_prime(&self, x: ObjId) -> ObjId;

    fn tensor_map(&self, f: &Mor<Self::F>, g: &Mor<Self::F>) -> Mor<Self::F>;
    fn par_map(&self, f: &Mor<Self::F>, g: &Mor<Self::F>) -> Mor<Self::F>;
    /// D(f): DY → DX for f: X → Y.
    fn dual_map(&self, f: &Mor<Self::F>) -> Mor<Self::F>;
    fn dual_prime_map(&self, f: &Mor<Self::F>) -> Mor<Self::F>;

    fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<Self::F>;
    fn l_tensor(&self, x: ObjId) -> Mor<Self::F>;
    fn r_tensor(&self, x: ObjId) -> Mor<Self::F>;
    fn par_assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<Self::F>;
    fn l_par(&self, x: ObjId) -> Mor<Self::F>;
    fn r_par(&self, x: ObjId) -> Mor<Self::F>;
    fn dist_left(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<Self::F>;
    fn dist_right(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<Self::F>;

    fn ev(&self, x: ObjId) -> Mor<Self::F>;
    fn coev(&self, x: ObjId) -> Result<Mor<Self::F>>;
    fn ev_prime(&self, x: ObjId) -> Mor<Self::F>;
    fn coev_prime(&self, x: ObjId) -> Result<Mor<Self::F>>;
    fn pivot(&self, x: ObjId) -> Mor<Self::F>;

    /// Deterministic basis of Hom(x, y).
    fn hom_space(&self, x: ObjId, y: ObjId) -> Vec<Mor<Self::F>>;
    /// Whether the matrix intertwines the structure of source and target.
    fn is_morphism(&self, f: &Mor<Self::F>) -> bool;
    /// Linear operators on the underlying space of x whose common invariant
    /// subspaces are exactly the subobjects of x.
    fn action_matrices(&self, x: ObjId) -> Vec<Mat<Self::F>>;
    /// Image of the elementary tensor u ⊗ v in x ⊗ y (column vectors).
    fn elem_tensor(&self, x: ObjId, y: ObjId, u: &Mat<Self::F>, v: &Mat<Self::F>) -> Mat<Self::F>;

    // ---- derived helpers ----

    fn identity(&self, x: ObjId) -> Mor<Self::F> {
        Mor::new(x, x, Mat::identity(self.field(), self.dim(x)))
    }

    fn zero_map(&self, x: ObjId, y: ObjId) -> Mor<Self::F> {
        Mor::new(x, y, Mat::zeros(self.field(), self.dim(y), self.dim(x)))
    }

    /// g ∘ f.
    fn compose(&self, g: &Mor<Self::F>, f: &Mor<Self::F>) -> Mor<Self::F> {
        assert_eq!(
            f.tgt,
            g.src,
            "composing {} -> {} after {} -> {}",
            self.label(g.src),
            self.label(g.tgt),
            self.label(f.src),
            self.label(f.tgt)
        );
        Mor::new(f.src, g.tgt, g.mat.mul(&f.mat))
    }

    /// maps[0] ∘ maps[1] ∘ … ∘ maps[n-1].
    fn chain(&self, maps: &[&Mor<Self::F>]) -> Mor<Self::F> {
        let (last, rest) = maps.split_last().expect("empty chain");
        rest.iter().rev().fold((*last).clone(), |acc, g| self.compose(g, &acc))
    }

    fn inverse(&self, f: &Mor<Self::F>) -> Result<Mor<Self::F>> {
        let inv = f.mat.inverse().ok_or_else(|| {
            Error::Inconsistent(format!("{} -> {} is not invertible", self.label(f.src), self.label(f.tgt)))
        })?;
        Ok(Mor::new(f.tgt, f.src, inv))
    }

    /// Inverse of a structural isomorphism; panics when the backend violates
    /// its own contract.
    fn iso_inverse(&self, f: &Mor<Self::F>) -> Mor<Self::F> {
        self.inverse(f).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Random element of Hom(x, y) as a combination of the basis.
    fn random_morphism<R: Rng + ?Sized>(&self, x: ObjId, y: ObjId, rng: &mut R) -> Mor<Self::F>
    where
        Self: Sized,
    {
        let fd = self.field();
        self.hom_space(x, y)
            .iter()
            .fold(self.zero_map(x, y), |acc, b| acc.add(&b.scale(&fd.random(rng))))
    }

    /// Coordinates of f in a basis of its hom-space, when f lies in the span.
    fn coordinates(&self, basis: &[Mor<Self::F>], f: &Mor<Self::F>) -> Option<Vec<<Self::F as Field>::Elem>> {
        let fd = self.field();
        let n = f.mat.rows() * f.mat.cols();
        let cols: Vec<Vec<_>> = basis.iter().map(|b| b.mat.data().to_vec()).collect();
        let m = Mat::from_cols(fd, n, &cols);
        m.solve(&f.mat.vectorize()).map(|x| x.col(0))
    }
}

/// Exact equality of two parallel morphisms.
pub fn same_morphism<F: Field>(a: &Mor<F>, b: &Mor<F>) -> bool {
    assert_eq!((a.src, a.tgt), (b.src, b.tgt), "comparing morphisms of different types");
    a.mat == b.mat
}

/// Comma-separated labels in parentheses, used as report tuples.
pub fn tuple_label<B: GvBackend + ?Sized>(cat: &B, objs: &[ObjId]) -> String {
    let labels: Vec<String> = objs.iter().map(|&x| cat.label(x)).collect();
    format!("({})", labels.join(","))
}
