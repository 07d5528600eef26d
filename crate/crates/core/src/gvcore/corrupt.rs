//! A backend wrapper that perturbs one matrix cell of one structural family,
//! used to confirm that the checkers detect broken structure.

use std::str::FromStr;

use super::coherence::check_coherence;
use super::duality::check_snakes;
use super::{GvBackend, Mor, ObjId, Report};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// Which structural family gets the perturbed cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Assoc,
    ParAssoc,
    DistLeft,
    DistRight,
    LeftUnitor,
    Ev,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Assoc, Family::ParAssoc, Family::DistLeft, Family::DistRight, Family::LeftUnitor, Family::Ev];

    pub fn name(self) -> &'static str {
        match self {
            Family::Assoc => "assoc",
            Family::ParAssoc => "par-assoc",
            Family::DistLeft => "dist-left",
            Family::DistRight => "dist-right",
            Family::LeftUnitor => "left-unitor",
            Family::Ev => "ev",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown structure family {s}")))
    }
}

/// Adds one to cell `(row, col)` of every component of the chosen family
/// that is large enough to have that cell.
pub struct Corrupted<'a, B: GvBackend> {
    inner: &'a B,
    family: Family,
    row: usize,
    col: usize,
}

impl<'a, B: GvBackend> Corrupted<'a, B> {
    pub fn new(inner: &'a B, family: Family, row: usize, col: usize) -> Self {
        Corrupted { inner, family, row, col }
    }

    fn hit(&self, fam: Family, mut m: Mor<B::F>) -> Mor<B::F> {
        if fam == self.family && self.row < m.mat.rows() && self.col < m.mat.cols() {
            let f = self.inner.field();
            let v = f.add(m.mat.get(self.row, self.col), &f.one());
            m.mat.set(self.row, self.col, v);
        }
        m
    }
}

impl<B: GvBackend> GvBackend for Corrupted<'_, B> {
    type F = B::F;

    fn field(&self) -> &B::F {
        self.inner.field()
    }
    fn name(&self) -> String {
        format!("{}-corrupted", self.inner.name())
    }
    fn dim(&self, x: ObjId) -> usize {
        self.inner.dim(x)
    }
    fn label(&self, x: ObjId) -> String {
        self.inner.label(x)
    }
    fn unit(&self) -> ObjId {
        self.inner.unit()
    }
    fn dualizing(&self) -> ObjId {
        self.inner.dualizing()
    }
    fn tensor(&self, x: ObjId, y: ObjId) -> ObjId {
        self.inner.tensor(x, y)
    }
    fn par(&self, x: ObjId, y: ObjId) -> ObjId {
        self.inner.par(x, y)
    }
    fn dual(&self, x: ObjId) -> ObjId {
        self.inner.dual(x)
    }
    fn dual_prime(&self, x: ObjId) -> ObjId {
        self.inner.dual_prime(x)
    }
    fn tensor_map(&self, f: &Mor<B::F>, g: &Mor<B::F>) -> Mor<B::F> {
        self.inner.tensor_map(f, g)
    }
    fn par_map(&self, f: &Mor<B::F>, g: &Mor<B::F>) -> Mor<B::F> {
        self.inner.par_map(f, g)
    }
    fn dual_map(&self, f: &Mor<B::F>) -> Mor<B::F> {
        self.inner.dual_map(f)
    }
    fn dual_prime_map(&self, f: &Mor<B::F>) -> Mor<B::F> {
        self.inner.dual_prime_map(f)
    }
    fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<B::F> {
        self.hit(Family::Assoc, self.inner.assoc(x, y, z))
    }
    fn l_tensor(&self, x: ObjId) -> Mor<B::F> {
        self.hit(Family::LeftUnitor, self.inner.l_tensor(x))
    }
    fn r_tensor(&self, x: ObjId) -> Mor<B::F> {
        self.inner.r_tensor(x)
    }
    fn par_assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<B::F> {
        self.hit(Family::ParAssoc, self.inner.par_assoc(x, y, z))
    }
    fn l_par(&self, x: ObjId) -> Mor<B::F> {
        self.inner.l_par(x)
    }
    fn r_par(&self, x: ObjId) -> Mor<B::F> {
        self.inner.r_par(x)
    }
    fn dist_left(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<B::F> {
        self.hit(Family::DistLeft, self.inner.dist_left(x, y, z))
    }
    fn dist_right(&self, x: ObjId, y: ObjId, z: ObjId) -> Mor<B::F> {
        self.hit(Family::DistRight, self.inner.dist_right(x, y, z))
    }
    fn ev(&self, x: ObjId) -> Mor<B::F> {
        self.hit(Family::Ev, self.inner.ev(x))
    }
    fn coev(&self, x: ObjId) -> Result<Mor<B::F>> {
        self.inner.coev(x)
    }
    fn ev_prime(&self, x: ObjId) -> Mor<B::F> {
        self.inner.ev_prime(x)
    }
    fn coev_prime(&self, x: ObjId) -> Result<Mor<B::F>> {
        self.inner.coev_prime(x)
    }
    fn pivot(&self, x: ObjId) -> Mor<B::F> {
        self.inner.pivot(x)
    }
    fn hom_space(&self, x: ObjId, y: ObjId) -> Vec<Mor<B::F>> {
        self.inner.hom_space(x, y)
    }
    fn is_morphism(&self, f: &Mor<B::F>) -> bool {
        self.inner.is_morphism(f)
    }
    fn action_matrices(&self, x: ObjId) -> Vec<Mat<B::F>> {
        self.inner.action_matrices(x)
    }
    fn elem_tensor(&self, x: ObjId, y: ObjId, u: &Mat<B::F>, v: &Mat<B::F>) -> Mat<B::F> {
        self.inner.elem_tensor(x, y, u, v)
    }
}

/// For every family, corrupts cell (0, 0) and records whether the checkers
/// notice: coherence for the structural families, the snake suite for ev.
pub fn detection_report<B: GvBackend>(c: &B, cat: &[ObjId]) -> Report {
    let mut r = Report::new();
    for fam in Family::ALL {
        let bad = Corrupted::new(c, fam, 0, 0);
        let caught = match fam {
            Family::Ev => !check_snakes(&bad, cat).all_pass(),
            _ => !check_coherence(&bad, cat).all_pass(),
        };
        r.push("CORRUPTION-DETECTED", format!("({})", fam.name()), caught);
    }
    r
}
