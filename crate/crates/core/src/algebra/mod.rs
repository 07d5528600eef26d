//! Finite-dimensional unital associative algebras given by structure constants.

mod group;

pub use group::GroupTable;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// An algebra with basis e_0..e_{n-1} and e_i e_j = sum_k c[i][j][k] e_k.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    name: String,
    dim: usize,
    consts: Vec<F::Elem>,
    unit: Vec<F::Elem>,
    basis_names: Vec<String>,
}

/// One failed axiom instance found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Associativity(usize, usize, usize),
    LeftUnit(usize),
    RightUnit(usize),
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra without validating it; see [`Algebra::validate`].
    pub fn from_structure_constants(
        field: &F,
        name: &str,
        dim: usize,
        consts: Vec<F::Elem>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if consts.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::InvalidAlgebra("structure constant table has the wrong size".into()));
        }
        let basis_names = (0..dim).map(|i| format!("e{i}")).collect();
        Ok(Algebra { field: field.clone(), name: name.to_string(), dim, consts, unit, basis_names })
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
        self
    }

    /// The group algebra k[G] with basis the group elements in table order.
    pub fn group_algebra(field: &F, group: &GroupTable) -> Self {
        let n = group.order();
        let mut consts = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                consts[(i * n + j) * n + group.mul(i, j)] = field.one();
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[group.identity()] = field.one();
        let names = (0..n).map(|g| format!("g{g}")).collect();
        Algebra { field: field.clone(), name: format!("{}[{}]", field.spec(), group.name()), dim: n, consts, unit, basis_names: names }
    }

    /// k[X]/(f) for monic f given by coefficients from the constant term up.
    pub fn quotient_poly(field: &F, coeffs: &[F::Elem]) -> Result<Self> {
        let deg = coeffs.len().checked_sub(1).ok_or(Error::NonMonic)?;
        if deg == 0 || !field.is_one(&coeffs[deg]) {
            return Err(Error::NonMonic);
        }
        // x^deg = -sum_{i<deg} c_i x^i
        let reduce = |mut v: Vec<F::Elem>| -> Vec<F::Elem> {
            for top in (deg..v.len()).rev() {
                let lead = v[top].clone();
                if field.is_zero(&lead) {
                    continue;
                }
                v[top] = field.zero();
                for (i, c) in coeffs.iter().take(deg).enumerate() {
                    let idx = top - deg + i;
                    v[idx] = field.sub(&v[idx], &field.mul(&lead, c));
                }
            }
            v.truncate(deg);
            v
        };
        let mut consts = Vec::with_capacity(deg * deg * deg);
        for i in 0..deg {
            for j in 0..deg {
                let mut prod = vec![field.zero(); 2 * deg];
                prod[i + j] = field.one();
                consts.extend(reduce(prod));
            }
        }
        let mut unit = vec![field.zero(); deg];
        unit[0] = field.one();
        let names = (0..deg)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let poly: Vec<String> = coeffs.iter().map(|c| field.render(c)).collect();
        Ok(Algebra {
            field: field.clone(),
            name: format!("{}[X]/({})", field.spec(), poly.join(",")),
            dim: deg,
            consts,
            unit,
            basis_names: names,
        })
    }

    /// Upper triangular n x n matrices with basis e_ij (i <= j) in row-major order.
    pub fn upper_triangular(field: &F, n: usize) -> Self {
        let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let d = basis.len();
        let index = |p: (usize, usize)| basis.iter().position(|&q| q == p).expect("basis pair");
        let mut consts = vec![field.zero(); d * d * d];
        for (a, &(i, j)) in basis.iter().enumerate() {
            for (b, &(k, l)) in basis.iter().enumerate() {
                if j == k {
                    consts[(a * d + b) * d + index((i, l))] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[index((i, i))] = field.one();
        }
        let names = basis.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
        Algebra { field: field.clone(), name: format!("T{n}({})", field.spec()), dim: d, consts, unit, basis_names: names }
    }

    /// The field itself as a one-dimensional algebra.
    pub fn ground_field(field: &F) -> Self {
        Algebra {
            field: field.clone(),
            name: format!("{}", field.spec()),
            dim: 1,
            consts: vec![field.one()],
            unit: vec![field.one()],
            basis_names: vec!["1".into()],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coefficient of e_k in e_i e_j.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit_vector(&self) -> Mat<F> {
        Mat::column_vector(&self.field, self.unit.clone())
    }

    /// Product of two coefficient vectors.
    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for i in 0..n {
            if f.is_zero(&a[i]) {
                continue;
            }
            for j in 0..n {
                if f.is_zero(&b[j]) {
                    continue;
                }
                let s = f.mul(&a[i], &b[j]);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !f.is_zero(c) {
                        *o = f.add(o, &f.mul(&s, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by e_i: column j is e_i e_j.
    pub fn left_mult(&self, i: usize) -> Mat<F> {
        let n = self.dim;
        let mut m = Mat::zeros(&self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.constant(i, j, k).clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by e_i: column j is e_j e_i.
    pub fn right_mult(&self, i: usize) -> Mat<F> {
        let n = self.dim;
        let mut m = Mat::zeros(&self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.constant(j, i, k).clone());
            }
        }
        m
    }

    /// The multiplication A (x) A -> A on raw tensor coordinates (n x n^2).
    pub fn multiplication_matrix(&self) -> Mat<F> {
        let n = self.dim;
        let mut m = Mat::zeros(&self.field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m.set(k, i * n + j, self.constant(i, j, k).clone());
                }
            }
        }
        m
    }

    /// Every violated associativity or unit instance; empty iff valid.
    pub fn validate(&self) -> Vec<AlgebraViolation> {
        let f = &self.field;
        let n = self.dim;
        let mut out = Vec::new();
        let basis = |i: usize| -> Vec<F::Elem> {
            let mut v = vec![f.zero(); n];
            v[i] = f.one();
            v
        };
        for i in 0..n {
            let ei = basis(i);
            for j in 0..n {
                let eij = self.mul(&ei, &basis(j));
                for k in 0..n {
                    let ek = basis(k);
                    let lhs = self.mul(&eij, &ek);
                    let rhs = self.mul(&ei, &self.mul(&basis(j), &ek));
                    if lhs != rhs {
                        out.push(AlgebraViolation::Associativity(i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let ei = basis(i);
            if self.mul(&self.unit, &ei) != ei {
                out.push(AlgebraViolation::LeftUnit(i));
            }
            if self.mul(&ei, &self.unit) != ei {
                out.push(AlgebraViolation::RightUnit(i));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| self.left_mult(i) == self.right_mult(i))
    }

    /// Basis of the center as columns: the kernel of the stacked L_i - R_i.
    pub fn center(&self) -> Mat<F> {
        let blocks: Vec<Mat<F>> = (0..self.dim).map(|i| self.left_mult(i).sub(&self.right_mult(i))).collect();
        Mat::vstack_all(&self.field, self.dim, &blocks).kernel()
    }

    /// Basis indices that generate the algebra, chosen greedily in basis order.
    /// Relations that hold for these elements (and the unit) hold for all.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.dim;
        let f = &self.field;
        let mut gens: Vec<usize> = Vec::new();
        let mut span = Mat::column_vector(f, self.unit.clone());
        for i in 0..n {
            let ei = Mat::unit_vector(f, n, i);
            if span.hstack(&ei).rank() == span.rank() {
                continue;
            }
            gens.push(i);
            // close span under left multiplication by the generators
            loop {
                let r = span.rank();
                let mut cols = vec![span.clone()];
                for &g in &gens {
                    cols.push(self.left_mult(g).mul(&span));
                }
                let all = Mat::hstack_all(f, n, &cols);
                let (rr, piv) = all.transpose().rref();
                span = rr.select_rows(&(0..piv.len()).collect::<Vec<_>>()).transpose();
                if span.cols() == r {
                    break;
                }
            }
            if span.cols() == n {
                break;
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests;
