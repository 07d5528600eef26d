//! Dense row-major matrices over an exact field.

use std::fmt;

use rand::Rng;

use super::field::Field;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.render(e)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<F: Field> Mat<F> {
    pub fn new(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length does not match shape");
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_i64(field: &F, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| field.from_i64(v)));
        }
        Mat { field: field.clone(), rows: r, cols: c, data }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { field: field.clone(), rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn column_vector(field: &F, v: Vec<F::Elem>) -> Self {
        let n = v.len();
        Mat { field: field.clone(), rows: n, cols: 1, data: v }
    }

    /// Unit column vector e_i of length n.
    pub fn unit_vector(field: &F, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    pub fn random<R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn col_mat(&self, c: usize) -> Mat<F> {
        Mat::column_vector(&self.field, self.col(c))
    }

    /// Columns selected by index, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> Mat<F> {
        let mut m = Mat::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat<F> {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(&self.field, self.rows)
    }

    pub fn transpose(&self) -> Mat<F> {
        let mut m = Mat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        m
    }

    fn check_field(&self, other: &Mat<F>) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Mat<F>) -> Result<Mat<F>, Error> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for r in 0..self.rows {
            let orow = &mut out.data[r * oc..(r + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * oc..(k + 1) * oc];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape mismatch (an internal wiring error).
    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        self.checked_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn checked_add(&self, other: &Mat<F>) -> Result<Mat<F>, Error> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "sum of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Mat<F>) -> Mat<F> {
        self.checked_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat<F> {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Mat<F> {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn checked_kron(&self, other: &Mat<F>) -> Result<Mat<F>, Error> {
        self.check_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Mat<F>) -> Mat<F> {
        self.checked_kron(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Block matrix [self | other].
    pub fn hstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Mat { field: self.field.clone(), rows: self.rows, cols, data }
    }

    /// Block matrix [self ; other].
    pub fn vstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Vertical concatenation of many blocks with `cols` columns.
    pub fn vstack_all(field: &F, cols: usize, blocks: &[Mat<F>]) -> Mat<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    /// Horizontal concatenation of many blocks with `rows` rows.
    pub fn hstack_all(field: &F, rows: usize, blocks: &[Mat<F>]) -> Mat<F> {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for b in blocks {
                assert_eq!(b.rows, rows, "hstack row mismatch");
                data.extend_from_slice(b.row(r));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    /// Row-major flattening into a column vector.
    pub fn vectorize(&self) -> Mat<F> {
        Mat { field: self.field.clone(), rows: self.rows * self.cols, cols: 1, data: self.data.clone() }
    }

    pub fn reshape(&self, rows: usize, cols: usize) -> Mat<F> {
        assert_eq!(rows * cols, self.data.len(), "reshape size mismatch");
        Mat { field: self.field.clone(), rows, cols, data: self.data.clone() }
    }

    /// Reduced row-echelon form and pivot columns. Pivots are chosen at the
    /// leftmost column with a nonzero entry below the current row, taking the
    /// first such row.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == m.rows {
                break;
            }
            let Some(sel) = (prow..m.rows).find(|&r| !f.is_zero(&m.data[r * cols + c])) else {
                continue;
            };
            if sel != prow {
                for k in 0..cols {
                    m.data.swap(sel * cols + k, prow * cols + k);
                }
            }
            let inv = f.inv(&m.data[prow * cols + c]).expect("nonzero pivot");
            for k in c..cols {
                let v = &m.data[prow * cols + k];
                if !f.is_zero(v) {
                    m.data[prow * cols + k] = f.mul(v, &inv);
                }
            }
            let pivot_row: Vec<F::Elem> = m.data[prow * cols..(prow + 1) * cols].to_vec();
            let nz: Vec<usize> = (c..cols).filter(|&k| !f.is_zero(&pivot_row[k])).collect();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.data[r * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for &k in &nz {
                    let idx = r * cols + k;
                    m.data[idx] = f.sub(&m.data[idx], &f.mul(&factor, &pivot_row[k]));
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space as columns: one column per free variable, with
    /// that variable set to 1 and the other free variables set to 0.
    pub fn kernel(&self) -> Mat<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, fc);
                if !f.is_zero(v) {
                    k.set(p, j, f.neg(v));
                }
            }
        }
        k
    }

    /// Cokernel with section: `proj` (q x rows) annihilates the column space,
    /// `sect` (rows x q) picks the coordinate vectors complementary to the
    /// pivots of the RREF of the transpose, and `proj * sect = I`.
    pub fn cokernel(&self) -> (Mat<F>, Mat<F>) {
        let f = &self.field;
        let n = self.rows;
        let (r, pivots) = self.transpose().rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let comp: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let q = comp.len();
        let mut proj = Mat::zeros(f, q, n);
        let mut sect = Mat::zeros(f, n, q);
        for (a, &qc) in comp.iter().enumerate() {
            proj.set(a, qc, f.one());
            sect.set(qc, a, f.one());
            for (j, &p) in pivots.iter().enumerate() {
                let v = r.get(j, qc);
                if !f.is_zero(v) {
                    proj.set(a, p, f.neg(v));
                }
            }
        }
        (proj, sect)
    }

    /// Some x with self * x = b, or None when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let f = &self.field;
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Mat::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(r.select_cols(&idx))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square(), "trace of a non-square matrix");
        let f = &self.field;
        (0..self.rows).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn pow(&self, e: u32) -> Mat<F> {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Mat::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Permutation matrix sending basis vector j to basis vector perm[j].
    pub fn permutation(field: &F, perm: &[usize]) -> Mat<F> {
        let n = perm.len();
        let mut m = Mat::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, field.one());
        }
        m
    }

    /// The flip V (x) W -> W (x) V on raw tensor coordinates.
    pub fn swap(field: &F, dv: usize, dw: usize) -> Mat<F> {
        let perm: Vec<usize> = (0..dv * dw).map(|idx| (idx % dw) * dv + idx / dw).collect();
        Mat::permutation(field, &perm)
    }
}
