//! Dense exact matrices over a [`FieldSpec`].
//!
//! Vectors are rows throughout the crate: a matrix `M` acts on a row vector
//! `x` as `x * M`. Subspaces are always handed around as matrices whose rows
//! form a basis, and every basis produced here comes from a reduced row
//! echelon form, so equal subspaces yield identical matrices.

use crate::field::{FieldSpec, Scalar};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Rebuilds a matrix from a row-major scalar list.
    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols, "flat data has wrong length");
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// The matrix contents as one row-major row vector (1 x rows*cols).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Mat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| self.field.neg(v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| self.field.mul(c, v)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        out
    }

    /// `self^k` for square matrices; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Mat {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Stacks matrices vertically (shared column count).
    pub fn vstack(field: FieldSpec, parts: &[&Mat]) -> Mat {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols && m.field == field));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend(m.data.iter().cloned());
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Stacks matrices horizontally (shared row count).
    pub fn hstack(field: FieldSpec, parts: &[&Mat]) -> Mat {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows && m.field == field));
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, row * m.cols + j);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let v = f.mul(&inv, m.get(row, j));
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    /// Keeps the column count even when the row space is zero.
    pub fn row_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Mat::from_fn(self.field, k, self.cols, |i, j| r.get(i, j).clone())
    }

    /// Canonical basis (as rows) of the left kernel `{x : x * self = 0}`.
    pub fn left_null_basis(&self) -> Mat {
        let t = self.transpose();
        let (r, pivots) = t.rref();
        let n = self.rows;
        let mut free_cols = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for c in 0..n {
            if !is_pivot[c] {
                free_cols.push(c);
            }
        }
        let f = self.field;
        let mut rows = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, fc));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Mat::zeros(f, 0, n);
        }
        Mat::from_rows(f, rows)
    }

    /// Solves `self * X = rhs` for `X`; `None` when inconsistent, the
    /// canonical solution (free variables zero) otherwise.
    pub fn solve_right(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        assert_eq!(self.field, rhs.field, "field mismatch in solve");
        let f = self.field;
        let aug = Mat::hstack(f, &[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Solves `X * self = rhs` for `X` (row-vector form of `solve_right`).
    pub fn solve_left(&self, rhs: &Mat) -> Option<Mat> {
        self.transpose()
            .solve_right(&rhs.transpose())
            .map(|x| x.transpose())
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let id = Mat::identity(self.field, self.rows);
        let x = self.solve_right(&id)?;
        if self.mul(&x) == id {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn mat_i64(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank_over_q() {
        let f = FieldSpec::Rationals;
        let m = mat_i64(f, &[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(m.rank(), 2);
        assert_eq!(r.get(0, 1), &f.from_i64(2));
    }

    #[test]
    fn left_kernel_annihilates() {
        let f = FieldSpec::Rationals;
        let m = mat_i64(f, &[&[1, 2], &[2, 4], &[0, 1]]);
        let k = m.left_null_basis();
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&m).is_zero());
        // Canonical form: free coordinate set to one.
        assert_eq!(k.row(0), &[f.from_i64(-2), f.one(), f.zero()]);
    }

    #[test]
    fn solve_left_expresses_rows_in_basis() {
        let f = f2();
        let basis = mat_i64(f, &[&[1, 0, 1], &[0, 1, 1]]);
        let target = mat_i64(f, &[&[1, 1, 0]]);
        let c = basis.solve_left(&target).expect("consistent");
        assert_eq!(c.mul(&basis), target);
        let outside = mat_i64(f, &[&[1, 0, 0]]);
        assert!(basis.solve_left(&outside).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let f = FieldSpec::prime(5).unwrap();
        let m = mat_i64(f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Mat::identity(f, 2));
        assert_eq!(inv.mul(&m), Mat::identity(f, 2));
        let sing = mat_i64(f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(!sing.is_invertible());
    }

    #[test]
    fn power_and_stacking() {
        let f = FieldSpec::Rationals;
        let n = mat_i64(f, &[&[0, 1], &[0, 0]]);
        assert!(n.pow(2).is_zero());
        assert_eq!(n.pow(0), Mat::identity(f, 2));
        let v = Mat::vstack(f, &[&n, &Mat::identity(f, 2)]);
        assert_eq!(v.rows(), 4);
        assert_eq!(v.rank(), 2);
        let h = Mat::hstack(f, &[&n, &Mat::identity(f, 2)]);
        assert_eq!(h.cols(), 4);
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn row_basis_is_canonical() {
        let f = f2();
        let a = mat_i64(f, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = mat_i64(f, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(a.row_basis(), b.row_basis());
    }
}
