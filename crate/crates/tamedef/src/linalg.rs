//! Dense linear algebra over GF(2^e).

use std::fmt;

use crate::scalars::{FField, Fe};

/// A dense row-major matrix over a fixed field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    f: FField,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[inline]
fn axpy(f: &FField, dst: &mut [Fe], src: &[Fe], c: Fe) {
    if c == 0 {
        return;
    }
    if c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d ^= f.mul(c, s);
            }
        }
    }
}

impl Mat {
    pub fn zeros(f: FField, rows: usize, cols: usize) -> Mat {
        Mat { f, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: FField, n: usize) -> Mat {
        let mut m = Mat::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(f: FField, cols: usize, rows: &[Vec<Fe>]) -> Mat {
        let mut m = Mat::zeros(f, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn from_cols(f: FField, rows: usize, cols: &[Vec<Fe>]) -> Mat {
        let mut m = Mat::zeros(f, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> FField {
        self.f
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Fe] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[Fe] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.f, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.f, self.rows, other.cols);
        let f = self.f;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let (src, dst) = (other.row(k), &mut out.data[r * other.cols..(r + 1) * other.cols]);
                axpy(&f, dst, src, a);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for (k, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc ^= self.f.mul(self.get(r, k), x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch in sum");
        let mut out = self.clone();
        for (d, &s) in out.data.iter_mut().zip(&other.data) {
            *d ^= s;
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Mat, c: Fe) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch in sum");
        let f = self.f;
        axpy(&f, &mut self.data, &other.data, c);
    }

    pub fn scale(&self, c: Fe) -> Mat {
        let mut out = self.clone();
        for d in out.data.iter_mut() {
            *d = self.f.mul(*d, c);
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.f, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(f: FField, rows: usize, blocks: &[&Mat]) -> Mat {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(f, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(f: FField, cols: usize, blocks: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Mat { f, rows, cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.f, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.f, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(r));
        }
        out
    }

    /// Block at rows r0.., cols c0.. of the given size.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.f, rows, cols);
        for r in 0..rows {
            out.row_mut(r).copy_from_slice(&self.row(r0 + r)[c0..c0 + cols]);
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            let cols = self.cols;
            self.data[(r0 + r) * cols + c0..(r0 + r) * cols + c0 + b.cols].copy_from_slice(b.row(r));
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.f;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, r * self.cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            if inv != 1 {
                for x in self.row_mut(r).iter_mut() {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let a = self.get(i, c);
                    if a != 0 {
                        let cols = self.cols;
                        axpy(&f, &mut self.data[i * cols..(i + 1) * cols], &pivot_row, a);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as the columns of the result.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(self.f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, j, r.get(i, fc));
            }
        }
        k
    }

    /// Some X with self · X = b, if one exists.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows);
        let aug = Mat::hstack(self.f, self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.f, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Mat::identity(self.f, self.rows))?;
        if self.mul(&x) == Mat::identity(self.f, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A basis of the column space, as columns selected from self.
    pub fn col_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Indices of standard basis vectors that extend the column space of self to everything.
    pub fn complement_indices(&self) -> Vec<usize> {
        let aug = Mat::hstack(self.f, self.rows, &[self, &Mat::identity(self.f, self.rows)]);
        let (_, pivots) = aug.rref();
        pivots.into_iter().filter(|&p| p >= self.cols).map(|p| p - self.cols).collect()
    }
}

/// A subspace kept in reduced echelon form, for incremental independence tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    f: FField,
    dim: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(f: FField, dim: usize) -> Self {
        RowSpace { f, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let a = v[p];
            if a != 0 {
                axpy(&self.f, &mut v, row, a);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds v; returns true when it was independent.
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else { return false };
        let inv = self.f.inv(r[p]).unwrap();
        for x in r.iter_mut() {
            *x = self.f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let a = row[p];
            if a != 0 {
                axpy(&self.f, row, &r, a);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> Mat {
        let cols = rows[0].len();
        Mat::from_rows(FField::gf2(), cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 1, 0, 1], &[0, 1, 1, 0], &[1, 0, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 4 - a.rank());
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn inverse_over_gf4() {
        let f = FField::new(2).unwrap();
        let a = Mat::from_rows(f, 2, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(f, 2));
    }

    #[test]
    fn rowspace_tracks_rank() {
        let mut s = RowSpace::new(FField::gf2(), 3);
        assert!(s.insert(&[1, 1, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1]));
        assert_eq!(s.rank(), 2);
    }
}
