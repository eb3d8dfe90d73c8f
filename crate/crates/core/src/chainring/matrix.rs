use std::fmt;

use super::RingSpec;

/// Dense matrix over `Z/p^n`, row-major, entries reduced to `[0, p^n)`.
///
/// Homomorphisms act on the right of row vectors: a vector `x` is sent to
/// `x * A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl RMatrix {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        RMatrix {
            ring,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ring: RingSpec, size: usize) -> Self {
        let mut m = Self::zeros(ring, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1 % ring.modulus();
        }
        m
    }

    pub fn diagonal(ring: RingSpec, diag: &[u64]) -> Self {
        let mut m = Self::zeros(ring, diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = ring.reduce(d);
        }
        m
    }

    /// Builds a matrix from rows, reducing every entry. Panics on ragged input.
    pub fn from_rows(ring: RingSpec, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row.iter().map(|&x| ring.reduce(x)));
        }
        RMatrix {
            ring,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64_rows(ring: RingSpec, cols: usize, rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Self::from_rows(ring, cols, &rows)
    }

    pub fn from_fn(
        ring: RingSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(ring.reduce(f(i, j)));
            }
        }
        RMatrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = self.ring.reduce(x);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        RMatrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let ring = self.ring;
        let mut out = RMatrix::zeros(ring, self.rows, other.cols);
        // Accumulate in u64 and reduce every few terms; each product is < 2^62.
        for i in 0..self.rows {
            let acc = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (o, &b) in acc.iter_mut().zip(brow) {
                    *o = ring.reduce(*o + a * b);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let ring = self.ring;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                *o = ring.reduce(*o + a * b);
            }
        }
        out
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(&other.data) {
            *o = self.ring.add(*o, b);
        }
        out
    }

    pub fn sub(&self, other: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(&other.data) {
            *o = self.ring.sub(*o, b);
        }
        out
    }

    pub fn scale(&self, c: u64) -> RMatrix {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = self.ring.mul(*o, c);
        }
        out
    }

    /// Multiplies column `j` by `factors[j]`.
    pub fn scale_columns(&self, factors: &[u64]) -> RMatrix {
        assert_eq!(factors.len(), self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for (o, &f) in out.row_mut(i).iter_mut().zip(factors) {
                *o = self.ring.mul(*o, f);
            }
        }
        out
    }

    pub fn vstack(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RMatrix {
            ring: self.ring,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        RMatrix {
            ring: self.ring,
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> RMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        RMatrix {
            ring: self.ring,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> RMatrix {
        RMatrix::from_fn(self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn permute_rows(&self, perm: &[usize]) -> RMatrix {
        // row i of the result is row perm[i] of self
        self.select_rows(perm)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`, only touching columns `from..`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: u64, from: usize) {
        if factor == 0 {
            return;
        }
        let ring = self.ring;
        let cols = self.cols;
        for j in from..cols {
            let s = self.data[src * cols + j];
            if s != 0 {
                let d = &mut self.data[dst * cols + j];
                *d = ring.reduce(*d + factor * s);
            }
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: u64) {
        if factor == 0 {
            return;
        }
        let ring = self.ring;
        let cols = self.cols;
        for i in 0..self.rows {
            let s = self.data[i * cols + src];
            if s != 0 {
                let d = &mut self.data[i * cols + dst];
                *d = ring.reduce(*d + factor * s);
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u64) {
        let ring = self.ring;
        for x in self.row_mut(i) {
            *x = ring.mul(*x, c);
        }
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RMatrix(Z/{}^{}, {}x{}) ",
            self.ring.p(),
            self.ring.n(),
            self.rows,
            self.cols
        )?;
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_is_associative() {
        let r = RingSpec::new(3, 2).unwrap();
        let a = RMatrix::from_rows(r, 2, &[vec![1, 4], vec![7, 3], vec![0, 5]]);
        let b = RMatrix::from_rows(r, 3, &[vec![2, 8, 1], vec![6, 0, 3]]);
        let c = RMatrix::from_rows(r, 2, &[vec![1, 1], vec![2, 5], vec![4, 0]]);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let x = [5u64, 2, 7];
        assert_eq!(a.vec_mul(&x).len(), 2);
        assert_eq!(b.vec_mul(&a.vec_mul(&x)), a.mul(&b).vec_mul(&x));
    }
}
