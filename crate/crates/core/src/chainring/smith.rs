use super::{RMatrix, RingSpec};
use crate::rnmod::Shape;

/// Normal form of `(Z/p^n)^cols / rowspan(A)`.
///
/// `u * a * v` is diagonal with entries `p^d_j`; the quotient is isomorphic
/// to `⊕ Z/p^{d_j}` over the columns with `d_j > 0`, via `y ↦ y * v`.
#[derive(Debug, Clone)]
pub struct Cokernel {
    pub shape: Shape,
    pub u: RMatrix,
    pub v: RMatrix,
    pub v_inv: RMatrix,
    /// Diagonal valuation of every column of `u * a * v` (`n` past the rank).
    pub column_exponents: Vec<u32>,
    /// `coords[k]` is the column of `v` carrying normal coordinate `k`.
    pub coords: Vec<usize>,
}

impl Cokernel {
    /// Normal coordinates of the class of `y`.
    pub fn project(&self, y: &[u64]) -> Vec<u64> {
        let yv = self.v.vec_mul(y);
        let ring = self.v.ring();
        self.coords
            .iter()
            .zip(self.shape.exponents())
            .map(|(&c, &e)| yv[c] % ring.int_pow(e))
            .collect()
    }

    /// A representative in `(Z/p^n)^cols` of the class with normal
    /// coordinates `z`. Not additive in general: it lifts residues.
    pub fn lift(&self, z: &[u64]) -> Vec<u64> {
        self.lift_matrix().vec_mul(z)
    }

    /// Rows of `v_inv` for the kept coordinates: row `k` lifts basis vector `k`.
    pub fn lift_matrix(&self) -> RMatrix {
        self.v_inv.select_rows(&self.coords)
    }

    /// Columns of `v` for the kept coordinates, unreduced.
    pub fn projection_matrix(&self) -> RMatrix {
        self.v.select_cols(&self.coords)
    }
}

/// Diagonalizes the relation matrix `a` and reads off the cokernel shape.
pub fn cokernel_shape(a: &RMatrix) -> Cokernel {
    let ring: RingSpec = a.ring();
    let (m, c) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = RMatrix::identity(ring, m);
    let mut v = RMatrix::identity(ring, c);
    let mut v_inv = RMatrix::identity(ring, c);
    let mut column_exponents = vec![ring.n(); c];
    let mut t = 0;
    while t < m.min(c) {
        // minimal valuation in the trailing block, row-major first occurrence
        let mut best: Option<(usize, usize, u32)> = None;
        'search: for i in t..m {
            for j in t..c {
                let x = d.get(i, j);
                if x == 0 {
                    continue;
                }
                let val = ring.valuation(x);
                if best.is_none_or(|(_, _, bv)| val < bv) {
                    best = Some((i, j, val));
                    if val == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((i, j, val)) = best else { break };
        d.swap_rows(t, i);
        u.swap_rows(t, i);
        d.swap_cols(t, j);
        v.swap_cols(t, j);
        v_inv.swap_rows(t, j);

        let (_, unit) = ring.split_unit(d.get(t, t));
        let inv = ring.unit_inverse(unit).expect("unit part is a unit");
        d.scale_row(t, inv);
        u.scale_row(t, inv);
        let pv = ring.int_pow(val);
        debug_assert_eq!(d.get(t, t), pv);

        for i in t + 1..m {
            let x = d.get(i, t);
            if x != 0 {
                let f = ring.neg(x / pv);
                d.add_row_multiple(i, t, f, t);
                u.add_row_multiple(i, t, f, 0);
            }
        }
        for j in t + 1..c {
            let x = d.get(t, j);
            if x != 0 {
                let f = x / pv;
                // col_j -= f col_t in d and v; row_t += f row_j in v_inv
                d.add_col_multiple(j, t, ring.neg(f));
                v.add_col_multiple(j, t, ring.neg(f));
                v_inv.add_row_multiple(t, j, f, 0);
            }
        }
        column_exponents[t] = val;
        t += 1;
    }

    let mut coords: Vec<usize> = (0..c).filter(|&j| column_exponents[j] > 0).collect();
    coords.sort_by(|&x, &y| column_exponents[y].cmp(&column_exponents[x]));
    let exps: Vec<u32> = coords.iter().map(|&j| column_exponents[j]).collect();
    let shape = Shape::new(ring, exps).expect("cokernel exponents are sorted and in range");
    Cokernel {
        shape,
        u,
        v,
        v_inv,
        column_exponents,
        coords,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_two_one_over_z8() {
        let r = RingSpec::new(2, 3).unwrap();
        let a = RMatrix::from_rows(r, 2, &[vec![2, 0], vec![0, 1]]);
        let ck = cokernel_shape(&a);
        assert_eq!(ck.shape.exponents(), &[1]);
    }

    #[test]
    fn no_relations_is_free() {
        let r = RingSpec::new(3, 2).unwrap();
        let ck = cokernel_shape(&RMatrix::zeros(r, 0, 3));
        assert_eq!(ck.shape.exponents(), &[2, 2, 2]);
    }

    #[test]
    fn change_of_basis_diagonalizes() {
        let r = RingSpec::new(2, 3).unwrap();
        let a = RMatrix::from_rows(r, 3, &[vec![2, 4, 6], vec![1, 3, 4], vec![0, 4, 4]]);
        let ck = cokernel_shape(&a);
        let diag = ck.u.mul(&a).mul(&ck.v);
        for i in 0..diag.rows() {
            for j in 0..diag.cols() {
                if i != j {
                    assert_eq!(diag.get(i, j), 0);
                }
            }
        }
        assert_eq!(ck.v.mul(&ck.v_inv), RMatrix::identity(r, 3));
        // lift then project is the identity on normal coordinates
        let z: Vec<u64> = ck.shape.exponents().iter().map(|_| 1).collect();
        assert_eq!(ck.project(&ck.lift(&z)), z);
    }
}
