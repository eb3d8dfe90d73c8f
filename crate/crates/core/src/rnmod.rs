//! Finitely generated `Z/p^n`-modules in normal form and their homomorphisms.
//!
//! A [`Shape`] `λ_1 ≥ … ≥ λ_r` stands for `⊕_j Z/p^{λ_j}`; an element is a
//! coordinate vector with entry `j` reduced modulo `p^{λ_j}`. The map
//! `x ↦ (p^{n-λ_j} x_j)_j` embeds a shape into `(Z/p^n)^r`, which is how
//! every submodule and solving question is pushed down to plain row spans.

use crate::chainring::{cokernel_shape, LinearSolver, Obstruction, RMatrix, RingSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    ring: RingSpec,
    exps: Vec<u32>,
}

impl Shape {
    pub fn new(ring: RingSpec, exps: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exps.iter().find(|&&e| e == 0 || e > ring.n()) {
            return Err(Error::InvalidShape(format!(
                "exponent {e} outside 1..={}",
                ring.n()
            )));
        }
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(
                "exponents must be weakly decreasing".into(),
            ));
        }
        Ok(Shape { ring, exps })
    }

    /// Sorts `exps` into a shape. `index[old] = new` records where each
    /// original coordinate went; ties keep their original order.
    pub fn from_unsorted(ring: RingSpec, exps: &[u32]) -> Result<(Self, Vec<usize>)> {
        let mut order: Vec<usize> = (0..exps.len()).collect();
        order.sort_by(|&a, &b| exps[b].cmp(&exps[a]));
        let mut index = vec![0; exps.len()];
        for (new, &old) in order.iter().enumerate() {
            index[old] = new;
        }
        let sorted = order.iter().map(|&o| exps[o]).collect();
        Ok((Shape::new(ring, sorted)?, index))
    }

    pub fn zero(ring: RingSpec) -> Self {
        Shape {
            ring,
            exps: Vec::new(),
        }
    }

    /// `(Z/p^m)^r`.
    pub fn uniform(ring: RingSpec, m: u32, r: usize) -> Result<Self> {
        if m == 0 {
            return Ok(Shape::zero(ring));
        }
        Shape::new(ring, vec![m; r])
    }

    #[inline]
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    /// `log_p` of the module's order, i.e. its composition length.
    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.first().copied().unwrap_or(0)
    }

    /// Number of coordinates with exponent exactly `e`.
    pub fn multiplicity(&self, e: u32) -> usize {
        self.exps.iter().filter(|&&x| x == e).count()
    }

    #[inline]
    pub fn modulus(&self, j: usize) -> u64 {
        self.ring.int_pow(self.exps[j])
    }

    pub fn reduce(&self, x: &mut [u64]) {
        debug_assert_eq!(x.len(), self.rank());
        for (xi, &e) in x.iter_mut().zip(&self.exps) {
            *xi %= self.ring.int_pow(e);
        }
    }

    pub fn reduced(&self, x: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = x.iter().map(|&a| self.ring.reduce(a)).collect();
        self.reduce(&mut v);
        v
    }

    pub fn is_element(&self, x: &[u64]) -> bool {
        x.len() == self.rank() && x.iter().enumerate().all(|(j, &a)| a < self.modulus(j))
    }

    /// `p^{n-λ_j}` per coordinate: the embedding into `(Z/p^n)^r`.
    pub fn embedding_factors(&self) -> Vec<u64> {
        self.exps
            .iter()
            .map(|&e| self.ring.pow(self.ring.n() - e))
            .collect()
    }

    pub fn embed(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(self.embedding_factors())
            .map(|(&a, f)| self.ring.mul(a, f))
            .collect()
    }

    /// `diag(p^{λ_j})`: relations presenting the shape as a quotient of `(Z/p^n)^r`.
    pub fn relations(&self) -> RMatrix {
        let d: Vec<u64> = self.exps.iter().map(|&e| self.ring.pow(e)).collect();
        RMatrix::diagonal(self.ring, &d)
    }

    pub fn clip(&self, m: u32) -> Shape {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.min(m))
            .filter(|&e| e > 0)
            .collect();
        Shape {
            ring: self.ring,
            exps,
        }
    }

    fn check_ring(&self, other: &Shape) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Shape) -> Result<DirectSum> {
        self.check_ring(other)?;
        let mut all = self.exps.clone();
        all.extend_from_slice(&other.exps);
        let (shape, index) = Shape::from_unsorted(self.ring, &all)?;
        let r = self.rank();
        let inj = |src: &Shape, offset: usize| {
            let m = RMatrix::from_fn(self.ring, src.rank(), shape.rank(), |i, j| {
                u64::from(index[offset + i] == j)
            });
            RnHom::new(src.clone(), shape.clone(), m).expect("coordinate injection")
        };
        let proj = |dst: &Shape, offset: usize| {
            let m = RMatrix::from_fn(self.ring, shape.rank(), dst.rank(), |i, j| {
                u64::from(index[offset + j] == i)
            });
            RnHom::new(shape.clone(), dst.clone(), m).expect("coordinate projection")
        };
        Ok(DirectSum {
            injections: [inj(self, 0), inj(other, r)],
            projections: [proj(self, 0), proj(other, r)],
            index,
            shape,
        })
    }

    /// Tensor product over `Z/p^n`, with the `(i, j)` coordinate pairs taken
    /// in lexicographic order and then stably sorted by exponent.
    pub fn tensor(&self, other: &Shape) -> Result<TensorShape> {
        self.check_ring(other)?;
        let mut exps = Vec::with_capacity(self.rank() * other.rank());
        for &a in &self.exps {
            for &b in &other.exps {
                exps.push(a.min(b));
            }
        }
        let (shape, index) = Shape::from_unsorted(self.ring, &exps)?;
        Ok(TensorShape {
            left: self.rank(),
            right: other.rank(),
            shape,
            index,
        })
    }

    /// `Hom(M, Z/p^n)` has the same exponents; see [`RnHom::dual`].
    pub fn dual(&self) -> Shape {
        self.clone()
    }

    /// Multiplication by `p^k`: the shape of `p^k M`.
    pub fn shift_down(&self, k: u32) -> Shape {
        Shape {
            ring: self.ring,
            exps: self
                .exps
                .iter()
                .filter(|&&e| e > k)
                .map(|&e| e - k)
                .collect(),
        }
    }

    /// Every element, in lexicographic coordinate order. Only for tiny
    /// shapes (tests and oracles); panics past `2^20` elements.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        assert!(self.length() as f64 * (self.ring.p() as f64).log2() <= 20.0);
        let mut out = vec![Vec::with_capacity(self.rank())];
        for j in 0..self.rank() {
            let m = self.modulus(j);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..m).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct DirectSum {
    pub shape: Shape,
    pub injections: [RnHom; 2],
    pub projections: [RnHom; 2],
    /// Summand coordinates in order (left then right) mapped to positions.
    pub index: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TensorShape {
    pub shape: Shape,
    left: usize,
    right: usize,
    index: Vec<usize>,
}

impl TensorShape {
    /// Coordinate of `e_i ⊗ e_j`.
    #[inline]
    pub fn coord(&self, i: usize, j: usize) -> usize {
        self.index[i * self.right + j]
    }

    pub fn left_rank(&self) -> usize {
        self.left
    }

    pub fn right_rank(&self) -> usize {
        self.right
    }

    /// `x ⊗ y` in tensor coordinates.
    pub fn pure_tensor(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let ring = self.shape.ring();
        let mut out = vec![0; self.shape.rank()];
        for (i, &a) in x.iter().enumerate() {
            for (j, &b) in y.iter().enumerate() {
                let k = self.coord(i, j);
                out[k] = ring.reduce(out[k] + a * b);
            }
        }
        self.shape.reduce(&mut out);
        out
    }
}

/// An `R`-linear map `⊕ Z/p^{λ_i} → ⊕ Z/p^{μ_j}` given by its matrix on
/// row vectors. Entry `(i, j)` is reduced modulo `p^{μ_j}` and must be
/// divisible by `p^{max(μ_j - λ_i, 0)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RnHom {
    source: Shape,
    target: Shape,
    matrix: RMatrix,
}

impl RnHom {
    pub fn new(source: Shape, target: Shape, matrix: RMatrix) -> Result<Self> {
        source.check_ring(&target)?;
        if matrix.rows() != source.rank() || matrix.cols() != target.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map of ranks {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        let ring = source.ring;
        let mut matrix = matrix;
        for i in 0..source.rank() {
            for j in 0..target.rank() {
                let m = target.modulus(j);
                let c = matrix.get(i, j) % m;
                matrix.set(i, j, c);
                let gap = target.exps[j].saturating_sub(source.exps[i]);
                if !c.is_multiple_of(ring.int_pow(gap)) {
                    return Err(Error::Congruence {
                        row: i,
                        col: j,
                        value: c,
                    });
                }
            }
        }
        Ok(RnHom {
            source,
            target,
            matrix,
        })
    }

    pub fn from_rows(source: Shape, target: Shape, rows: &[Vec<u64>]) -> Result<Self> {
        let m = RMatrix::from_rows(source.ring, target.rank(), rows);
        RnHom::new(source, target, m)
    }

    pub fn identity(shape: &Shape) -> Self {
        RnHom {
            source: shape.clone(),
            target: shape.clone(),
            matrix: RMatrix::identity(shape.ring, shape.rank()),
        }
    }

    pub fn zero(source: &Shape, target: &Shape) -> Self {
        RnHom {
            source: source.clone(),
            target: target.clone(),
            matrix: RMatrix::zeros(source.ring, source.rank(), target.rank()),
        }
    }

    /// Multiplication by the scalar `c` on `shape`.
    pub fn scalar(shape: &Shape, c: u64) -> Self {
        RnHom::identity(shape).scale(c)
    }

    #[inline]
    pub fn source(&self) -> &Shape {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &Shape {
        &self.target
    }

    #[inline]
    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.matrix.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let mut y = self.matrix.vec_mul(x);
        self.target.reduce(&mut y);
        y
    }

    /// `self` followed by `next`, i.e. `next ∘ self`.
    pub fn then(&self, next: &RnHom) -> RnHom {
        assert_eq!(self.target, next.source, "composition of incompatible maps");
        let mut m = self.matrix.mul(&next.matrix);
        reduce_columns(&mut m, &next.target);
        RnHom {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: m,
        }
    }

    pub fn add(&self, other: &RnHom) -> RnHom {
        assert_eq!((&self.source, &self.target), (&other.source, &other.target));
        let mut m = self.matrix.add(&other.matrix);
        reduce_columns(&mut m, &self.target);
        RnHom {
            matrix: m,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &RnHom) -> RnHom {
        assert_eq!((&self.source, &self.target), (&other.source, &other.target));
        let mut m = self.matrix.sub(&other.matrix);
        reduce_columns(&mut m, &self.target);
        RnHom {
            matrix: m,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: u64) -> RnHom {
        let mut m = self.matrix.scale(c);
        reduce_columns(&mut m, &self.target);
        RnHom {
            matrix: m,
            ..self.clone()
        }
    }

    pub fn neg(&self) -> RnHom {
        let ring = self.source.ring;
        self.scale(ring.modulus() - 1)
    }

    /// Matrix with columns scaled into `(Z/p^n)`: row `i` is the embedded
    /// image of basis vector `i`.
    pub fn embedded_matrix(&self) -> RMatrix {
        self.matrix.scale_columns(&self.target.embedding_factors())
    }

    /// `F_p`-matrix of the restriction to socles `M[p] → N[p]`.
    fn socle_matrix(&self) -> RMatrix {
        let ring = self.source.ring;
        let fp = RingSpec::new(ring.p(), 1).expect("p is prime");
        RMatrix::from_fn(fp, self.source.rank(), self.target.rank(), |i, j| {
            let li = self.source.exps[i];
            let mj = self.target.exps[j];
            // image of p^{λ_i - 1} e_i, coordinate j, divided by p^{μ_j - 1}
            let v = ring.mul(ring.int_pow(li - 1), self.matrix.get(i, j)) % ring.int_pow(mj);
            v / ring.int_pow(mj - 1)
        })
    }

    /// Injective iff injective on the socle of the source.
    pub fn is_injective(&self) -> bool {
        if self.source.is_zero() {
            return true;
        }
        let s = self.socle_matrix();
        crate::chainring::howell_form(&s).rows() == self.source.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().shape == self.target
    }

    /// Same order and injective.
    pub fn is_bijective(&self) -> bool {
        self.source.length() == self.target.length() && self.is_injective()
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Option<RnHom> {
        if !self.is_bijective() {
            return None;
        }
        let solver = LinearSolver::new(&self.embedded_matrix());
        let mut rows = Vec::with_capacity(self.target.rank());
        for j in 0..self.target.rank() {
            let mut e = vec![0; self.target.rank()];
            e[j] = 1;
            let x = solver.solve(&self.target.embed(&e))?;
            rows.push(self.source.reduced(&x));
        }
        RnHom::from_rows(self.target.clone(), self.source.clone(), &rows).ok()
    }

    pub fn kernel(&self) -> Submodule {
        let k = crate::chainring::kernel(&self.embedded_matrix());
        let gens: Vec<Vec<u64>> = (0..k.rows())
            .map(|i| self.source.reduced(k.row(i)))
            .collect();
        Submodule::generated_by(&self.source, &gens)
    }

    pub fn image(&self) -> Submodule {
        let gens: Vec<Vec<u64>> = (0..self.source.rank())
            .map(|i| self.matrix.row(i).to_vec())
            .collect();
        Submodule::generated_by(&self.target, &gens)
    }

    pub fn cokernel(&self) -> Quotient {
        let gens: Vec<Vec<u64>> = (0..self.source.rank())
            .map(|i| self.matrix.row(i).to_vec())
            .collect();
        subquotient(&self.target, &gens)
    }

    /// `f ⊗ g : M ⊗ N → M' ⊗ N'` in the coordinates of the two tensor shapes.
    pub fn tensor(
        &self,
        other: &RnHom,
        source: &TensorShape,
        target: &TensorShape,
    ) -> Result<RnHom> {
        let ring = self.source.ring;
        let mut m = RMatrix::zeros(ring, source.shape.rank(), target.shape.rank());
        for i in 0..self.source.rank() {
            for j in 0..other.source.rank() {
                let row = source.coord(i, j);
                for k in 0..self.target.rank() {
                    let a = self.matrix.get(i, k);
                    if a == 0 {
                        continue;
                    }
                    for l in 0..other.target.rank() {
                        let b = other.matrix.get(j, l);
                        if b != 0 {
                            let col = target.coord(k, l);
                            let cur = m.get(row, col);
                            m.set(row, col, cur + ring.mul(a, b));
                        }
                    }
                }
            }
        }
        RnHom::new(source.shape.clone(), target.shape.clone(), m)
    }

    /// The transpose map `N* → M*` under `Hom(Z/p^a, Z/p^n) ≅ Z/p^a`,
    /// generator `1 ↦ p^{n-a}`.
    pub fn dual(&self) -> RnHom {
        let ring = self.source.ring;
        let m = RMatrix::from_fn(ring, self.target.rank(), self.source.rank(), |j, i| {
            let c = self.matrix.get(i, j);
            let (li, mj) = (self.source.exps[i], self.target.exps[j]);
            if li >= mj {
                ring.mul(c, ring.int_pow(li - mj))
            } else {
                c / ring.int_pow(mj - li)
            }
        });
        RnHom::new(self.target.dual(), self.source.dual(), m).expect("dual map is well defined")
    }

    /// Base change `- ⊗ Z/p^m`.
    pub fn clip(&self, m: u32) -> RnHom {
        let source = self.source.clip(m);
        let target = self.target.clip(m);
        let mut mat = self
            .matrix
            .select_rows(&(0..source.rank()).collect::<Vec<_>>())
            .select_cols(&(0..target.rank()).collect::<Vec<_>>());
        reduce_columns(&mut mat, &target);
        RnHom::new(source, target, mat).expect("base change of a map is well defined")
    }

    /// Restriction to `p^k M → p^k N` in the bases `p^k e_j`.
    pub fn shift_down(&self, k: u32) -> RnHom {
        let source = self.source.shift_down(k);
        let target = self.target.shift_down(k);
        let mut mat = self
            .matrix
            .select_rows(&(0..source.rank()).collect::<Vec<_>>())
            .select_cols(&(0..target.rank()).collect::<Vec<_>>());
        reduce_columns(&mut mat, &target);
        RnHom::new(source, target, mat).expect("restriction to p^k M is well defined")
    }
}

/// Some `x : f.target → c.target` with `f.then(x) == c`.
///
/// The system splits by target column, and columns of equal exponent share
/// one coefficient matrix. On failure returns the first target column with
/// no solution and the Howell obstruction for it.
pub fn factor_through(f: &RnHom, c: &RnHom) -> std::result::Result<RnHom, (usize, Obstruction)> {
    assert_eq!(f.source, c.source, "factor_through needs a common source");
    let ring = f.source.ring;
    let (mid, tgt) = (&f.target, &c.target);
    let mut x = RMatrix::zeros(ring, mid.rank(), tgt.rank());
    let mut solvers: Vec<(u32, LinearSolver)> = Vec::new();
    for b in 0..tgt.rank() {
        let lb = tgt.exps[b];
        let scale = |k: usize| ring.int_pow(lb.saturating_sub(mid.exps[k]));
        let emb = ring.int_pow(ring.n() - lb);
        let pos = match solvers.iter().position(|(e, _)| *e == lb) {
            Some(pos) => pos,
            None => {
                let a = RMatrix::from_fn(ring, mid.rank(), f.source.rank(), |k, a| {
                    ring.mul(ring.mul(f.matrix.get(a, k), scale(k)), emb)
                });
                solvers.push((lb, LinearSolver::new(&a)));
                solvers.len() - 1
            }
        };
        let rhs: Vec<u64> = (0..f.source.rank())
            .map(|a| ring.mul(c.matrix.get(a, b), emb))
            .collect();
        let y = solvers[pos].1.try_solve(&rhs).map_err(|o| (b, o))?;
        for (k, &yk) in y.iter().enumerate() {
            x.set(k, b, ring.mul(yk, scale(k)) % ring.int_pow(lb));
        }
    }
    let x = RnHom::new(mid.clone(), tgt.clone(), x).expect("scaled unknowns meet the congruences");
    debug_assert_eq!(f.then(&x), *c);
    Ok(x)
}

pub(crate) fn reduce_columns(m: &mut RMatrix, target: &Shape) {
    let cols = m.cols();
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        for j in 0..cols {
            row[j] %= target.modulus(j);
        }
    }
}

/// A submodule in normal form together with its inclusion.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub shape: Shape,
    pub inclusion: RnHom,
    solver: LinearSolver,
}

impl Submodule {
    /// The submodule generated by `gens` (coordinate vectors of `ambient`).
    pub fn generated_by(ambient: &Shape, gens: &[Vec<u64>]) -> Submodule {
        let ring = ambient.ring;
        let rows: Vec<Vec<u64>> = gens.iter().map(|g| ambient.reduced(g)).collect();
        let s = RMatrix::from_rows(ring, ambient.rank(), &rows);
        // relations among the generators: c with c·S = 0 in the ambient module
        let rel = crate::chainring::kernel(&s.scale_columns(&ambient.embedding_factors()));
        let ck = cokernel_shape(&rel);
        let mut incl = ck.lift_matrix().mul(&s);
        reduce_columns(&mut incl, ambient);
        let inclusion = RnHom::new(ck.shape.clone(), ambient.clone(), incl)
            .expect("submodule inclusion is well defined");
        let solver = LinearSolver::new(&inclusion.embedded_matrix());
        Submodule {
            shape: ck.shape,
            inclusion,
            solver,
        }
    }

    pub fn ambient(&self) -> &Shape {
        self.inclusion.target()
    }

    /// Coordinates in the submodule of an ambient element, if it lies in it.
    pub fn coordinates(&self, x: &[u64]) -> Option<Vec<u64>> {
        let z = self.solver.solve(&self.ambient().embed(x))?;
        Some(self.shape.reduced(&z))
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.solver.contains(&self.ambient().embed(x))
    }
}

/// A quotient in normal form: shape, projection, and a set-theoretic section.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub shape: Shape,
    pub projection: RnHom,
    /// Row `k` is an ambient representative of quotient basis vector `k`.
    pub section: RMatrix,
}

impl Quotient {
    pub fn lift(&self, z: &[u64]) -> Vec<u64> {
        let mut y = self.section.vec_mul(z);
        self.projection.source().reduce(&mut y);
        y
    }
}

/// `M / ⟨generators⟩` in normal form.
pub fn subquotient(m: &Shape, generators: &[Vec<u64>]) -> Quotient {
    let ring = m.ring;
    let mut rows: Vec<Vec<u64>> = generators.iter().map(|g| m.reduced(g)).collect();
    let rel = m.relations();
    rows.extend(rel.row_vecs());
    let a = RMatrix::from_rows(ring, m.rank(), &rows);
    let ck = cokernel_shape(&a);
    let mut proj = ck.projection_matrix();
    reduce_columns(&mut proj, &ck.shape);
    let mut section = ck.lift_matrix();
    reduce_columns(&mut section, m);
    let projection =
        RnHom::new(m.clone(), ck.shape.clone(), proj).expect("quotient projection is well defined");
    Quotient {
        shape: ck.shape,
        projection,
        section,
    }
}
