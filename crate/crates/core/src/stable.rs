//! The relative stable category: weak projectivity, suspension, cones and
//! stable isomorphism.
//!
//! Weak projectivity is decided on a Sylow `p`-subgroup `P`. A module is
//! relatively `R`-projective for `G` iff its restriction to `P` is, because
//! `[G:P]` is a unit. Over a `p`-group the relatively projective modules are
//! exactly the sums `⊕ R_{e_j} P`, which can be recognised from the
//! coinvariants by lifting a normal basis and checking the resulting map.
//! Either way the answer carries a witness: a trace preimage `u` with
//! `Σ_g ρ(g^{-1}) u ρ(g) = 1`, checked exactly, or a certificate.

use crate::chainring::{LinearSolver, Obstruction, RMatrix};
use crate::grouprep::{
    base_change_unit, cokernel_g, direct_sum_g, hom_space, induce, induced_coords, kernel_g,
    search_combinations, GHom, GModule, Ses,
};
use crate::rnmod::{factor_through, subquotient, RnHom, Shape};

/// Why a module is not weakly projective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonProjectivity {
    /// The trace equation `Σ_g ρ(g^{-1}) u ρ(g) = 1` has no solution; the
    /// Howell reduction of the right-hand side gets stuck here.
    Unsolvable(Obstruction),
    /// On the Sylow subgroup `P`, the order of the module is not
    /// `|P|` times the order of its coinvariants.
    LengthMismatch { length: u32, expected: u32 },
    /// Coinvariant basis vector `index` (of exponent `exponent`) has no lift
    /// killed by `p^exponent`.
    NoLift {
        index: usize,
        exponent: u32,
        obstruction: Obstruction,
    },
}

#[derive(Clone, Debug)]
pub enum StableVerdict {
    /// `trace_preimage` satisfies the trace identity exactly.
    WeaklyProjective {
        trace_preimage: RnHom,
    },
    NotWeaklyProjective(NonProjectivity),
}

impl StableVerdict {
    pub fn is_weakly_projective(&self) -> bool {
        matches!(self, StableVerdict::WeaklyProjective { .. })
    }
}

/// `Σ_g ρ(g^{-1}) u ρ(g)`.
pub fn trace(m: &GModule, u: &RnHom) -> RnHom {
    let g = m.group();
    let mut acc = RnHom::zero(m.shape(), m.shape());
    for x in 0..g.order() {
        acc = acc.add(&m.action(g.inv(x)).then(u).then(m.action(x)));
    }
    acc
}

pub fn is_trace_preimage(m: &GModule, u: &RnHom) -> bool {
    u.source() == m.shape() && u.target() == m.shape() && trace(m, u) == RnHom::identity(m.shape())
}

pub fn is_weakly_projective(m: &GModule) -> StableVerdict {
    if m.is_zero() {
        return StableVerdict::WeaklyProjective {
            trace_preimage: RnHom::identity(m.shape()),
        };
    }
    let ring = m.ring();
    let group = m.group();
    let p = ring.p();
    let u = if group.is_p_group(p) {
        match p_group_witness(m) {
            Ok(u) => u,
            Err(c) => return StableVerdict::NotWeaklyProjective(c),
        }
    } else {
        let (elements, gens) = group.sylow(p);
        let res = m
            .restrict_to_subgroup(&elements, &gens)
            .expect("a Sylow subgroup is a subgroup");
        let u = match p_group_witness(&res) {
            Ok(u) => u,
            Err(c) => return StableVerdict::NotWeaklyProjective(c),
        };
        // Tr_G = Tr_{G/P} ∘ Tr_P and Tr_{G/P}(1) = [G:P]
        let index = (group.order() / elements.len()) as u64;
        let inv = ring.unit_inverse(index).expect("Sylow index is prime to p");
        u.scale(inv)
    };
    assert!(
        is_trace_preimage(m, &u),
        "constructed trace witness failed verification"
    );
    StableVerdict::WeaklyProjective { trace_preimage: u }
}

/// Over a `p`-group: lift a normal basis `b_j` of `M / I_G M` to `m_j` with
/// `p^{e_j} m_j = 0` and check `⊕ R_{e_j} G → M`, `(j, g) ↦ g m_j`, is onto
/// (it then is bijective by the length count). The witness is
/// `Φ^{-1} E Φ` with `E` the projection onto the identity coordinates.
fn p_group_witness(m: &GModule) -> Result<RnHom, NonProjectivity> {
    let ring = m.ring();
    let group = m.group().clone();
    let order = group.order();
    let shape = m.shape();
    let mut rel = Vec::new();
    for &s in group.generators() {
        let rho = m.action(s).matrix();
        for i in 0..m.rank() {
            let mut row = rho.row(i).to_vec();
            row[i] = ring.sub(row[i], 1);
            rel.push(row);
        }
    }
    let q = subquotient(shape, &rel);
    let expected = order as u32 * q.shape.length();
    if expected != shape.length() {
        return Err(NonProjectivity::LengthMismatch {
            length: shape.length(),
            expected,
        });
    }

    let mut lifts: Vec<Vec<u64>> = Vec::with_capacity(q.shape.rank());
    for (j, &e) in q.shape.exponents().iter().enumerate() {
        // generators p^{max(λ_k - e, 0)} e_k of M[p^e] and their images
        let gens: Vec<Vec<u64>> = (0..m.rank())
            .map(|k| {
                let mut v = vec![0; m.rank()];
                v[k] = ring.pow(shape.exponents()[k].saturating_sub(e));
                v
            })
            .collect();
        let images: Vec<Vec<u64>> = gens
            .iter()
            .map(|g| q.shape.embed(&q.projection.apply(g)))
            .collect();
        let a = RMatrix::from_rows(ring, q.shape.rank(), &images);
        let mut b = vec![0; q.shape.rank()];
        b[j] = 1;
        let c = LinearSolver::new(&a)
            .try_solve(&q.shape.embed(&b))
            .map_err(|obstruction| NonProjectivity::NoLift {
                index: j,
                exponent: e,
                obstruction,
            })?;
        let mut mj = vec![0u64; m.rank()];
        for (ck, g) in c.iter().zip(&gens) {
            for (x, &y) in mj.iter_mut().zip(g) {
                *x = ring.add(*x, ring.mul(*ck, y));
            }
        }
        shape.reduce(&mut mj);
        lifts.push(mj);
    }

    let free_exps: Vec<u32> = q
        .shape
        .exponents()
        .iter()
        .flat_map(|&e| std::iter::repeat_n(e, order))
        .collect();
    let free = Shape::new(ring, free_exps).expect("sorted by construction");
    let rows: Vec<Vec<u64>> = lifts
        .iter()
        .flat_map(|mj| (0..order).map(|g| m.act(g, mj)).collect::<Vec<_>>())
        .collect();
    let phi = RnHom::from_rows(free.clone(), shape.clone(), &rows)
        .expect("lifts are killed by their exponents");
    let phi_inv = phi
        .inverse()
        .expect("a surjection between modules of equal length is bijective");
    let e = RMatrix::from_fn(ring, free.rank(), free.rank(), |r, c| {
        u64::from(r == c && r % order == 0)
    });
    let e = RnHom::new(free.clone(), free, e).expect("coordinate projection");
    Ok(phi_inv.then(&e).then(&phi))
}

/// The trace equation as one linear system in `r²` unknowns. Exact for any
/// group; used as a cross-check of [`is_weakly_projective`] on small modules.
pub fn higman_solve(m: &GModule) -> StableVerdict {
    let ring = m.ring();
    let group = m.group();
    let lam = m.shape().exponents();
    let r = lam.len();
    if r == 0 {
        return is_weakly_projective(m);
    }
    let s = |a: usize, b: usize| ring.int_pow(lam[b].saturating_sub(lam[a]));
    let emb = m.shape().embedding_factors();
    let mut a_mat = RMatrix::zeros(ring, r * r, r * r);
    for g in 0..group.order() {
        let left = m.action(group.inv(g)).matrix();
        let right = m.action(g).matrix();
        for a in 0..r {
            for c in 0..r {
                let x = left.get(c, a);
                if x == 0 {
                    continue;
                }
                for b in 0..r {
                    let xs = ring.mul(x, s(a, b));
                    if xs == 0 {
                        continue;
                    }
                    for d in 0..r {
                        let y = right.get(b, d);
                        if y != 0 {
                            let v = ring.mul(ring.mul(xs, y), emb[d]);
                            let cur = a_mat.get(a * r + b, c * r + d);
                            a_mat.set(a * r + b, c * r + d, ring.add(cur, v));
                        }
                    }
                }
            }
        }
    }
    let mut rhs = vec![0u64; r * r];
    for c in 0..r {
        rhs[c * r + c] = emb[c];
    }
    match LinearSolver::new(&a_mat).try_solve(&rhs) {
        Ok(y) => {
            let mat = RMatrix::from_fn(ring, r, r, |a, b| {
                ring.mul(y[a * r + b], s(a, b)) % m.shape().modulus(b)
            });
            let u = RnHom::new(m.shape().clone(), m.shape().clone(), mat)
                .expect("scaled unknowns meet the congruences");
            assert!(is_trace_preimage(m, &u));
            StableVerdict::WeaklyProjective { trace_preimage: u }
        }
        Err(o) => StableVerdict::NotWeaklyProjective(NonProjectivity::Unsolvable(o)),
    }
}

/// `ι^* ι_* M`.
pub fn induced_module(m: &GModule) -> GModule {
    induce(m.ring(), m.group(), m.level(), m.shape()).expect("exponents are within the level")
}

/// The unit `M → ι^*ι_*M`, `m ↦ Σ_g g ⊗ g^{-1} m`.
pub fn unit_map(m: &GModule) -> GHom {
    let ind = induced_module(m);
    let ts = induced_coords(m.group(), m.shape());
    let g = m.group();
    let mut mat = RMatrix::zeros(m.ring(), m.rank(), ind.rank());
    for x in 0..g.order() {
        let rho = m.action(g.inv(x)).matrix();
        for i in 0..m.rank() {
            for j in 0..m.rank() {
                mat.set(i, ts.coord(x, j), rho.get(i, j));
            }
        }
    }
    let map = RnHom::new(m.shape().clone(), ind.shape().clone(), mat).expect("unit map");
    GHom::new(m, &ind, map).expect("unit map is equivariant")
}

/// The counit `ι^*ι_*M → M`, `g ⊗ m ↦ g m`.
pub fn counit_map(m: &GModule) -> GHom {
    let ind = induced_module(m);
    let ts = induced_coords(m.group(), m.shape());
    let mut mat = RMatrix::zeros(m.ring(), ind.rank(), m.rank());
    for x in 0..m.group().order() {
        let rho = m.action(x).matrix();
        for j in 0..m.rank() {
            for c in 0..m.rank() {
                mat.set(ts.coord(x, j), c, rho.get(j, c));
            }
        }
    }
    let map = RnHom::new(ind.shape().clone(), m.shape().clone(), mat).expect("counit map");
    GHom::new(&ind, m, map).expect("counit map is equivariant")
}

#[derive(Clone, Debug)]
pub struct Suspension {
    pub module: GModule,
    /// `0 → M → ι^*ι_*M → ΣM → 0`, with a solved `R`-splitting.
    pub sequence: Ses,
}

pub fn suspend_with_sequence(m: &GModule) -> Suspension {
    let unit = unit_map(m);
    let q = cokernel_g(&unit);
    let sequence = Ses::with_solved_splitting(unit, q.projection).expect("unit sequence is exact");
    Suspension {
        module: q.module,
        sequence,
    }
}

pub fn suspend(m: &GModule) -> GModule {
    suspend_with_sequence(m).module
}

/// `Σ^{-1} M`: the kernel of the counit.
pub fn desuspend(m: &GModule) -> GModule {
    kernel_g(&counit_map(m)).module
}

#[derive(Clone, Debug)]
pub struct Cone {
    pub module: GModule,
    /// `N → cone(f)`.
    pub from_target: GHom,
    /// `cone(f) → ΣM`.
    pub to_suspension: GHom,
}

/// `cone(f) = coker(M → ι^*ι_*M ⊕ N, m ↦ (η m, -f m))` with its triangle maps.
pub fn cone(f: &GHom) -> Cone {
    let m = f.source();
    let unit = unit_map(m);
    let ind = unit.target().clone();
    let ds = direct_sum_g(&ind, f.target()).expect("common group");
    let into = unit.then(&ds.injections[0]).sub(&f.then(&ds.injections[1]));
    let q = cokernel_g(&into);
    let from_target = ds.injections[1].then(&q.projection);

    let susp = cokernel_g(&unit);
    // cone → ΣM: take the ι^*ι_*M component of a lift and project
    let via = ds.projections[0].then(&susp.projection);
    let rows: Vec<Vec<u64>> = (0..q.module.rank())
        .map(|k| via.underlying().apply(q.section.row(k)))
        .collect();
    let map = RnHom::from_rows(q.module.shape().clone(), susp.module.shape().clone(), &rows)
        .expect("connecting map is well defined");
    let to_suspension =
        GHom::new(&q.module, &susp.module, map).expect("connecting map is equivariant");
    Cone {
        module: q.module,
        from_target,
        to_suspension,
    }
}

pub fn is_stably_zero(m: &GModule) -> bool {
    is_weakly_projective(m).is_weakly_projective()
}

pub fn is_stably_iso(f: &GHom) -> bool {
    is_stably_zero(&cone(f).module)
}

#[derive(Clone, Debug)]
pub enum StableIsoVerdict {
    /// A map whose cone is weakly projective (possibly from the second
    /// module to the first; see `reversed`).
    Yes {
        witness: GHom,
        reversed: bool,
    },
    No(String),
    Unknown,
}

impl StableIsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, StableIsoVerdict::Yes { .. })
    }
}

/// Semi-decision for `M ≅ N` in the stable category. Searches maps out of
/// the shorter module, which keeps the cones small.
pub fn stably_isomorphic(m: &GModule, n: &GModule, seed: u64, budget: usize) -> StableIsoVerdict {
    if m.group() != n.group() || m.ring() != n.ring() {
        return StableIsoVerdict::No("different groups".into());
    }
    let (zm, zn) = (is_stably_zero(m), is_stably_zero(n));
    match (zm, zn) {
        (true, true) => {
            return StableIsoVerdict::Yes {
                witness: GHom::zero(m, n),
                reversed: false,
            }
        }
        (true, false) | (false, true) => {
            return StableIsoVerdict::No("exactly one module is weakly projective".into())
        }
        _ => {}
    }
    let reversed = n.shape().length() < m.shape().length();
    let (src, tgt) = if reversed { (n, m) } else { (m, n) };
    let basis = hom_space(src, tgt);
    match search_combinations(&basis, seed, budget, is_stably_iso) {
        Some(witness) => StableIsoVerdict::Yes { witness, reversed },
        None => StableIsoVerdict::Unknown,
    }
}

/// An `R`-linear retraction of the first map of an exact sequence, if any.
pub fn check_r_split(s: &Ses) -> Option<RnHom> {
    factor_through(s.i.underlying(), &RnHom::identity(s.sub().shape())).ok()
}

/// The unit `M → M ⊗ R_m` and its cone, used for component obstructions.
pub fn base_change_cone(m: &GModule, level: u32) -> Cone {
    cone(&base_change_unit(m, level))
}
