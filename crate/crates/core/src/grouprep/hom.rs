use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GHom, GModule};
use crate::chainring::{kernel, RMatrix};
use crate::rnmod::{subquotient, RnHom, Submodule};

/// A submodule with the induced action and its inclusion.
#[derive(Clone, Debug)]
pub struct SubmoduleG {
    pub module: GModule,
    pub inclusion: GHom,
}

/// A quotient with the induced action, its projection, and a section
/// (row `k` is an ambient lift of basis vector `k`).
#[derive(Clone, Debug)]
pub struct QuotientG {
    pub module: GModule,
    pub projection: GHom,
    pub section: RMatrix,
}

/// The action restricted to a `G`-stable submodule of `ambient`.
fn submodule_g(ambient: &GModule, sub: Submodule) -> SubmoduleG {
    let gens = ambient
        .group()
        .generators()
        .iter()
        .map(|&s| {
            let rows: Vec<Vec<u64>> = (0..sub.shape.rank())
                .map(|k| {
                    let x = ambient.act(s, sub.inclusion.matrix().row(k));
                    sub.coordinates(&x).expect("submodule is G-stable")
                })
                .collect();
            RnHom::from_rows(sub.shape.clone(), sub.shape.clone(), &rows)
                .expect("induced action is well defined")
        })
        .collect();
    let module = GModule::new(
        ambient.level(),
        ambient.group().clone(),
        sub.shape.clone(),
        gens,
    )
    .expect("induced action on a submodule");
    let inclusion =
        GHom::new(&module, ambient, sub.inclusion.clone()).expect("inclusion is equivariant");
    SubmoduleG { module, inclusion }
}

/// The `G`-submodule generated by the given elements (closed under the action).
pub fn generated_submodule(m: &GModule, gens: &[Vec<u64>]) -> SubmoduleG {
    let mut all = Vec::with_capacity(gens.len() * m.group().order());
    for x in gens {
        for g in 0..m.group().order() {
            all.push(m.act(g, x));
        }
    }
    submodule_g(m, Submodule::generated_by(m.shape(), &all))
}

pub fn kernel_g(f: &GHom) -> SubmoduleG {
    submodule_g(f.source(), f.underlying().kernel())
}

pub fn image_g(f: &GHom) -> SubmoduleG {
    submodule_g(f.target(), f.underlying().image())
}

/// `M / (G-submodule generated by gens)`.
pub fn quotient_g(m: &GModule, gens: &[Vec<u64>]) -> QuotientG {
    let mut all = Vec::with_capacity(gens.len() * m.group().order());
    for x in gens {
        for g in 0..m.group().order() {
            all.push(m.act(g, x));
        }
    }
    quotient_by(m, &all)
}

fn quotient_by(m: &GModule, stable_gens: &[Vec<u64>]) -> QuotientG {
    let q = subquotient(m.shape(), stable_gens);
    let gens = m
        .group()
        .generators()
        .iter()
        .map(|&s| {
            let rows: Vec<Vec<u64>> = (0..q.shape.rank())
                .map(|k| q.projection.apply(&m.act(s, q.section.row(k))))
                .collect();
            RnHom::from_rows(q.shape.clone(), q.shape.clone(), &rows)
                .expect("induced action is well defined")
        })
        .collect();
    let module = GModule::new(m.level(), m.group().clone(), q.shape.clone(), gens)
        .expect("induced action on a quotient");
    // equivariance of the projection is exactly the descent of the action
    let projection =
        GHom::new(m, &module, q.projection.clone()).expect("generators span a G-submodule");
    QuotientG {
        module,
        projection,
        section: q.section,
    }
}

pub fn cokernel_g(f: &GHom) -> QuotientG {
    let rows = f.underlying().matrix().row_vecs();
    quotient_by(f.target(), &rows)
}

/// Generators of `Hom_{A}(M, N)` as an `R`-module, in Howell order.
///
/// Unknown `X_ab = p^{s_ab} y_ab` with `s_ab = max(μ_b - λ_a, 0)`, so every
/// `y` gives a well-defined `R`-map; the equations are the embedded entries
/// of `ρ_M(s)X - Xρ_N(s)` for every generator `s`.
pub fn hom_space(m: &GModule, n: &GModule) -> Vec<GHom> {
    m.check_group(n).expect("hom_space needs a common group");
    let ring = m.ring();
    let (lam, mu) = (m.shape().exponents(), n.shape().exponents());
    let (rm, rn) = (lam.len(), mu.len());
    if rm == 0 || rn == 0 {
        return Vec::new();
    }
    let gens = m.group().generators();
    let s = |a: usize, b: usize| ring.int_pow(mu[b].saturating_sub(lam[a]));
    let emb: Vec<u64> = n.shape().embedding_factors();
    let block = rm * rn;
    let mut eq = RMatrix::zeros(ring, block, gens.len() * block);
    for (t, &g) in gens.iter().enumerate() {
        let (pm, pn) = (m.action(g).matrix(), n.action(g).matrix());
        let base = t * block;
        for a in 0..rm {
            for b in 0..rn {
                let u = a * rn + b;
                let sab = s(a, b);
                // + ρ_M(g)_{ca} σ_ab at column (c, b)
                for c in 0..rm {
                    let x = pm.get(c, a);
                    if x != 0 {
                        let col = base + c * rn + b;
                        let v = ring.mul(ring.mul(x, sab), emb[b]);
                        let cur = eq.get(u, col);
                        eq.set(u, col, ring.add(cur, v));
                    }
                }
                // - σ_ab ρ_N(g)_{bd} at column (a, d)
                for d in 0..rn {
                    let x = pn.get(b, d);
                    if x != 0 {
                        let col = base + a * rn + d;
                        let v = ring.mul(ring.mul(x, sab), emb[d]);
                        let cur = eq.get(u, col);
                        eq.set(u, col, ring.sub(cur, v));
                    }
                }
            }
        }
    }
    let k = kernel(&eq);
    let mut out: Vec<GHom> = Vec::with_capacity(k.rows());
    for row in 0..k.rows() {
        let y = k.row(row);
        let mat = RMatrix::from_fn(ring, rm, rn, |a, b| {
            ring.mul(y[a * rn + b], s(a, b)) % n.shape().modulus(b)
        });
        let map = RnHom::new(m.shape().clone(), n.shape().clone(), mat)
            .expect("scaled unknowns meet the congruences");
        if map.is_zero() || out.iter().any(|h| *h.underlying() == map) {
            continue;
        }
        out.push(GHom::new(m, n, map).expect("kernel vectors are equivariant"));
    }
    out
}

/// Fixed points `M^G` as a submodule of `M`.
pub fn fixed_points(m: &GModule) -> Submodule {
    let ring = m.ring();
    let r = m.rank();
    let emb = m.shape().embedding_factors();
    let gens = m.group().generators();
    let mut a = RMatrix::zeros(ring, r, r * gens.len());
    for (t, &g) in gens.iter().enumerate() {
        let rho = m.action(g).matrix();
        for i in 0..r {
            for j in 0..r {
                let v = ring.sub(rho.get(i, j), u64::from(i == j));
                a.set(i, t * r + j, ring.mul(v, emb[j]));
            }
        }
    }
    let k = kernel(&a);
    let rows: Vec<Vec<u64>> = (0..k.rows()).map(|i| m.shape().reduced(k.row(i))).collect();
    Submodule::generated_by(m.shape(), &rows)
}

/// Shape of the coinvariants `M / I_G M`.
pub fn coinvariants(m: &GModule) -> crate::rnmod::Quotient {
    let ring = m.ring();
    let mut rows = Vec::new();
    for &g in m.group().generators() {
        let rho = m.action(g).matrix();
        for i in 0..m.rank() {
            let mut row = rho.row(i).to_vec();
            row[i] = ring.sub(row[i], 1);
            rows.push(row);
        }
    }
    subquotient(m.shape(), &rows)
}

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// A verified equivariant bijection.
    Yes(GHom),
    /// A distinguishing invariant.
    No(String),
    Unknown,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
}

/// Combinations tried after the random phase: all coefficient vectors in
/// `{0, …, p-1}^k`, stopped after this many.
pub const EXHAUSTIVE_CAP: usize = 1 << 12;

/// Seeded search over `R`-combinations of `basis` for a map satisfying
/// `accept`: `budget` random combinations, then the exhaustive phase.
pub fn search_combinations(
    basis: &[GHom],
    seed: u64,
    budget: usize,
    mut accept: impl FnMut(&GHom) -> bool,
) -> Option<GHom> {
    let first = basis.first()?;
    let ring = first.source().ring();
    let combine = |coeffs: &[u64]| {
        let mut acc = GHom::zero(first.source(), first.target());
        for (c, h) in coeffs.iter().zip(basis) {
            if *c != 0 {
                acc = acc.add(&h.scale(*c));
            }
        }
        acc
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let coeffs: Vec<u64> = (0..basis.len())
            .map(|_| rng.gen_range(0..ring.modulus()))
            .collect();
        let f = combine(&coeffs);
        if accept(&f) {
            return Some(f);
        }
    }
    let p = ring.p();
    let mut coeffs = vec![0u64; basis.len()];
    for _ in 0..EXHAUSTIVE_CAP {
        // mixed-radix increment
        let mut k = 0;
        while k < coeffs.len() {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == coeffs.len() {
            break;
        }
        let f = combine(&coeffs);
        if accept(&f) {
            return Some(f);
        }
    }
    None
}

/// Semi-decision for `M ≅ N`.
pub fn is_isomorphic(m: &GModule, n: &GModule, seed: u64, budget: usize) -> IsoVerdict {
    if m.check_group(n).is_err() {
        return IsoVerdict::No("different groups".into());
    }
    if m.shape() != n.shape() {
        return IsoVerdict::No(format!(
            "shapes {:?} and {:?} differ",
            m.shape().exponents(),
            n.shape().exponents()
        ));
    }
    if m.is_zero() {
        return IsoVerdict::Yes(GHom::zero(m, n));
    }
    if m == n {
        return IsoVerdict::Yes(GHom::identity(m));
    }
    let (fm, fnn) = (fixed_points(m).shape, fixed_points(n).shape);
    if fm != fnn {
        return IsoVerdict::No(format!(
            "fixed points {:?} and {:?} differ",
            fm.exponents(),
            fnn.exponents()
        ));
    }
    let (cm, cn) = (coinvariants(m).shape, coinvariants(n).shape);
    if cm != cn {
        return IsoVerdict::No(format!(
            "coinvariants {:?} and {:?} differ",
            cm.exponents(),
            cn.exponents()
        ));
    }
    let basis = hom_space(m, n);
    match search_combinations(&basis, seed, budget, |f| f.is_bijective()) {
        Some(f) => IsoVerdict::Yes(f),
        None => IsoVerdict::Unknown,
    }
}
