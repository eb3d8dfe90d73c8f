use std::sync::Arc;

use super::{cokernel_g, GHom, GModule};
use crate::chainring::{RMatrix, RingSpec};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rnmod::{RnHom, Shape, TensorShape};

fn check_level(ring: RingSpec, m: u32, min: u32) -> Result<()> {
    if m < min || m > ring.n() {
        return Err(Error::LevelOutOfRange {
            level: m,
            min,
            max: ring.n(),
        });
    }
    Ok(())
}

/// `R_m` with trivial action; level 0 gives the zero module.
pub fn trivial(ring: RingSpec, group: &Arc<FiniteGroup>, m: u32) -> Result<GModule> {
    check_level(ring, m, 0)?;
    GModule::with_trivial_action(m, group.clone(), Shape::uniform(ring, m, 1)?)
}

/// `A_m = R_m G` with basis `e_h` and `g·e_h = e_{gh}`. `A_0 = 0`.
pub fn regular(ring: RingSpec, group: &Arc<FiniteGroup>, m: u32) -> Result<GModule> {
    check_level(ring, m, 0)?;
    let order = group.order();
    let shape = Shape::uniform(ring, m, order)?;
    if m == 0 {
        return GModule::with_trivial_action(0, group.clone(), shape);
    }
    let gens = group
        .generators()
        .iter()
        .map(|&g| {
            let mat = RMatrix::from_fn(ring, order, order, |h, c| u64::from(group.mul(g, h) == c));
            RnHom::new(shape.clone(), shape.clone(), mat).expect("permutation matrix")
        })
        .collect();
    GModule::new(m, group.clone(), shape, gens)
}

/// Coordinates of `A ⊗ N`: `coord(h, j)` is the position of `e_h ⊗ n_j`.
pub fn induced_coords(group: &FiniteGroup, n: &Shape) -> TensorShape {
    let ring = n.ring();
    let left = Shape::uniform(ring, n.max_exponent().max(1), group.order()).expect("uniform shape");
    left.tensor(n).expect("same ring")
}

/// `ι^* N = A_m ⊗_{R_m} N`, with `G` acting on the left factor.
pub fn induce(ring: RingSpec, group: &Arc<FiniteGroup>, m: u32, n: &Shape) -> Result<GModule> {
    check_level(ring, m, 0)?;
    if n.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if n.max_exponent() > m {
        return Err(Error::InvalidShape(format!(
            "exponent {} exceeds the level {m}",
            n.max_exponent()
        )));
    }
    let ts = induced_coords(group, n);
    let shape = ts.shape.clone();
    let order = group.order();
    let gens = group
        .generators()
        .iter()
        .map(|&g| {
            let mut mat = RMatrix::zeros(ring, shape.rank(), shape.rank());
            for h in 0..order {
                for j in 0..n.rank() {
                    mat.set(ts.coord(h, j), ts.coord(group.mul(g, h), j), 1);
                }
            }
            RnHom::new(shape.clone(), shape.clone(), mat).expect("permutation matrix")
        })
        .collect();
    GModule::new(m, group.clone(), shape, gens)
}

/// `A_m^{⊕r}`.
pub fn free_module(ring: RingSpec, group: &Arc<FiniteGroup>, m: u32, r: usize) -> Result<GModule> {
    induce(ring, group, m, &Shape::uniform(ring, m, r)?)
}

/// The norm element `Σ_g g` of `A_m`, as a coordinate vector.
pub fn norm_element(group: &FiniteGroup) -> Vec<u64> {
    vec![1; group.order()]
}

/// `k → A_i`, `1 ↦ p^{i-1} Σ_g g`, and its cokernel projection onto `W_i`.
pub fn w_presentation(ring: RingSpec, group: &Arc<FiniteGroup>, i: u32) -> Result<(GHom, GHom)> {
    check_level(ring, i, 1)?;
    let k = trivial(ring, group, 1)?;
    let a = regular(ring, group, i)?;
    let row: Vec<u64> = norm_element(group)
        .iter()
        .map(|&x| ring.mul(x, ring.int_pow(i - 1)))
        .collect();
    let map = RnHom::from_rows(k.shape().clone(), a.shape().clone(), &[row])?;
    let inc = GHom::new(&k, &a, map)?;
    let ck = cokernel_g(&inc);
    Ok((inc, ck.projection))
}

/// The cosyzygy `W_i = A_i / (p^{i-1} Σ_g g)` for `1 ≤ i ≤ n`.
pub fn w_module(ring: RingSpec, group: &Arc<FiniteGroup>, i: u32) -> Result<GModule> {
    Ok(w_presentation(ring, group, i)?.1.target().clone())
}

#[derive(Clone, Debug)]
pub struct DirectSumG {
    pub module: GModule,
    pub injections: [GHom; 2],
    pub projections: [GHom; 2],
}

pub fn direct_sum_g(a: &GModule, b: &GModule) -> Result<DirectSumG> {
    a.check_group(b)?;
    let ds = a.shape().direct_sum(b.shape())?;
    let [ia, ib] = &ds.injections;
    let [pa, pb] = &ds.projections;
    let gens = a
        .group()
        .generators()
        .iter()
        .map(|&s| {
            pa.then(a.action(s))
                .then(ia)
                .add(&pb.then(b.action(s)).then(ib))
        })
        .collect();
    let module = GModule::new(
        a.level().max(b.level()),
        a.group().clone(),
        ds.shape.clone(),
        gens,
    )?;
    let injections = [
        GHom::new(a, &module, ia.clone())?,
        GHom::new(b, &module, ib.clone())?,
    ];
    let projections = [
        GHom::new(&module, a, pa.clone())?,
        GHom::new(&module, b, pb.clone())?,
    ];
    Ok(DirectSumG {
        module,
        injections,
        projections,
    })
}

/// Direct sum of a list; the empty sum is the zero module.
pub fn direct_sum_all(
    ring: RingSpec,
    group: &Arc<FiniteGroup>,
    parts: &[GModule],
) -> Result<GModule> {
    let mut acc = trivial(ring, group, 0)?;
    for m in parts {
        acc = direct_sum_g(&acc, m)?.module;
    }
    Ok(acc)
}
