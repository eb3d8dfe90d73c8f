use std::sync::Arc;

use super::{
    cokernel_g, induced_coords, kernel_g, regular, retraction, trivial, w_presentation, GHom,
    GModule, Ses,
};
use crate::chainring::{RMatrix, RingSpec};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rnmod::{RnHom, Shape, TensorShape};

/// `ι_*`: the underlying `R`-module.
pub fn restrict(m: &GModule) -> Shape {
    m.shape().clone()
}

/// Diagonal tensor product over the smaller of the two levels.
pub fn tensor_g(m: &GModule, n: &GModule) -> Result<GModule> {
    Ok(tensor_g_with_coords(m, n)?.0)
}

/// [`tensor_g`] together with the coordinate map of `e_i ⊗ f_j`.
pub fn tensor_g_with_coords(m: &GModule, n: &GModule) -> Result<(GModule, TensorShape)> {
    m.check_group(n)?;
    let ts = m.shape().tensor(n.shape())?;
    let gens = m
        .group()
        .generators()
        .iter()
        .map(|&s| m.action(s).tensor(n.action(s), &ts, &ts))
        .collect::<Result<Vec<_>>>()?;
    let module = GModule::new(
        m.level().min(n.level()),
        m.group().clone(),
        ts.shape.clone(),
        gens,
    )?;
    Ok((module, ts))
}

/// `f ⊗ g` between the diagonal tensor products.
pub fn tensor_hom(f: &GHom, g: &GHom) -> Result<GHom> {
    let (src, ts) = tensor_g_with_coords(f.source(), g.source())?;
    let (tgt, tt) = tensor_g_with_coords(f.target(), g.target())?;
    let map = f.underlying().tensor(g.underlying(), &ts, &tt)?;
    GHom::new(&src, &tgt, map)
}

/// `Hom_R(M, R)` with `(gφ)(x) = φ(g^{-1}x)`.
pub fn dual_g(m: &GModule) -> Result<GModule> {
    let g = m.group();
    let gens = g
        .generators()
        .iter()
        .map(|&s| m.action(g.inv(s)).dual())
        .collect();
    GModule::new(m.level(), g.clone(), m.shape().dual(), gens)
}

/// `M ⊗_{R} R_m` with no restriction on `m` beyond `m ≥ 0`.
pub(crate) fn clip_module(m: &GModule, level: u32) -> GModule {
    if level >= m.shape().max_exponent() {
        return if level >= m.level() {
            m.clone()
        } else {
            m.relabel(level)
        };
    }
    let gens = m
        .group()
        .generators()
        .iter()
        .map(|&s| m.action(s).clip(level))
        .collect();
    GModule::new(level, m.group().clone(), m.shape().clip(level), gens)
        .expect("base change of a module is a module")
}

/// `M ⊗ R_m` labelled at level `m` even when `m` exceeds the current level.
pub fn clip_module_at(m: &GModule, level: u32) -> GModule {
    let c = clip_module(m, level);
    if c.level() < level {
        c.relabel(level)
    } else {
        c
    }
}

/// Base change `- ⊗ R_m` for `m ≤ level(M)`.
pub fn base_change(m: &GModule, level: u32) -> Result<GModule> {
    if level > m.level() {
        return Err(Error::LevelOutOfRange {
            level,
            min: 0,
            max: m.level(),
        });
    }
    Ok(clip_module(m, level))
}

pub fn base_change_hom(f: &GHom, level: u32) -> Result<GHom> {
    let s = base_change(f.source(), level)?;
    let t = base_change(f.target(), level)?;
    GHom::new(&s, &t, f.underlying().clip(level))
}

/// The unit `M → M ⊗ R_m` (reduction of coordinates).
pub fn base_change_unit(m: &GModule, level: u32) -> GHom {
    let t = clip_module(m, level);
    let mat = RMatrix::from_fn(m.ring(), m.rank(), t.rank(), |i, j| u64::from(i == j));
    let map = RnHom::new(m.shape().clone(), t.shape().clone(), mat).expect("reduction map");
    GHom::new(m, &t, map).expect("reduction is equivariant")
}

/// `P_k(M) = p^k M` at level `level(M) - k`, in the basis `p^k e_j`.
pub fn mult_functor(m: &GModule, k: u32) -> Result<GModule> {
    if k >= m.level().max(1) {
        return Err(Error::LevelOutOfRange {
            level: k,
            min: 0,
            max: m.level().saturating_sub(1),
        });
    }
    let gens = m
        .group()
        .generators()
        .iter()
        .map(|&s| m.action(s).shift_down(k))
        .collect();
    GModule::new(
        m.level() - k,
        m.group().clone(),
        m.shape().shift_down(k),
        gens,
    )
}

/// `P_k(f)`: the restriction of `f` to `p^k M → p^k N`.
pub fn mult_hom(f: &GHom, k: u32) -> Result<GHom> {
    let s = mult_functor(f.source(), k)?;
    let t = mult_functor(f.target(), k)?;
    GHom::new(&s, &t, f.underlying().shift_down(k))
}

/// The comparison `P_k(M) ⊗ P_k(N) → P_k(M ⊗ N)`,
/// `p^k e_i ⊗ p^k f_j ↦ p^k (e_i ⊗ f_j)`, checked to be equivariant.
pub fn monoidal_comparison(m: &GModule, n: &GModule, k: u32) -> Result<GHom> {
    let (pm, pn) = (mult_functor(m, k)?, mult_functor(n, k)?);
    let (src, ts_small) = tensor_g_with_coords(&pm, &pn)?;
    let (mn, ts_full) = tensor_g_with_coords(m, n)?;
    let tgt = mult_functor(&mn, k)?;
    let mut mat = RMatrix::zeros(m.ring(), src.rank(), tgt.rank());
    for i in 0..pm.rank() {
        for j in 0..pn.rank() {
            mat.set(ts_small.coord(i, j), ts_full.coord(i, j), 1);
        }
    }
    let map = RnHom::new(src.shape().clone(), tgt.shape().clone(), mat)?;
    GHom::new(&src, &tgt, map)
}

/// `F = Ω_n^{-1} Ω_1` on a module over `A_1`: cover `X` by `A_1^{⊕r}` on the
/// coordinate generators, embed the kernel into `A_n^{⊕r}` through
/// `A_1 ≅ p^{n-1} A_n`, and take the cokernel.
pub fn functor_f(x: &GModule) -> Result<GModule> {
    if x.level() != 1 && !x.is_zero() {
        return Err(Error::LevelMismatch {
            expected: 1,
            found: x.level(),
        });
    }
    let ring = x.ring();
    let group = x.group();
    let n = ring.n();
    let r = x.rank();
    let cover_src = super::free_module(ring, group, 1, r)?;
    let ts = induced_coords(group, &Shape::uniform(ring, 1, r)?);
    let mut cover = RMatrix::zeros(ring, cover_src.rank(), r);
    for g in 0..group.order() {
        for j in 0..r {
            let row = x.action(g).matrix().row(j).to_vec();
            for (c, v) in row.into_iter().enumerate() {
                cover.set(ts.coord(g, j), c, v);
            }
        }
    }
    let cover = GHom::new(
        &cover_src,
        x,
        RnHom::new(cover_src.shape().clone(), x.shape().clone(), cover)?,
    )?;
    let omega = kernel_g(&cover);
    let big = super::free_module(ring, group, n, r)?;
    // same coordinate order: both are A ⊗ (uniform shape)
    let emb = omega.inclusion.underlying().matrix().scale(ring.pow(n - 1));
    let emb = GHom::new(
        &omega.module,
        &big,
        RnHom::new(omega.module.shape().clone(), big.shape().clone(), emb)?,
    )?;
    Ok(cokernel_g(&emb).module)
}

/// `0 → R_{m-1} → W_m → Q → 0` with `1 ↦ [Σ_g g]`, where `Q ≅ A_m/(Σ_g g)`
/// is `R`-free of rank `|G| - 1`; carries a solved `R`-retraction.
pub fn magic_sequence(ring: RingSpec, group: &Arc<FiniteGroup>, m: u32) -> Result<Ses> {
    if m < 2 || m > ring.n() {
        return Err(Error::LevelOutOfRange {
            level: m,
            min: 2,
            max: ring.n(),
        });
    }
    let (_, proj) = w_presentation(ring, group, m)?;
    let w = proj.target().clone();
    let sub = trivial(ring, group, m - 1)?;
    let norm = proj.underlying().apply(&super::norm_element(group));
    let i = GHom::new(
        &sub,
        &w,
        RnHom::from_rows(sub.shape().clone(), w.shape().clone(), &[norm])?,
    )?;
    let q = cokernel_g(&i).projection;
    let r = retraction(i.underlying());
    Ses::new(i, q, r)
}

/// `A_{i-1} ⊕ A_i^{⊕(|G|-1)}`, the expected value of `W_i ⊗ W_j` for `i < j`.
pub fn w_tensor_expected(ring: RingSpec, group: &Arc<FiniteGroup>, i: u32) -> Result<GModule> {
    let mut parts = vec![regular(ring, group, i - 1)?];
    for _ in 1..group.order() {
        parts.push(regular(ring, group, i)?);
    }
    super::direct_sum_all(ring, group, &parts)
}
