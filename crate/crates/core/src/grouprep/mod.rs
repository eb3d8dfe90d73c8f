//! Modules over `A_m = (Z/p^m)G` and equivariant maps between them.
//!
//! A [`GModule`] is a [`Shape`] together with one matrix per group element.
//! With the row-vector convention a left module has `ρ(gh) = ρ(h)ρ(g)`, and
//! a map `F` is equivariant when `ρ_M(g)·F = F·ρ_N(g)`.
//!
//! Every module lives over the global ring `Z/p^n`; the level `m` records
//! that all exponents are at most `m`, so the module is an `A_m`-module.

mod functors;
mod hom;
mod standard;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

pub use functors::*;
pub use hom::*;
pub use standard::*;

use crate::chainring::RingSpec;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rnmod::{factor_through, RnHom, Shape};

#[derive(Clone)]
pub struct GModule {
    inner: Arc<ModuleData>,
}

struct ModuleData {
    level: u32,
    group: Arc<FiniteGroup>,
    shape: Shape,
    // indexed by group element
    action: Vec<RnHom>,
}

impl GModule {
    /// Builds a module from the matrices of the group's generators (in the
    /// order of `group.generators()`), completing the action to every
    /// element and checking every Cayley-graph edge.
    pub fn new(
        level: u32,
        group: Arc<FiniteGroup>,
        shape: Shape,
        generators: Vec<RnHom>,
    ) -> Result<Self> {
        let ring = shape.ring();
        if level > ring.n() {
            return Err(Error::LevelOutOfRange {
                level,
                min: 0,
                max: ring.n(),
            });
        }
        if shape.max_exponent() > level {
            return Err(Error::InvalidShape(format!(
                "exponent {} exceeds the level {level}",
                shape.max_exponent()
            )));
        }
        if generators.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} matrices for {} generators",
                generators.len(),
                group.generators().len()
            )));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.source() != &shape || g.target() != &shape {
                return Err(Error::InvalidAction(format!(
                    "matrix {k} is not an endomorphism of the shape"
                )));
            }
            if !g.is_injective() {
                return Err(Error::InvalidAction(format!(
                    "matrix {k} is not invertible"
                )));
            }
        }

        let order = group.order();
        let mut action: Vec<Option<RnHom>> = vec![None; order];
        action[0] = Some(RnHom::identity(&shape));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let rx = action[x].clone().expect("queued elements have matrices");
            for (k, &s) in group.generators().iter().enumerate() {
                // ρ(s·x) = ρ(x)·ρ(s)
                let y = group.mul(s, x);
                let ry = rx.then(&generators[k]);
                match &action[y] {
                    Some(existing) if *existing != ry => {
                        return Err(Error::InvalidAction(format!(
                            "relation violated: element {y} reached with two different matrices"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        action[y] = Some(ry);
                        queue.push_back(y);
                    }
                }
            }
        }
        let action = action
            .into_iter()
            .map(|a| a.expect("generators generate the group"))
            .collect();
        Ok(GModule {
            inner: Arc::new(ModuleData {
                level,
                group,
                shape,
                action,
            }),
        })
    }

    /// Trivial action on `shape`.
    pub fn with_trivial_action(level: u32, group: Arc<FiniteGroup>, shape: Shape) -> Result<Self> {
        let id = RnHom::identity(&shape);
        let gens = vec![id; group.generators().len()];
        GModule::new(level, group, shape, gens)
    }

    #[inline]
    pub fn ring(&self) -> RingSpec {
        self.inner.shape.ring()
    }

    #[inline]
    pub fn level(&self) -> u32 {
        self.inner.level
    }

    #[inline]
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.inner.group
    }

    #[inline]
    pub fn shape(&self) -> &Shape {
        &self.inner.shape
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.inner.shape.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.shape.is_zero()
    }

    /// Matrix of the group element `g`.
    #[inline]
    pub fn action(&self, g: usize) -> &RnHom {
        &self.inner.action[g]
    }

    /// Matrices of the generators, in generator order.
    pub fn generator_matrices(&self) -> Vec<RnHom> {
        self.group()
            .generators()
            .iter()
            .map(|&s| self.action(s).clone())
            .collect()
    }

    /// `g · x`.
    pub fn act(&self, g: usize, x: &[u64]) -> Vec<u64> {
        self.action(g).apply(x)
    }

    /// The same module with a larger level label.
    pub fn inflate(&self, level: u32) -> Result<GModule> {
        if level < self.level() || level > self.ring().n() {
            return Err(Error::LevelOutOfRange {
                level,
                min: self.level(),
                max: self.ring().n(),
            });
        }
        Ok(self.relabel(level))
    }

    pub(crate) fn relabel(&self, level: u32) -> GModule {
        debug_assert!(self.shape().max_exponent() <= level);
        GModule {
            inner: Arc::new(ModuleData {
                level,
                group: self.inner.group.clone(),
                shape: self.inner.shape.clone(),
                action: self.inner.action.clone(),
            }),
        }
    }

    pub(crate) fn check_group(&self, other: &GModule) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        if !Arc::ptr_eq(self.group(), other.group()) && self.group() != other.group() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Restriction to a subgroup given by its elements (identity first) and
    /// generators, both as elements of this module's group.
    pub fn restrict_to_subgroup(
        &self,
        elements: &[usize],
        generators: &[usize],
    ) -> Result<GModule> {
        let h = Arc::new(self.group().subgroup(elements, generators)?);
        let gens = generators.iter().map(|&g| self.action(g).clone()).collect();
        GModule::new(self.level(), h, self.shape().clone(), gens)
    }
}

impl PartialEq for GModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.level() == other.level()
                && self.group() == other.group()
                && self.shape() == other.shape()
                && self.inner.action == other.inner.action)
    }
}

impl Eq for GModule {}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GModule(level {}, {:?}, shape {:?})",
            self.level(),
            self.group(),
            self.shape().exponents()
        )
    }
}

/// An equivariant map.
#[derive(Clone, PartialEq, Eq)]
pub struct GHom {
    source: GModule,
    target: GModule,
    map: RnHom,
}

impl GHom {
    pub fn new(source: &GModule, target: &GModule, map: RnHom) -> Result<Self> {
        source.check_group(target)?;
        if map.source() != source.shape() || map.target() != target.shape() {
            return Err(Error::DimensionMismatch(
                "map shapes differ from the module shapes".into(),
            ));
        }
        for &s in source.group().generators() {
            if source.action(s).then(&map) != map.then(target.action(s)) {
                return Err(Error::NotEquivariant(s));
            }
        }
        Ok(GHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(m: &GModule) -> Self {
        GHom {
            source: m.clone(),
            target: m.clone(),
            map: RnHom::identity(m.shape()),
        }
    }

    pub fn zero(source: &GModule, target: &GModule) -> Self {
        GHom {
            source: source.clone(),
            target: target.clone(),
            map: RnHom::zero(source.shape(), target.shape()),
        }
    }

    #[inline]
    pub fn source(&self) -> &GModule {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &GModule {
        &self.target
    }

    /// The underlying `R`-linear map.
    #[inline]
    pub fn underlying(&self) -> &RnHom {
        &self.map
    }

    pub fn then(&self, next: &GHom) -> GHom {
        GHom {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.then(&next.map),
        }
    }

    pub fn add(&self, other: &GHom) -> GHom {
        GHom {
            map: self.map.add(&other.map),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &GHom) -> GHom {
        GHom {
            map: self.map.sub(&other.map),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: u64) -> GHom {
        GHom {
            map: self.map.scale(c),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> GHom {
        GHom {
            map: self.map.neg(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }

    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }

    pub fn inverse(&self) -> Option<GHom> {
        let inv = self.map.inverse()?;
        Some(GHom {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

impl fmt::Debug for GHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GHom({:?} -> {:?}) {:?}",
            self.source,
            self.target,
            self.map.matrix()
        )
    }
}

/// A short exact sequence `0 → sub → mid → quot → 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub i: GHom,
    pub q: GHom,
    /// An `R`-linear retraction of `i`, when the sequence is `R`-split.
    pub splitting: Option<RnHom>,
}

impl Ses {
    /// Checks exactness: `i` injective, `q` surjective, `i·q = 0`, and the
    /// lengths add up (which forces `image(i) = kernel(q)`).
    pub fn new(i: GHom, q: GHom, splitting: Option<RnHom>) -> Result<Self> {
        if i.target() != q.source() {
            return Err(Error::NotExact("maps are not composable".into()));
        }
        if !i.is_injective() {
            return Err(Error::NotExact("first map is not injective".into()));
        }
        if !q.is_surjective() {
            return Err(Error::NotExact("second map is not surjective".into()));
        }
        if !i.then(&q).is_zero() {
            return Err(Error::NotExact("composite is nonzero".into()));
        }
        let (a, b, c) = (
            i.source().shape().length(),
            i.target().shape().length(),
            q.target().shape().length(),
        );
        if a + c != b {
            return Err(Error::NotExact(format!("lengths {a} + {c} != {b}")));
        }
        if let Some(r) = &splitting {
            if i.underlying().then(r) != RnHom::identity(i.source().shape()) {
                return Err(Error::NotExact(
                    "splitting witness is not a retraction".into(),
                ));
            }
        }
        Ok(Ses { i, q, splitting })
    }

    /// Exact sequence with a retraction found by solving, if one exists.
    pub fn with_solved_splitting(i: GHom, q: GHom) -> Result<Self> {
        let r = retraction(i.underlying());
        Ses::new(i, q, r)
    }

    pub fn sub(&self) -> &GModule {
        self.i.source()
    }

    pub fn mid(&self) -> &GModule {
        self.i.target()
    }

    pub fn quot(&self) -> &GModule {
        self.q.target()
    }
}

/// An `R`-linear left inverse of `f`, if one exists.
pub fn retraction(f: &RnHom) -> Option<RnHom> {
    factor_through(f, &RnHom::identity(f.source())).ok()
}
