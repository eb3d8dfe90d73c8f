//! Supports and primes.
//!
//! The `i`-th component of `X` lives at level `i`: with `Y = X ⊗ R_i`, it is
//! the fiber of the unit `Y → Y ⊗ R_{i-1}` (and `Y` itself for `i = 1`). The
//! fiber lies in the kernel of `- ⊗ R_{i-1}`, and the components of `X`
//! vanish simultaneously iff `X` does. For a cyclic group of order `p` each
//! of these kernels has no proper nonzero thick tensor ideal, so the set of
//! nonvanishing components is the Balmer support; for other groups the same
//! set is reported as a coarse support.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::chainring::RingSpec;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::grouprep::{clip_module_at, mult_functor, tensor_g, w_module, GModule};
use crate::stable::{base_change_cone, desuspend, is_stably_zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportKind {
    /// Balmer support (cyclic group of order `p`).
    Exact,
    /// Component support only.
    Coarse,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportSet {
    pub n: u32,
    pub members: BTreeSet<u32>,
    pub kind: SupportKind,
}

impl SupportSet {
    pub fn contains(&self, i: u32) -> bool {
        self.members.contains(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `{1, …, m}`.
    pub fn initial(n: u32, m: u32, kind: SupportKind) -> Self {
        SupportSet {
            n,
            members: (1..=m).collect(),
            kind,
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(|i| i.to_string()).collect();
        let kind = match self.kind {
            SupportKind::Exact => "exact",
            SupportKind::Coarse => "coarse",
        };
        write!(f, "{{{}}} ({kind})", items.join(","))
    }
}

fn check_index(x: &GModule, i: u32) -> Result<()> {
    let n = x.ring().n();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n,
        });
    }
    Ok(())
}

/// `X ⊗ R_i`, labelled at level `i`.
fn level_part(x: &GModule, i: u32) -> GModule {
    clip_module_at(x, i)
}

/// An `A_i`-module that is stably zero iff the `i`-th component of `X` is.
pub fn component_obstruction(x: &GModule, i: u32) -> Result<GModule> {
    check_index(x, i)?;
    let y = level_part(x, i);
    if i == 1 {
        return Ok(y);
    }
    Ok(desuspend(&base_change_cone(&y, i - 1).module))
}

/// Whether the `i`-th component vanishes. Uses the cone directly, which is
/// stably zero iff its desuspension is.
pub fn component_vanishes(x: &GModule, i: u32) -> Result<bool> {
    check_index(x, i)?;
    let y = level_part(x, i);
    if i == 1 {
        return Ok(is_stably_zero(&y));
    }
    if y.shape().max_exponent() < i {
        // the unit is an isomorphism
        return Ok(true);
    }
    Ok(is_stably_zero(&base_change_cone(&y, i - 1).module))
}

fn kind_for(x: &GModule) -> SupportKind {
    if x.group().is_cyclic_of_prime_order(x.ring().p()) {
        SupportKind::Exact
    } else {
        SupportKind::Coarse
    }
}

pub fn support(x: &GModule) -> SupportSet {
    let n = x.ring().n();
    let kind = kind_for(x);
    let mut members = BTreeSet::new();
    if !is_stably_zero(x) {
        for i in 1..=n {
            if !component_vanishes(x, i).expect("index in range") {
                members.insert(i);
            }
        }
    }
    SupportSet { n, members, kind }
}

/// Membership of `X` in the prime `P_{i,n}`; only for `C_p`.
pub fn in_prime(x: &GModule, i: u32) -> Result<bool> {
    let p = x.ring().p();
    if !x.group().is_cyclic_of_prime_order(p) {
        return Err(Error::NotCyclicPrime {
            p,
            order: x.group().order(),
        });
    }
    component_vanishes(x, i)
}

/// `p^{i-1}` times the `i`-th component: a module over `A_1`.
pub fn residue_model(x: &GModule, i: u32) -> Result<GModule> {
    let c = component_obstruction(x, i)?;
    mult_functor(&c, i - 1)
}

#[derive(Clone, Debug)]
pub struct PrimeDescriptor {
    pub i: u32,
    /// Indices `j ≠ i` of the generators `W_j`.
    pub generator_indices: Vec<u32>,
    pub generators: Vec<GModule>,
}

#[derive(Clone, Debug)]
pub struct SpcPoints {
    pub primes: Vec<PrimeDescriptor>,
    /// `(i, j, W_i ⊗ W_j weakly projective)` for all `i ≠ j`.
    pub orthogonality: Vec<(u32, u32, bool)>,
}

impl SpcPoints {
    pub fn all_orthogonal(&self) -> bool {
        self.orthogonality.iter().all(|&(_, _, wp)| wp)
    }
}

/// The primes `P_{i,n}` generated by all `W_j` with `j ≠ i`.
pub fn spc_points(ring: RingSpec, group: &Arc<FiniteGroup>) -> Result<SpcPoints> {
    let p = ring.p();
    if !group.is_cyclic_of_prime_order(p) {
        return Err(Error::NotCyclicPrime {
            p,
            order: group.order(),
        });
    }
    let n = ring.n();
    let ws: Vec<GModule> = (1..=n)
        .map(|i| w_module(ring, group, i))
        .collect::<Result<_>>()?;
    let primes = (1..=n)
        .map(|i| {
            let idx: Vec<u32> = (1..=n).filter(|&j| j != i).collect();
            PrimeDescriptor {
                i,
                generators: idx.iter().map(|&j| ws[j as usize - 1].clone()).collect(),
                generator_indices: idx,
            }
        })
        .collect();
    let mut orthogonality = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let t = tensor_g(&ws[i as usize - 1], &ws[j as usize - 1])?;
                orthogonality.push((i, j, is_stably_zero(&t)));
            }
        }
    }
    Ok(SpcPoints {
        primes,
        orthogonality,
    })
}
