//! Seeded random modules and maps for property tests and verification suites.

use std::sync::Arc;

use rand::Rng;

use crate::chainring::RingSpec;
use crate::group::FiniteGroup;
use crate::grouprep::{
    direct_sum_g, free_module, generated_submodule, hom_space, quotient_g, regular, trivial,
    w_module, GHom, GModule,
};

fn random_element<R: Rng>(m: &GModule, rng: &mut R) -> Vec<u64> {
    (0..m.rank())
        .map(|j| rng.gen_range(0..m.shape().modulus(j)))
        .collect()
}

/// `A_m^{⊕r}` modulo the `G`-submodule generated by `relations` random elements.
pub fn random_quotient<R: Rng>(
    ring: RingSpec,
    group: &Arc<FiniteGroup>,
    m: u32,
    r: usize,
    relations: usize,
    rng: &mut R,
) -> GModule {
    let free = free_module(ring, group, m, r).expect("level in range");
    let gens: Vec<Vec<u64>> = (0..relations).map(|_| random_element(&free, rng)).collect();
    quotient_g(&free, &gens).module
}

/// A random quotient of `A_1^{⊕2}`: a module over `kG` with two generators.
pub fn random_two_generator<R: Rng>(
    ring: RingSpec,
    group: &Arc<FiniteGroup>,
    rng: &mut R,
) -> GModule {
    loop {
        let relations = rng.gen_range(1..=2);
        let x = random_quotient(ring, group, 1, 2, relations, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random nonzero module of level at most `level` and rank at most
/// `max_rank`, drawn from trivial, regular and `W` modules, random
/// quotients and cyclic submodules of free modules, and sums of two of
/// these. Relabelled at `level`.
pub fn random_module<R: Rng>(
    ring: RingSpec,
    group: &Arc<FiniteGroup>,
    level: u32,
    max_rank: usize,
    rng: &mut R,
) -> GModule {
    loop {
        let m = random_piece(ring, group, level, rng, 1);
        if !m.is_zero() && m.rank() <= max_rank {
            return m.inflate(level).expect("level within the ring");
        }
    }
}

fn random_piece<R: Rng>(
    ring: RingSpec,
    group: &Arc<FiniteGroup>,
    level: u32,
    rng: &mut R,
    depth: u32,
) -> GModule {
    let m = rng.gen_range(1..=level);
    match rng.gen_range(0..6) {
        0 => trivial(ring, group, m).unwrap(),
        1 => regular(ring, group, m).unwrap(),
        2 => w_module(ring, group, m).unwrap(),
        3 => {
            let relations = rng.gen_range(1..=2);
            random_quotient(ring, group, m, 1, relations, rng)
        }
        4 => {
            let a = regular(ring, group, m).unwrap();
            let x = random_element(&a, rng);
            generated_submodule(&a, &[x]).module
        }
        _ if depth > 0 => {
            let a = random_piece(ring, group, level, rng, depth - 1);
            let b = random_piece(ring, group, level, rng, depth - 1);
            direct_sum_g(&a, &b).unwrap().module
        }
        _ => trivial(ring, group, m).unwrap(),
    }
}

/// A random `R`-combination of a spanning set of `Hom_A(M, N)`.
pub fn random_hom<R: Rng>(m: &GModule, n: &GModule, rng: &mut R) -> GHom {
    let ring = m.ring();
    let mut f = GHom::zero(m, n);
    for h in hom_space(m, n) {
        f = f.add(&h.scale(rng.gen_range(0..ring.modulus())));
    }
    f
}
