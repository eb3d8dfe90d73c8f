mod common;

use std::sync::Arc;

use common::oracle::{additive_closure, equivariant_maps};
use strel_core::chainring::RingSpec;
use strel_core::group::FiniteGroup;
use strel_core::grouprep::*;

/// `log_p |Hom_R(M, N)|`.
fn hom_r_length(m: &GModule, n: &GModule) -> u32 {
    let mut t = 0;
    for &a in m.shape().exponents() {
        for &b in n.shape().exponents() {
            t += a.min(b);
        }
    }
    t
}

fn size_log(m: &GModule) -> u32 {
    m.shape().length()
}

fn moduli(m: &GModule) -> Vec<u64> {
    (0..m.rank()).map(|j| m.shape().modulus(j)).collect()
}

fn actions(m: &GModule) -> Vec<Vec<Vec<u64>>> {
    m.group()
        .generators()
        .iter()
        .map(|&s| m.action(s).matrix().row_vecs())
        .collect()
}

fn corpus(p: u64, n: u32, g: FiniteGroup) -> Vec<GModule> {
    let r = RingSpec::new(p, n).unwrap();
    let g = Arc::new(g);
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(trivial(r, &g, i).unwrap());
        out.push(regular(r, &g, i).unwrap());
        out.push(w_module(r, &g, i).unwrap());
    }
    out.push(dual_g(&w_module(r, &g, n).unwrap()).unwrap());
    out
}

#[test]
fn hom_space_matches_exhaustive_enumeration() {
    let mut checked = 0;
    let settings = [
        (2, 2, FiniteGroup::cyclic(2).unwrap()),
        (2, 3, FiniteGroup::cyclic(2).unwrap()),
        (3, 1, FiniteGroup::cyclic(3).unwrap()),
        (3, 2, FiniteGroup::cyclic(3).unwrap()),
        (2, 1, FiniteGroup::cyclic(4).unwrap()),
        (2, 1, FiniteGroup::symmetric3()),
    ];
    for (p, n, g) in settings {
        let mods = corpus(p, n, g);
        for a in &mods {
            for b in &mods {
                let pw = |e: u32| (p as f64).powi(e as i32);
                if pw(size_log(a)) > 64.0 || pw(size_log(b)) > 64.0 || pw(hom_r_length(a, b)) > 1e5
                {
                    continue;
                }
                let expected = equivariant_maps(&moduli(a), &moduli(b), &actions(a), &actions(b));
                let gens: Vec<Vec<Vec<u64>>> = hom_space(a, b)
                    .iter()
                    .map(|h| h.underlying().matrix().row_vecs())
                    .collect();
                let got = additive_closure(&gens, &moduli(b), a.rank());
                assert_eq!(got, expected, "{a:?} -> {b:?}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 100, "only {checked} pairs");
}
