//! Brute-force oracles over `Z/q`, `q = p^n`. These use plain integer
//! arithmetic and enumeration only, never the library's elimination code.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Vector = Vec<u64>;

/// Every `Z/q`-linear combination of `rows` (width `cols`).
pub fn span(rows: &[Vector], cols: usize, q: u64) -> BTreeSet<Vector> {
    let mut set: BTreeSet<Vector> = BTreeSet::new();
    set.insert(vec![0; cols]);
    for r in rows {
        let mut next = BTreeSet::new();
        for s in &set {
            for a in 0..q {
                next.insert(
                    s.iter()
                        .zip(r)
                        .map(|(&x, &y)| (x + a * y) % q)
                        .collect::<Vector>(),
                );
            }
        }
        set = next;
    }
    set
}

pub fn all_vectors(len: usize, q: u64) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn vec_mat(x: &[u64], a: &[Vector], cols: usize, q: u64) -> Vector {
    let mut out = vec![0; cols];
    for (xi, row) in x.iter().zip(a) {
        for (o, &r) in out.iter_mut().zip(row) {
            *o = (*o + xi * r) % q;
        }
    }
    out
}

/// `{x : x·A = 0}` by enumeration over all `x ∈ (Z/q)^{rows}`.
pub fn left_kernel(a: &[Vector], cols: usize, q: u64) -> BTreeSet<Vector> {
    all_vectors(a.len(), q)
        .into_iter()
        .filter(|x| vec_mat(x, a, cols, q).iter().all(|&v| v == 0))
        .collect()
}

/// Exponents (descending) of `(Z/q)^cols / span(rows)`, read off from the
/// sizes of the `p^k`-torsion subgroups of the quotient.
pub fn quotient_shape(rows: &[Vector], cols: usize, p: u64, n: u32) -> Vec<u32> {
    let q = p.pow(n);
    let s = span(rows, cols, q);
    let log = |mut x: usize| {
        let mut e = 0;
        while x > 1 {
            assert_eq!(x % p as usize, 0);
            x /= p as usize;
            e += 1;
        }
        e
    };
    let all = all_vectors(cols, q);
    // c_k = log_p |Q[p^k]| = Σ_j min(λ_j, k)
    let mut c = vec![0u32; n as usize + 1];
    for k in 1..=n {
        let pk = p.pow(k);
        let count = all
            .iter()
            .filter(|y| s.contains(&y.iter().map(|&v| v * pk % q).collect::<Vector>()))
            .count();
        assert_eq!(count % s.len(), 0);
        c[k as usize] = log(count / s.len());
    }
    let mut exps = Vec::new();
    for k in 1..=n as usize {
        // #{j : λ_j ≥ k} - #{j : λ_j ≥ k+1} coordinates have exponent exactly k
        let ge_k = c[k] - c[k - 1];
        let ge_k1 = if k < n as usize { c[k + 1] - c[k] } else { 0 };
        for _ in 0..(ge_k - ge_k1) {
            exps.push(k as u32);
        }
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps
}

/// All `(x_1, …, x_r)` with `0 ≤ x_j < moduli[j]`.
pub fn all_elements(moduli: &[u64]) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// `x · A` reduced coordinatewise by `moduli`.
fn act(x: &[u64], a: &[Vector], moduli: &[u64]) -> Vector {
    let mut out = vec![0; moduli.len()];
    for (xi, row) in x.iter().zip(a) {
        for (o, (&r, &m)) in out.iter_mut().zip(row.iter().zip(moduli)) {
            *o = (*o + xi * r) % m;
        }
    }
    out
}

/// Every equivariant map between two modules given by per-generator action
/// matrices, as the list of basis images. Enumerates all tuples of images
/// with the right annihilators.
pub fn equivariant_maps(
    src: &[u64],
    tgt: &[u64],
    src_action: &[Vec<Vector>],
    tgt_action: &[Vec<Vector>],
) -> BTreeSet<Vec<Vector>> {
    let targets = all_elements(tgt);
    let candidates: Vec<Vec<Vector>> = src
        .iter()
        .map(|&q| {
            targets
                .iter()
                .filter(|y| y.iter().zip(tgt).all(|(&a, &m)| (a * q) % m == 0))
                .cloned()
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; src.len()];
    loop {
        let f: Vec<Vector> = idx
            .iter()
            .zip(&candidates)
            .map(|(&k, c)| c[k].clone())
            .collect();
        let ok = src_action
            .iter()
            .zip(tgt_action)
            .all(|(rm, rn)| (0..src.len()).all(|i| act(&rm[i], &f, tgt) == act(&f[i], rn, tgt)));
        if ok {
            out.insert(f);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return out;
        }
    }
}

/// The additive group generated by the given maps (basis-image lists).
pub fn additive_closure(gens: &[Vec<Vector>], tgt: &[u64], rows: usize) -> BTreeSet<Vec<Vector>> {
    let zero = vec![vec![0; tgt.len()]; rows];
    let mut seen = BTreeSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(f) = frontier.pop() {
        for g in gens {
            let h: Vec<Vector> = f
                .iter()
                .zip(g)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .zip(tgt)
                        .map(|((&x, &y), &m)| (x + y) % m)
                        .collect()
                })
                .collect();
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen
}
