//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Exactness everywhere; an inconclusive search counts as a failure.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strel_cli::report::Status;
use strel_cli::suites::{find_suite, run_suites, Search, Setting};
use strel_core::chainring::{
    cokernel_shape, howell_form, in_row_span, kernel, solve, RMatrix, RingSpec,
};
use strel_core::group::FiniteGroup;
use strel_core::grouprep::*;
use strel_core::sample::random_module;
use strel_core::spectrum::support;

const SEED: u64 = 1;
const BUDGET: usize = 512;
const SEARCH: Search = Search {
    seed: SEED,
    budget: BUDGET,
};

/// The six `(p, n, |G|)` settings used by the structural criteria.
const STRUCTURAL_SET: [(u64, u32); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn bad(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn cyclic(p: u64, n: u32) -> (RingSpec, Arc<FiniteGroup>) {
    (
        RingSpec::new(p, n).unwrap(),
        Arc::new(FiniteGroup::cyclic(p as usize).unwrap()),
    )
}

/// Runs a CLI suite on its default settings; passes iff every report passes.
fn suite(id: &str, settings: Option<Vec<Setting>>) -> Outcome {
    let s = find_suite(id).expect("suite exists");
    let settings = settings.unwrap_or_else(s.defaults);
    let jobs: Vec<_> = settings.into_iter().map(|x| (s, x)).collect();
    let reports = run_suites(&jobs, SEARCH).expect("settings are valid");
    match reports.iter().find(|r| r.status != Status::Pass) {
        None => ok(format!("{} settings", reports.len())),
        Some(r) => bad(format!(
            "{:?} at {}: {}",
            r.status,
            r.params.text(),
            r.witness
        )),
    }
}

fn within(out: Outcome, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    match limit {
        Some(l) if elapsed > l => bad(format!("{} but took {:.2?} > {:?}", out.detail, elapsed, l)),
        _ => out,
    }
}

fn c1_base_change_w() -> Outcome {
    for (p, n) in STRUCTURAL_SET {
        let (r, g) = cyclic(p, n);
        let bc = base_change(&w_module(r, &g, n).unwrap(), n - 1).unwrap();
        let a = regular(r, &g, n - 1).unwrap();
        match is_isomorphic(&bc, &a, SEED, BUDGET) {
            IsoVerdict::Yes(f) if f.is_bijective() => {}
            v => return bad(format!("p={p} n={n}: {v:?}")),
        }
    }
    ok("6 settings, bijective equivariant witnesses")
}

fn c3_w_tensor() -> Outcome {
    let mut pairs = 0;
    for (p, n) in STRUCTURAL_SET {
        let (r, g) = cyclic(p, n);
        for i in 1..=n {
            let expected = w_tensor_expected(r, &g, i).unwrap();
            for j in i + 1..=n {
                let t =
                    tensor_g(&w_module(r, &g, i).unwrap(), &w_module(r, &g, j).unwrap()).unwrap();
                match is_isomorphic(&t, &expected, SEED, BUDGET) {
                    IsoVerdict::Yes(f) if f.is_bijective() => pairs += 1,
                    v => return bad(format!("p={p} n={n} (i,j)=({i},{j}): {v:?}")),
                }
            }
        }
    }
    ok(format!("{pairs} pairs"))
}

fn c8_spectrum() -> Outcome {
    let mut checks = Vec::new();
    for id in ["points", "w-support", "orthogonality"] {
        let o = suite(id, None);
        if !o.pass {
            return bad(format!("{id}: {}", o.detail));
        }
        checks.push(id);
    }
    ok(format!("suites {}", checks.join(", ")))
}

fn c9_tensor_support() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut proper = 0;
    let mut total = 0;
    for (p, n) in STRUCTURAL_SET {
        let (r, g) = cyclic(p, n);
        let rank = if p == 5 { 5 } else { 4 };
        for _ in 0..50 {
            let x = random_module(r, &g, n, rank, &mut rng);
            let y = random_module(r, &g, n, rank, &mut rng);
            let (sx, sy) = (support(&x).members, support(&y).members);
            let sxy = support(&tensor_g(&x, &y).unwrap()).members;
            let meet: BTreeSet<u32> = sx.intersection(&sy).copied().collect();
            if sxy != meet {
                return bad(format!("p={p} n={n}: {sxy:?} vs {meet:?}"));
            }
            if !meet.is_empty() && meet.len() < n as usize {
                proper += 1;
            }
            total += 1;
        }
    }
    // the sample must exercise supports strictly between empty and full
    if proper < 20 {
        return bad(format!(
            "only {proper} pairs with a proper nonempty intersection"
        ));
    }
    ok(format!(
        "{total} pairs, {proper} with proper nonempty intersection"
    ))
}

fn check_matrix(a: &RMatrix, n: u32) -> Result<(), String> {
    let q = a.ring().modulus();
    let rows = a.row_vecs();
    let span = oracle::span(&rows, a.cols(), q);
    let h = howell_form(a);
    if oracle::span(&h.row_vecs(), a.cols(), q) != span {
        return Err(format!("howell span {a:?}"));
    }
    if oracle::span(&kernel(a).row_vecs(), a.rows(), q) != oracle::left_kernel(&rows, a.cols(), q) {
        return Err(format!("kernel {a:?}"));
    }
    for b in oracle::all_vectors(a.cols(), q) {
        let solvable = match solve(a, &b) {
            Some(x) => {
                if a.vec_mul(&x) != b {
                    return Err(format!("solve {a:?}"));
                }
                true
            }
            None => false,
        };
        if solvable != span.contains(&b) || in_row_span(&h, &b) != solvable {
            return Err(format!("membership {a:?} {b:?}"));
        }
    }
    if cokernel_shape(a).shape.exponents()
        != oracle::quotient_shape(&rows, a.cols(), a.ring().p(), n).as_slice()
    {
        return Err(format!("cokernel {a:?}"));
    }
    Ok(())
}

fn hom_oracle() -> Result<usize, String> {
    let mut checked = 0;
    let settings: Vec<(u64, u32, FiniteGroup)> = vec![
        (2, 2, FiniteGroup::cyclic(2).unwrap()),
        (2, 3, FiniteGroup::cyclic(2).unwrap()),
        (3, 2, FiniteGroup::cyclic(3).unwrap()),
        (2, 1, FiniteGroup::cyclic(4).unwrap()),
        (2, 1, FiniteGroup::symmetric3()),
    ];
    for (p, n, g) in settings {
        let r = RingSpec::new(p, n).unwrap();
        let g = Arc::new(g);
        let mut mods = Vec::new();
        for i in 1..=n {
            mods.push(trivial(r, &g, i).unwrap());
            mods.push(regular(r, &g, i).unwrap());
            mods.push(w_module(r, &g, i).unwrap());
        }
        let moduli =
            |m: &GModule| -> Vec<u64> { (0..m.rank()).map(|j| m.shape().modulus(j)).collect() };
        let actions = |m: &GModule| -> Vec<Vec<Vec<u64>>> {
            m.group()
                .generators()
                .iter()
                .map(|&s| m.action(s).matrix().row_vecs())
                .collect()
        };
        for a in &mods {
            for b in &mods {
                let size = |m: &GModule| (p as f64).powi(m.shape().length() as i32);
                let hom_r: u32 = a
                    .shape()
                    .exponents()
                    .iter()
                    .flat_map(|&x| b.shape().exponents().iter().map(move |&y| x.min(y)))
                    .sum();
                if size(a) > 64.0 || size(b) > 64.0 || (p as f64).powi(hom_r as i32) > 1e5 {
                    continue;
                }
                let expected =
                    oracle::equivariant_maps(&moduli(a), &moduli(b), &actions(a), &actions(b));
                let gens: Vec<_> = hom_space(a, b)
                    .iter()
                    .map(|h| h.underlying().matrix().row_vecs())
                    .collect();
                if oracle::additive_closure(&gens, &moduli(b), a.rank()) != expected {
                    return Err(format!("hom_space mismatch {a:?} -> {b:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn c11_oracles() -> Outcome {
    let mut count = 0;
    for n in [2u32, 3] {
        let r = RingSpec::new(2, n).unwrap();
        for (rows, cols) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for e in oracle::all_vectors(rows * cols, r.modulus()) {
                let a = RMatrix::from_fn(r, rows, cols, |i, j| e[i * cols + j]);
                if let Err(e) = check_matrix(&a, n) {
                    return bad(e);
                }
                count += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (p, n) in [(2u64, 2u32), (2, 3), (3, 1), (3, 2)] {
        let r = RingSpec::new(p, n).unwrap();
        for _ in 0..40 {
            let a = RMatrix::from_fn(r, 3, 3, |_, _| rng.gen_range(0..r.modulus()));
            if let Err(e) = check_matrix(&a, n) {
                return bad(e);
            }
            count += 1;
        }
    }
    match hom_oracle() {
        Ok(pairs) => ok(format!("{count} matrices, {pairs} hom spaces")),
        Err(e) => bad(e),
    }
}

fn machine_run(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = strel_cli::run(args.iter().copied(), &mut out, &mut err);
    (code, out)
}

fn c12_determinism() -> Outcome {
    let args = [
        "strel", "verify", "--suite", "all", "--seed", "7", "--format", "machine",
    ];
    let (c1, a) = machine_run(&args);
    let (c2, b) = machine_run(&args);
    if c1 != 0 || c2 != 0 {
        return bad(format!("exit codes {c1}, {c2}"));
    }
    if a != b {
        return bad("machine reports differ between runs");
    }
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    let cons = [
        "strel",
        "construct",
        "W",
        "--p",
        "3",
        "--n",
        "3",
        "--i",
        "2",
    ];
    if machine_run(&cons).1 != machine_run(&cons).1 {
        return bad("construct output differs between runs");
    }
    ok(format!("{lines} report lines byte-identical"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<u64>);
    let criteria: Vec<Criterion> = vec![
        ("base change of W_n is A_{n-1}", c1_base_change_w, Some(5)),
        (
            "magic sequence exact and R-split",
            || suite("magic-sequence", None),
            Some(5),
        ),
        ("W_i ⊗ W_j decomposition", c3_w_tensor, Some(30)),
        (
            "induced modules are weakly projective",
            || suite("induction", None),
            None,
        ),
        (
            "cone of 1_{n-1} → W_n is Σ1_n",
            || suite("w-triangle", None),
            None,
        ),
        (
            "F recovers X after P_{n-1}",
            || suite("functor-f", None),
            None,
        ),
        ("P_{n-1} is monoidal", || suite("mult-monoidal", None), None),
        ("n points with singleton W supports", c8_spectrum, Some(60)),
        ("tensor support formula", c9_tensor_support, None),
        (
            "support of level-m modules",
            || suite("base-change-support", None),
            None,
        ),
        ("oracle agreement", c11_oracles, None),
        ("determinism of machine reports", c12_determinism, None),
    ];
    let mut failures = 0;
    for (k, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let out = within(out, elapsed, limit.map(Duration::from_secs));
        if !out.pass {
            failures += 1;
        }
        println!(
            "criterion {:2} {} : {} ({}; {:.2?})",
            k + 1,
            if out.pass { "PASS" } else { "FAIL" },
            name,
            out.detail,
            elapsed
        );
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
