//! Verification suites. Each suite runs on one parameter setting and
//! produces one report; `run_suites` fans the settings out over rayon and
//! returns reports in suite-then-setting order.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use strel_core::chainring::RingSpec;
use strel_core::group::FiniteGroup;
use strel_core::grouprep::{
    base_change, functor_f, induce, is_isomorphic, magic_sequence, monoidal_comparison,
    mult_functor, regular, tensor_g, trivial, w_module, w_tensor_expected, GModule, IsoVerdict,
};
use strel_core::rnmod::{RnHom, Shape};
use strel_core::sample::{random_module, random_two_generator};
use strel_core::spectrum::{in_prime, spc_points, support, SupportSet};
use strel_core::stable::{
    check_r_split, cone, is_stably_iso, is_trace_preimage, is_weakly_projective, stably_isomorphic,
    suspend, StableIsoVerdict, StableVerdict,
};

use crate::error::CliError;
use crate::format::ModuleFile;
use crate::report::{CheckReport, Params, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Setting {
    pub p: u64,
    pub n: u32,
    pub group: String,
}

impl Setting {
    pub fn new(p: u64, n: u32, group: impl Into<String>) -> Self {
        Setting {
            p,
            n,
            group: group.into(),
        }
    }

    fn cyclic(p: u64, n: u32) -> Self {
        Setting::new(p, n, format!("cyclic:{p}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Search {
    pub seed: u64,
    pub budget: usize,
}

/// Everything a suite needs for one setting.
pub struct Ctx {
    pub ring: RingSpec,
    pub group: Arc<FiniteGroup>,
    pub setting: Setting,
    pub search: Search,
    rng_seed: u64,
}

impl Ctx {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }

    fn n(&self) -> u32 {
        self.ring.n()
    }

    fn params(&self, indices: Vec<u32>) -> Params {
        Params {
            p: self.setting.p,
            n: self.setting.n,
            group: self.setting.group.clone(),
            indices,
        }
    }
}

/// A suite result before timing and labelling.
struct Outcome {
    status: Status,
    witness: String,
    indices: Vec<u32>,
    counterexample: Option<Value>,
}

impl Outcome {
    fn pass(witness: impl Into<String>) -> Self {
        Outcome {
            status: Status::Pass,
            witness: witness.into(),
            indices: Vec::new(),
            counterexample: None,
        }
    }

    fn fail(witness: impl Into<String>, modules: &[(&str, &GModule)]) -> Self {
        Outcome {
            status: Status::Fail,
            witness: witness.into(),
            indices: Vec::new(),
            counterexample: Some(modules_value(modules)),
        }
    }

    fn unknown(witness: impl Into<String>, modules: &[(&str, &GModule)]) -> Self {
        Outcome {
            status: Status::Unknown,
            ..Outcome::fail(witness, modules)
        }
    }

    fn with_indices(mut self, indices: Vec<u32>) -> Self {
        self.indices = indices;
        self
    }
}

fn modules_value(modules: &[(&str, &GModule)]) -> Value {
    let mut map = serde_json::Map::new();
    for (name, m) in modules {
        map.insert(
            (*name).to_string(),
            serde_json::to_value(ModuleFile::from_module(m)).expect("module file serializes"),
        );
    }
    Value::Object(map)
}

type SuiteFn = fn(&Ctx) -> Result<Outcome, CliError>;

pub struct Suite {
    pub id: &'static str,
    pub claim: &'static str,
    /// Only meaningful for a cyclic group of order `p`.
    pub needs_cyclic_prime: bool,
    pub defaults: fn() -> Vec<Setting>,
    run: SuiteFn,
}

fn structural_settings() -> Vec<Setting> {
    vec![
        Setting::cyclic(2, 2),
        Setting::cyclic(2, 3),
        Setting::cyclic(2, 4),
        Setting::cyclic(3, 2),
        Setting::cyclic(3, 3),
        Setting::cyclic(5, 2),
    ]
}

fn spectrum_settings() -> Vec<Setting> {
    let mut v: Vec<Setting> = (1..=4).map(|n| Setting::cyclic(2, n)).collect();
    v.extend((1..=3).map(|n| Setting::cyclic(3, n)));
    v.extend((1..=2).map(|n| Setting::cyclic(5, n)));
    v
}

fn functor_settings() -> Vec<Setting> {
    vec![
        Setting::cyclic(2, 2),
        Setting::cyclic(2, 3),
        Setting::cyclic(3, 2),
    ]
}

fn tensor_settings() -> Vec<Setting> {
    vec![
        Setting::cyclic(2, 2),
        Setting::cyclic(2, 3),
        Setting::cyclic(2, 4),
        Setting::cyclic(3, 2),
        Setting::cyclic(3, 3),
        Setting::cyclic(5, 2),
    ]
}

pub const SUITES: &[Suite] = &[
    Suite {
        id: "induction",
        claim: "induce(R_i) ≅ A_i and every induced module is weakly projective",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_induction,
    },
    Suite {
        id: "base-change-w",
        claim: "W_n ⊗ R_{n-1} ≅ A_{n-1}",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_base_change_w,
    },
    Suite {
        id: "magic-sequence",
        claim: "0 → R_{m-1} → W_m → Q → 0 is exact and R-split, Q free of rank |G|-1",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_magic_sequence,
    },
    Suite {
        id: "w-tensor",
        claim: "W_i ⊗ W_j ≅ A_{i-1} ⊕ A_i^{|G|-1} for i < j",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_w_tensor,
    },
    Suite {
        id: "w-triangle",
        claim: "cone(1_{n-1} → W_n) ≅ Σ1_n stably",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_w_triangle,
    },
    Suite {
        id: "functor-f",
        claim: "P_{n-1}(F(X)) ≅ X stably and F(X) ⊗ R_{n-1} is weakly projective",
        needs_cyclic_prime: false,
        defaults: functor_settings,
        run: suite_functor_f,
    },
    Suite {
        id: "mult-monoidal",
        claim: "P_{n-1}(M) ⊗ P_{n-1}(N) → P_{n-1}(M ⊗ N) is an isomorphism",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_mult_monoidal,
    },
    Suite {
        id: "orthogonality",
        claim: "W_i ⊗ W_j is weakly projective for i ≠ j",
        needs_cyclic_prime: false,
        defaults: structural_settings,
        run: suite_orthogonality,
    },
    Suite {
        id: "points",
        claim: "the spectrum has n points P_{1,n}, …, P_{n,n}",
        needs_cyclic_prime: true,
        defaults: spectrum_settings,
        run: suite_points,
    },
    Suite {
        id: "w-support",
        claim: "supp(W_i) = {P_{i,n}}",
        needs_cyclic_prime: true,
        defaults: spectrum_settings,
        run: suite_w_support,
    },
    Suite {
        id: "base-change-support",
        claim: "supp of a level-m module lies in {1, …, m}, with equality for 1_m",
        needs_cyclic_prime: true,
        defaults: spectrum_settings,
        run: suite_base_change_support,
    },
    Suite {
        id: "tensor-support",
        claim: "supp(X ⊗ Y) = supp(X) ∩ supp(Y)",
        needs_cyclic_prime: true,
        defaults: tensor_settings,
        run: suite_tensor_support,
    },
];

pub fn find_suite(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

pub fn context(suite: &Suite, setting: &Setting, search: Search) -> Result<Ctx, CliError> {
    let ring = RingSpec::new(setting.p, setting.n)?;
    let group =
        Arc::new(FiniteGroup::parse(&setting.group).map_err(|e| CliError::Parse(e.to_string()))?);
    if suite.needs_cyclic_prime && !group.is_cyclic_of_prime_order(setting.p) {
        return Err(CliError::Constraint(format!(
            "suite {} needs a cyclic group of order {}",
            suite.id, setting.p
        )));
    }
    let rng_seed = search.seed
        ^ fnv(suite.id)
        ^ fnv(&setting.group).rotate_left(17)
        ^ (setting.p << 40)
        ^ (u64::from(setting.n) << 32);
    Ok(Ctx {
        ring,
        group,
        setting: setting.clone(),
        search,
        rng_seed,
    })
}

pub fn run_one(suite: &Suite, ctx: &Ctx) -> CheckReport {
    let start = Instant::now();
    let out = match (suite.run)(ctx) {
        Ok(o) => o,
        Err(e) => Outcome {
            status: Status::Fail,
            witness: e.to_string(),
            indices: Vec::new(),
            counterexample: None,
        },
    };
    CheckReport {
        check: suite.id.to_string(),
        claim: suite.claim.to_string(),
        params: ctx.params(out.indices),
        status: out.status,
        witness: out.witness,
        counterexample: out.counterexample,
        wall: start.elapsed(),
    }
}

/// Runs every `(suite, setting)` pair in parallel; reports come back in input order.
pub fn run_suites(
    jobs: &[(&'static Suite, Setting)],
    search: Search,
) -> Result<Vec<CheckReport>, CliError> {
    let ctxs = jobs
        .iter()
        .map(|(s, set)| context(s, set, search).map(|c| (*s, c)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ctxs.par_iter().map(|(s, c)| run_one(s, c)).collect())
}

fn shape_text(m: &GModule) -> String {
    format!("{:?}", m.shape().exponents())
}

fn set_text(s: &SupportSet) -> String {
    let items: Vec<String> = s.members.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// `Ok(witness)` on a verified isomorphism.
fn iso(a: &GModule, b: &GModule, search: Search) -> Result<String, (Status, String)> {
    match is_isomorphic(a, b, search.seed, search.budget) {
        IsoVerdict::Yes(f) if f.is_bijective() => Ok(shape_text(a)),
        IsoVerdict::Yes(_) => Err((Status::Fail, "witness is not bijective".into())),
        IsoVerdict::No(why) => Err((Status::Fail, why)),
        IsoVerdict::Unknown => Err((Status::Unknown, "isomorphism search exhausted".into())),
    }
}

fn stable_iso(a: &GModule, b: &GModule, search: Search) -> Result<(), (Status, String)> {
    match stably_isomorphic(a, b, search.seed, search.budget) {
        StableIsoVerdict::Yes { witness, .. } if is_stably_iso(&witness) => Ok(()),
        StableIsoVerdict::Yes { .. } => {
            Err((Status::Fail, "witness cone is not weakly projective".into()))
        }
        StableIsoVerdict::No(why) => Err((Status::Fail, why)),
        StableIsoVerdict::Unknown => Err((
            Status::Unknown,
            "stable isomorphism search exhausted".into(),
        )),
    }
}

/// Weak projectivity with the trace witness re-checked.
fn verified_wp(m: &GModule) -> bool {
    match is_weakly_projective(m) {
        StableVerdict::WeaklyProjective { trace_preimage } => is_trace_preimage(m, &trace_preimage),
        StableVerdict::NotWeaklyProjective(_) => false,
    }
}

fn failed(status: Status, what: String, modules: &[(&str, &GModule)]) -> Outcome {
    match status {
        Status::Unknown => Outcome::unknown(what, modules),
        _ => Outcome::fail(what, modules),
    }
}

fn suite_induction(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    for i in 1..=n {
        let ind = induce(c.ring, &c.group, n, &Shape::uniform(c.ring, i, 1)?)?;
        let a = regular(c.ring, &c.group, i)?;
        if let Err((st, why)) = iso(&ind, &a, c.search) {
            return Ok(failed(
                st,
                format!("induce(R_{i}): {why}"),
                &[("induced", &ind), ("regular", &a)],
            )
            .with_indices(vec![i]));
        }
    }
    let mut shapes: Vec<Vec<u32>> = (1..=n).map(|i| vec![i]).collect();
    shapes.push((1..=n).rev().collect());
    shapes.push(vec![n, 1]);
    for e in &shapes {
        let shape = Shape::from_unsorted(c.ring, e)?.0;
        let ind = induce(c.ring, &c.group, n, &shape)?;
        if !verified_wp(&ind) {
            return Ok(Outcome::fail(
                format!("induce({e:?}) has no verified trace preimage"),
                &[("induced", &ind)],
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{n} isomorphisms, {} trace witnesses verified",
        shapes.len()
    )))
}

fn suite_base_change_w(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let w = w_module(c.ring, &c.group, n)?;
    let bc = base_change(&w, n - 1)?;
    let a = regular(c.ring, &c.group, n - 1)?;
    Ok(match iso(&bc, &a, c.search) {
        Ok(shape) => Outcome::pass(format!("verified bijection on shape {shape}")),
        Err((st, why)) => failed(st, why, &[("base_change", &bc), ("regular", &a)]),
    })
}

fn suite_magic_sequence(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let order = c.group.order();
    let mut levels = Vec::new();
    for m in 2..=n {
        let seq = magic_sequence(c.ring, &c.group, m)?;
        let Some(ret) = check_r_split(&seq) else {
            return Ok(
                Outcome::fail(format!("m={m}: no R-retraction"), &[("middle", seq.mid())])
                    .with_indices(vec![m]),
            );
        };
        if seq.i.underlying().then(&ret) != RnHom::identity(seq.sub().shape()) {
            return Ok(Outcome::fail(
                format!("m={m}: retraction check failed"),
                &[("middle", seq.mid())],
            ));
        }
        let one = trivial(c.ring, &c.group, m - 1)?;
        let w = w_module(c.ring, &c.group, m)?;
        for (name, a, b) in [("sub", seq.sub(), &one), ("middle", seq.mid(), &w)] {
            if let Err((st, why)) = iso(a, b, c.search) {
                return Ok(
                    failed(st, format!("m={m}: {name}: {why}"), &[(name, a)]).with_indices(vec![m])
                );
            }
        }
        let q = seq.quot().shape();
        if q.rank() != order - 1 || q.exponents().iter().any(|&e| e != m) {
            return Ok(Outcome::fail(
                format!(
                    "m={m}: quotient shape {:?} is not free of rank {}",
                    q.exponents(),
                    order - 1
                ),
                &[("quotient", seq.quot())],
            ));
        }
        levels.push(m.to_string());
    }
    Ok(Outcome::pass(format!(
        "R-split witnesses verified for m = {}",
        if levels.is_empty() {
            "(none)".to_string()
        } else {
            levels.join(",")
        }
    )))
}

fn suite_w_tensor(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let ws: Vec<GModule> = (1..=n)
        .map(|i| w_module(c.ring, &c.group, i))
        .collect::<Result<_, _>>()?;
    let mut pairs = 0;
    for i in 1..=n {
        let expected = w_tensor_expected(c.ring, &c.group, i)?;
        for j in i + 1..=n {
            let t = tensor_g(&ws[i as usize - 1], &ws[j as usize - 1])?;
            if let Err((st, why)) = iso(&t, &expected, c.search) {
                return Ok(failed(
                    st,
                    format!("(i,j)=({i},{j}): {why}"),
                    &[("tensor", &t), ("expected", &expected)],
                )
                .with_indices(vec![i, j]));
            }
            pairs += 1;
        }
    }
    Ok(Outcome::pass(format!("{pairs} pairs checked")))
}

fn suite_w_triangle(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    if n < 2 {
        return Ok(Outcome::pass("vacuous for n = 1"));
    }
    let seq = magic_sequence(c.ring, &c.group, n)?;
    let cn = cone(&seq.i).module;
    let s1 = suspend(&trivial(c.ring, &c.group, n)?);
    Ok(match stable_iso(&cn, &s1, c.search) {
        Ok(()) => Outcome::pass(format!(
            "cone shape {}, stable iso witness verified",
            shape_text(&cn)
        )),
        Err((st, why)) => failed(st, why, &[("cone", &cn), ("suspension", &s1)]),
    })
}

fn suite_functor_f(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let k = trivial(c.ring, &c.group, 1)?;
    let sk = suspend(&k);
    let mut xs: Vec<(String, GModule)> = vec![
        ("k".into(), k.clone()),
        ("Σk".into(), sk.clone()),
        ("Σ²k".into(), suspend(&sk)),
        ("A_1".into(), regular(c.ring, &c.group, 1)?),
    ];
    let mut rng = c.rng();
    for t in 0..3 {
        xs.push((
            format!("random{t}"),
            random_two_generator(c.ring, &c.group, &mut rng),
        ));
    }
    for (name, x) in &xs {
        let fx = functor_f(x)?;
        let back = mult_functor(&fx, n - 1)?;
        if let Err((st, why)) = stable_iso(&back, x, c.search) {
            return Ok(failed(
                st,
                format!("{name}: {why}"),
                &[("x", x), ("f_x", &fx)],
            ));
        }
        let bc = base_change(&fx, n - 1)?;
        if !verified_wp(&bc) {
            return Ok(Outcome::fail(
                format!("{name}: F(X) ⊗ R_{{n-1}} is not weakly projective"),
                &[("x", x), ("f_x", &fx)],
            ));
        }
    }
    Ok(Outcome::pass(format!("{} modules checked", xs.len())))
}

fn max_rank(c: &Ctx) -> usize {
    if c.group.order() > 3 {
        5
    } else {
        4
    }
}

fn suite_mult_monoidal(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let mut rng = c.rng();
    let pairs = 25;
    for t in 0..pairs {
        let a = random_module(c.ring, &c.group, n, max_rank(c), &mut rng);
        let b = random_module(c.ring, &c.group, n, max_rank(c), &mut rng);
        let cmp = monoidal_comparison(&a, &b, n - 1)?;
        if !cmp.is_bijective() {
            return Ok(Outcome::fail(
                format!("pair {t}: comparison is not bijective"),
                &[("m", &a), ("n", &b)],
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{pairs} random pairs, comparison maps bijective"
    )))
}

fn suite_orthogonality(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let ws: Vec<GModule> = (1..=n)
        .map(|i| w_module(c.ring, &c.group, i))
        .collect::<Result<_, _>>()?;
    let mut pairs = 0;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let t = tensor_g(&ws[i as usize - 1], &ws[j as usize - 1])?;
            if !verified_wp(&t) {
                return Ok(Outcome::fail(
                    format!("W_{i} ⊗ W_{j} is not weakly projective"),
                    &[("tensor", &t)],
                )
                .with_indices(vec![i, j]));
            }
            pairs += 1;
        }
    }
    Ok(Outcome::pass(format!(
        "{pairs} ordered pairs, trace witnesses verified"
    )))
}

fn w_supports(c: &Ctx) -> Result<Result<Vec<String>, Outcome>, CliError> {
    let n = c.n();
    let mut shown = Vec::new();
    for i in 1..=n {
        let w = w_module(c.ring, &c.group, i)?;
        let s = support(&w);
        if s.members != BTreeSet::from([i]) {
            return Ok(Err(Outcome::fail(
                format!("supp(W_{i}) = {}", set_text(&s)),
                &[("w", &w)],
            )
            .with_indices(vec![i])));
        }
        for j in 1..=n {
            if in_prime(&w, j)? == (i == j) {
                return Ok(Err(Outcome::fail(
                    format!("membership of W_{i} in P_{j} is wrong"),
                    &[("w", &w)],
                )
                .with_indices(vec![i, j])));
            }
        }
        shown.push(set_text(&s));
    }
    Ok(Ok(shown))
}

fn suite_points(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let pts = spc_points(c.ring, &c.group)?;
    if pts.primes.len() != n as usize {
        return Ok(Outcome::fail(
            format!("{} descriptors", pts.primes.len()),
            &[],
        ));
    }
    if !pts.all_orthogonal() {
        return Ok(Outcome::fail(
            "some W_i ⊗ W_j is not weakly projective",
            &[],
        ));
    }
    let shown = match w_supports(c)? {
        Ok(s) => s,
        Err(o) => return Ok(o),
    };
    let one = trivial(c.ring, &c.group, n)?;
    let s1 = support(&one);
    if s1.members != (1..=n).collect() {
        return Ok(Outcome::fail(
            format!("supp(1_n) = {}", set_text(&s1)),
            &[("unit", &one)],
        ));
    }
    let a = regular(c.ring, &c.group, n)?;
    if !support(&a).is_empty() {
        return Ok(Outcome::fail("supp(A_n) is not empty", &[("regular", &a)]));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("W_{i}")).collect();
    Ok(Outcome::pass(format!(
        "{n} points, supports of {} = {}",
        names.join(","),
        shown.join(",")
    )))
}

fn suite_w_support(c: &Ctx) -> Result<Outcome, CliError> {
    Ok(match w_supports(c)? {
        Ok(shown) => Outcome::pass(format!("supports {}", shown.join(","))),
        Err(o) => o,
    })
}

fn suite_base_change_support(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let mut rng = c.rng();
    let per_level = 5;
    for m in 1..n {
        let allowed: BTreeSet<u32> = (1..=m).collect();
        let one = trivial(c.ring, &c.group, m)?;
        let s = support(&one);
        if s.members != allowed {
            return Ok(
                Outcome::fail(format!("supp(1_{m}) = {}", set_text(&s)), &[("unit", &one)])
                    .with_indices(vec![m]),
            );
        }
        for _ in 0..per_level {
            let x = random_module(c.ring, &c.group, m, max_rank(c), &mut rng);
            let s = support(&x);
            if !s.members.is_subset(&allowed) {
                return Ok(Outcome::fail(
                    format!("level {m} module with support {}", set_text(&s)),
                    &[("x", &x)],
                )
                .with_indices(vec![m]));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} levels, {} random modules",
        n - 1,
        (n - 1) as usize * per_level
    )))
}

fn suite_tensor_support(c: &Ctx) -> Result<Outcome, CliError> {
    let n = c.n();
    let mut rng = c.rng();
    let pairs = 50;
    let rank = if c.group.order() > 3 { 5 } else { 4 };
    for t in 0..pairs {
        let x = random_module(c.ring, &c.group, n, rank, &mut rng);
        let y = random_module(c.ring, &c.group, n, rank, &mut rng);
        let (sx, sy) = (support(&x), support(&y));
        let sxy = support(&tensor_g(&x, &y)?);
        let meet: BTreeSet<u32> = sx.members.intersection(&sy.members).copied().collect();
        if sxy.members != meet {
            return Ok(Outcome::fail(
                format!(
                    "pair {t}: supp(X⊗Y) = {} but supp(X) ∩ supp(Y) = {:?}",
                    set_text(&sxy),
                    meet
                ),
                &[("x", &x), ("y", &y)],
            ));
        }
    }
    Ok(Outcome::pass(format!("{pairs} random pairs")))
}

/// Machine form of a support set for the `support` verb.
pub fn support_json(s: &SupportSet) -> Value {
    json!({
        "n": s.n,
        "members": s.members.iter().collect::<Vec<_>>(),
        "kind": format!("{:?}", s.kind).to_lowercase(),
    })
}
