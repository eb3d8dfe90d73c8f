use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use strel_core::chainring::RingSpec;
use strel_core::group::FiniteGroup;
use strel_core::grouprep::{
    base_change, dual_g, functor_f, hom_space, induce, is_isomorphic, mult_functor, regular,
    tensor_g, trivial, w_module, GModule, IsoVerdict,
};
use strel_core::rnmod::Shape;
use strel_core::sample::random_hom;
use strel_core::spectrum::{component_vanishes, in_prime, spc_points, support};
use strel_core::stable::{
    cone, desuspend, is_weakly_projective, stably_isomorphic, suspend, StableIsoVerdict,
    StableVerdict,
};

use crate::error::CliError;
use crate::format::{read_module, to_json, write_module};
use crate::report::Status;
use crate::suites::{find_suite, run_suites, suite_ids, support_json, Search, Setting, SUITES};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_BUDGET: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "strel",
    version,
    about = "Exact computations in relative stable module categories over Z/p^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    /// `cyclic:m` or `symmetric:3`; defaults to `cyclic:p`.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a module and write it as a module file.
    Construct {
        /// trivial, regular, induce, W, tensor, dual, suspend, desuspend,
        /// cone, base-change, mult, F
        kind: String,
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Query modules: shape, wp, iso, stable-iso, hom, component, in-prime.
    Op {
        name: String,
        inputs: Vec<PathBuf>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Append wall times to text output.
        #[arg(long)]
        timings: bool,
    },
    /// Print the support of a module.
    Support { input: PathBuf },
    /// List the primes for a cyclic group of order p.
    Primes {
        #[command(flatten)]
        ring: RingArgs,
    },
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Construct {
            kind,
            inputs,
            ring,
            i,
            j: _,
            seed,
            out: path,
        } => {
            let m = construct(kind, inputs, ring, *i, *seed)?;
            match path {
                Some(p) => write_module(p, &m)?,
                None => out.write_all(to_json(&m).as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
        Command::Op {
            name,
            inputs,
            i,
            seed,
            budget,
        } => op(name, inputs, *i, *seed, *budget, cli.format, out),
        Command::Verify {
            suite,
            ring,
            seed,
            budget,
            timings,
        } => verify(suite, ring, *seed, *budget, *timings, cli.format, out),
        Command::Support { input } => {
            let m = read_module(input)?;
            let s = support(&m);
            match cli.format {
                Format::Text => writeln!(out, "{s}").map_err(io)?,
                Format::Machine => writeln!(out, "{}", support_json(&s)).map_err(io)?,
            }
            Ok(0)
        }
        Command::Primes { ring } => primes(ring, cli.format, out),
    }
}

fn setting_of(ring: &RingArgs) -> Result<Setting, CliError> {
    let (Some(p), Some(n)) = (ring.p, ring.n) else {
        return Err(CliError::Parse("--p and --n are required".into()));
    };
    let group = ring.group.clone().unwrap_or_else(|| format!("cyclic:{p}"));
    Ok(Setting::new(p, n, group))
}

fn ring_and_group(ring: &RingArgs) -> Result<(RingSpec, Arc<FiniteGroup>), CliError> {
    let s = setting_of(ring)?;
    let r = RingSpec::new(s.p, s.n)?;
    let g = FiniteGroup::parse(&s.group).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok((r, Arc::new(g)))
}

fn inputs_exact(inputs: &[PathBuf], k: usize, what: &str) -> Result<Vec<GModule>, CliError> {
    if inputs.len() != k {
        return Err(CliError::Parse(format!("{what} takes {k} module file(s)")));
    }
    inputs.iter().map(|p| read_module(p)).collect()
}

fn need(x: Option<u32>, flag: &str, what: &str) -> Result<u32, CliError> {
    x.ok_or_else(|| CliError::Parse(format!("{what} needs {flag}")))
}

fn construct(
    kind: &str,
    inputs: &[PathBuf],
    ring: &RingArgs,
    i: Option<u32>,
    seed: Option<u64>,
) -> Result<GModule, CliError> {
    Ok(match kind {
        "trivial" | "regular" | "W" | "w" => {
            let (r, g) = ring_and_group(ring)?;
            match kind {
                "trivial" => trivial(r, &g, i.unwrap_or(r.n()))?,
                "regular" => regular(r, &g, i.unwrap_or(r.n()))?,
                _ => w_module(r, &g, need(i, "--i", "W")?)?,
            }
        }
        "induce" => {
            if let [path] = inputs {
                let m = read_module(path)?;
                induce(m.ring(), m.group(), m.level(), m.shape())?
            } else {
                let (r, g) = ring_and_group(ring)?;
                let i = need(i, "--i", "induce")?;
                induce(r, &g, r.n(), &Shape::uniform(r, i, 1)?)?
            }
        }
        "tensor" => {
            let m = inputs_exact(inputs, 2, kind)?;
            tensor_g(&m[0], &m[1])?
        }
        "dual" => dual_g(&inputs_exact(inputs, 1, kind)?[0])?,
        "suspend" => suspend(&inputs_exact(inputs, 1, kind)?[0]),
        "desuspend" => desuspend(&inputs_exact(inputs, 1, kind)?[0]),
        "cone" => {
            let m = inputs_exact(inputs, 2, kind)?;
            if m[0].group() != m[1].group() || m[0].ring() != m[1].ring() {
                return Err(strel_core::Error::GroupMismatch.into());
            }
            let seed = seed.ok_or_else(|| CliError::Parse("cone needs --seed".into()))?;
            let f = random_hom(&m[0], &m[1], &mut ChaCha8Rng::seed_from_u64(seed));
            cone(&f).module
        }
        "base-change" => base_change(&inputs_exact(inputs, 1, kind)?[0], need(i, "--i", kind)?)?,
        "mult" => mult_functor(&inputs_exact(inputs, 1, kind)?[0], need(i, "--i", kind)?)?,
        "F" | "f" => functor_f(&inputs_exact(inputs, 1, kind)?[0])?,
        other => return Err(CliError::Parse(format!("unknown construction `{other}`"))),
    })
}

fn verdict_line(
    out: &mut dyn Write,
    format: Format,
    verdict: &str,
    detail: serde_json::Value,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            let extra = match &detail {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => format!(": {s}"),
                d => format!(": {d}"),
            };
            writeln!(out, "{verdict}{extra}")
        }
        Format::Machine => writeln!(out, "{}", json!({"verdict": verdict, "detail": detail})),
    }
    .map_err(io)
}

fn op(
    name: &str,
    inputs: &[PathBuf],
    i: Option<u32>,
    seed: Option<u64>,
    budget: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let seed_needed = || seed.ok_or_else(|| CliError::Parse(format!("{name} needs --seed")));
    match name {
        "shape" => {
            let m = &inputs_exact(inputs, 1, name)?[0];
            let d = json!({"level": m.level(), "shape": m.shape().exponents(), "group": m.group().describe()});
            verdict_line(out, format, "module", d)?;
            Ok(0)
        }
        "wp" => {
            let m = &inputs_exact(inputs, 1, name)?[0];
            match is_weakly_projective(m) {
                StableVerdict::WeaklyProjective { .. } => {
                    verdict_line(
                        out,
                        format,
                        "weakly-projective",
                        json!("trace preimage verified"),
                    )?;
                    Ok(0)
                }
                StableVerdict::NotWeaklyProjective(why) => {
                    verdict_line(
                        out,
                        format,
                        "not-weakly-projective",
                        json!(format!("{why:?}")),
                    )?;
                    Ok(1)
                }
            }
        }
        "iso" => {
            let m = inputs_exact(inputs, 2, name)?;
            match is_isomorphic(&m[0], &m[1], seed_needed()?, budget) {
                IsoVerdict::Yes(f) => {
                    verdict_line(
                        out,
                        format,
                        "yes",
                        json!(f.underlying().matrix().row_vecs()),
                    )?;
                    Ok(0)
                }
                IsoVerdict::No(why) => {
                    verdict_line(out, format, "no", json!(why))?;
                    Ok(1)
                }
                IsoVerdict::Unknown => {
                    verdict_line(out, format, "unknown", serde_json::Value::Null)?;
                    Ok(1)
                }
            }
        }
        "stable-iso" => {
            let m = inputs_exact(inputs, 2, name)?;
            match stably_isomorphic(&m[0], &m[1], seed_needed()?, budget) {
                StableIsoVerdict::Yes { witness, reversed } => {
                    let d = json!({"reversed": reversed, "map": witness.underlying().matrix().row_vecs()});
                    verdict_line(out, format, "yes", d)?;
                    Ok(0)
                }
                StableIsoVerdict::No(why) => {
                    verdict_line(out, format, "no", json!(why))?;
                    Ok(1)
                }
                StableIsoVerdict::Unknown => {
                    verdict_line(out, format, "unknown", serde_json::Value::Null)?;
                    Ok(1)
                }
            }
        }
        "hom" => {
            let m = inputs_exact(inputs, 2, name)?;
            if m[0].group() != m[1].group() || m[0].ring() != m[1].ring() {
                return Err(strel_core::Error::GroupMismatch.into());
            }
            let basis = hom_space(&m[0], &m[1]);
            let gens: Vec<_> = basis
                .iter()
                .map(|h| h.underlying().matrix().row_vecs())
                .collect();
            verdict_line(out, format, "generators", json!(gens))?;
            Ok(0)
        }
        "component" | "in-prime" => {
            let m = &inputs_exact(inputs, 1, name)?[0];
            let i = need(i, "--i", name)?;
            let v = if name == "component" {
                !component_vanishes(m, i)?
            } else {
                in_prime(m, i)?
            };
            verdict_line(
                out,
                format,
                if v { "true" } else { "false" },
                serde_json::Value::Null,
            )?;
            Ok(if v { 0 } else { 1 })
        }
        other => Err(CliError::Parse(format!("unknown op `{other}`"))),
    }
}

fn verify(
    suite: &str,
    ring: &RingArgs,
    seed: u64,
    budget: usize,
    timings: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let explicit = ring.p.is_some() || ring.n.is_some() || ring.group.is_some();
    let chosen: Vec<_> = if suite == "all" {
        SUITES.iter().collect()
    } else {
        vec![find_suite(suite).ok_or_else(|| {
            CliError::Parse(format!(
                "unknown suite `{suite}`; known: all, {}",
                suite_ids().join(", ")
            ))
        })?]
    };
    let mut jobs = Vec::new();
    if explicit {
        let setting = setting_of(ring)?;
        let g = FiniteGroup::parse(&setting.group).map_err(|e| CliError::Parse(e.to_string()))?;
        for s in chosen {
            if suite == "all" && s.needs_cyclic_prime && !g.is_cyclic_of_prime_order(setting.p) {
                continue;
            }
            jobs.push((s, setting.clone()));
        }
    } else {
        for s in chosen {
            for setting in (s.defaults)() {
                jobs.push((s, setting));
            }
        }
    }
    let reports = run_suites(&jobs, Search { seed, budget })?;
    for r in &reports {
        let line = match format {
            Format::Text => r.text_line(timings),
            Format::Machine => r.machine_line(),
        };
        writeln!(out, "{line}").map_err(io)?;
    }
    let first_bad = reports.iter().find(|r| r.status != Status::Pass);
    if let (Format::Text, Some(r)) = (format, first_bad) {
        if let Some(c) = &r.counterexample {
            writeln!(out, "counterexample ({}): {c}", r.check).map_err(io)?;
        }
    }
    Ok(if first_bad.is_some() { 1 } else { 0 })
}

fn primes(ring: &RingArgs, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let (r, g) = ring_and_group(ring)?;
    let pts = spc_points(r, &g)?;
    let n = r.n();
    match format {
        Format::Text => {
            for d in &pts.primes {
                let gens: Vec<String> = d
                    .generator_indices
                    .iter()
                    .map(|j| format!("W_{j}"))
                    .collect();
                writeln!(out, "P_{{{},{n}}} = thick({})", d.i, gens.join(", ")).map_err(io)?;
            }
            for (i, j, wp) in &pts.orthogonality {
                writeln!(out, "W_{i} ⊗ W_{j} weakly projective: {wp}").map_err(io)?;
            }
        }
        Format::Machine => {
            let primes: Vec<_> = pts
                .primes
                .iter()
                .map(|d| json!({"i": d.i, "generators": d.generator_indices}))
                .collect();
            let orth: Vec<_> = pts
                .orthogonality
                .iter()
                .map(|(i, j, wp)| json!([i, j, wp]))
                .collect();
            writeln!(
                out,
                "{}",
                json!({"n": n, "primes": primes, "orthogonality": orth})
            )
            .map_err(io)?;
        }
    }
    Ok(if pts.all_orthogonal() { 0 } else { 1 })
}
