use std::collections::HashMap;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Signed;

use ppsign_core::formulas::formula_count;
use ppsign_core::lgv::lgv_count;
use ppsign_core::oracle::signed_count;
use ppsign_core::qseries::binom;
use ppsign_core::verify::{
    detl_default, fuzz_identity, identity_sweep, m1_instance, minor_summation_instance, mrr_instance,
    recurrence_instance, run_grid, saalschutz_instance, two_ji_instance, Budgets, GridBounds, GridClass,
    IdentityName, IdentityOutcome, Outcome,
};
use ppsign_core::{BoxDims, Error, ExactMatrix, SignConvention, SignedCount, SymmetryClass};

use crate::args::{EnumerateArgs, IdentityArgs, MethodArg, VerifyArgs};
use crate::output::{millis, CountRecord, EnumerateReport, IdentityRecord, VerifyRecord};
use crate::CliError;

/// What a command found, before it is turned into an exit status.
#[derive(Debug, Default)]
pub struct Status {
    pub mismatch: bool,
    pub skipped: bool,
}

/// Settings shared by all commands.
pub struct RunConfig {
    pub budgets: Budgets,
    pub timing: bool,
    pub absolute: HashMap<SymmetryClass, bool>,
}

impl RunConfig {
    pub fn parse_sign_conventions(specs: &[String]) -> Result<HashMap<SymmetryClass, bool>, CliError> {
        let mut out = HashMap::new();
        for spec in specs {
            let (class, mode) = spec
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected CLASS=MODE, got {spec:?}")))?;
            let class: SymmetryClass = class.parse()?;
            let absolute = match mode {
                "absolute" => true,
                "native" => false,
                _ => return Err(CliError::Usage(format!("sign mode must be absolute or native, got {mode:?}"))),
            };
            out.insert(class, absolute);
        }
        Ok(out)
    }
}

fn resolve_box(class: SymmetryClass, args: &EnumerateArgs) -> Result<BoxDims, CliError> {
    use SymmetryClass::*;
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| CliError::Usage(format!("--{name} is required for {class}")));
    Ok(match class {
        TransposeComplementary | SymmetricTransposeComplementary => {
            let a = need(args.a, "a")?;
            BoxDims::new(a, a, 2 * args.b.unwrap_or(0))
        }
        Cyclic
        | TotallySymmetric
        | CyclicallySymmetricTransposeComplementary
        | CyclicallySymmetricSelfComplementary
        | TotallySymmetricSelfComplementary => match (args.alpha, args.a) {
            (Some(alpha), _) => BoxDims::cube(2 * alpha),
            (None, a) => BoxDims::cube(need(a, "a")?),
        },
        _ => BoxDims::new(need(args.a, "a")?, need(args.b, "b")?, need(args.c, "c")?),
    })
}

fn run_method(method: MethodArg, class: SymmetryClass, bx: BoxDims, budgets: &Budgets) -> ppsign_core::Result<SignedCount> {
    match method {
        MethodArg::Oracle => signed_count(bx, class, budgets.node_budget),
        MethodArg::Lgv => lgv_count(class, bx),
        MethodArg::Formula => formula_count(class, bx),
        MethodArg::All => unreachable!("expanded by the caller"),
    }
}

pub fn enumerate(args: &EnumerateArgs, cfg: &RunConfig) -> Result<(EnumerateReport, Status), CliError> {
    let class: SymmetryClass = args.class.parse()?;
    let bx = resolve_box(class, args)?;
    class.check_box(bx)?;
    let methods = match args.method {
        MethodArg::All => vec![MethodArg::Oracle, MethodArg::Lgv, MethodArg::Formula],
        m => vec![m],
    };
    let absolute = cfg.absolute.get(&class).copied().unwrap_or(false);
    let mut status = Status::default();
    let mut results = Vec::new();
    let mut values = Vec::new();
    for m in &methods {
        let start = Instant::now();
        let r = run_method(*m, class, bx, &cfg.budgets);
        let elapsed = millis(start.elapsed(), cfg.timing);
        let name = format!("{m:?}").to_lowercase();
        let mut rec = CountRecord {
            class: class.short_name().into(),
            bx: bx.dims(),
            method: name.clone(),
            value: None,
            sign_convention: None,
            elapsed_ms: elapsed,
            status: None,
        };
        match r {
            Ok(mut c) => {
                if absolute {
                    c.value = c.value.abs();
                    c.sign_convention = SignConvention::AbsoluteValue;
                }
                rec.value = Some(c.value.to_string());
                rec.sign_convention = Some(c.sign_convention.name().into());
                values.push(c);
            }
            Err(Error::ResourceLimit { what, budget }) => {
                eprintln!("{name}: budget exceeded: {what} (budget {budget})");
                status.skipped = true;
                rec.status = Some("skipped".into());
            }
            Err(Error::Unsupported(msg)) if methods.len() > 1 => {
                eprintln!("{name}: {msg}");
                rec.status = Some("unsupported".into());
            }
            Err(e) => return Err(e.into()),
        }
        results.push(rec);
    }
    let verdict = (methods.len() > 1).then(|| {
        // Values tagged with anything other than the reference convention are
        // only determined up to sign.
        let exact = values.iter().all(|c| c.sign_convention == SignConvention::Reference);
        let key = |c: &SignedCount| if exact { c.value.clone() } else { c.value.abs() };
        let agree = values.windows(2).all(|w| key(&w[0]) == key(&w[1]));
        status.mismatch = !agree;
        if agree { "OK" } else { "MISMATCH" }.to_string()
    });
    Ok((EnumerateReport { results, verdict }, status))
}

fn outcome(o: &Outcome) -> Option<String> {
    match o {
        Outcome::NotApplicable => None,
        o => Some(o.to_string()),
    }
}

pub fn verify(args: &VerifyArgs, cfg: &RunConfig) -> Result<(Vec<VerifyRecord>, Status), CliError> {
    let families = if args.class.eq_ignore_ascii_case("all") {
        GridClass::ALL.to_vec()
    } else {
        vec![args.class.parse::<GridClass>()?]
    };
    let mut status = Status::default();
    let mut out = Vec::new();
    for family in families {
        let mut bounds = if args.smoke { GridBounds::smoke(family) } else { GridBounds::standard(family) };
        if let Some(v) = args.max_a {
            bounds.max_a = v;
        }
        if let Some(v) = args.max_b {
            bounds.max_b = v;
        }
        if let Some(v) = args.max_c {
            bounds.max_c = v;
        }
        if let Some(v) = args.max_alpha {
            bounds.max_alpha = v;
        }
        if let Some(v) = args.oracle_max_cells {
            bounds.oracle_max_cells = v;
        }
        for row in run_grid(family, &bounds, &cfg.budgets) {
            let finding = family.is_conjecture() && !row.matches();
            status.mismatch |= !row.matches() && !finding;
            status.skipped |= row.is_skipped();
            out.push(VerifyRecord {
                family: family.name().into(),
                params: row.params.clone(),
                bx: row.bx.dims(),
                oracle: outcome(&row.oracle),
                pipeline: outcome(&row.pipeline),
                formula: outcome(&row.formula),
                oracle_pipeline: row.oracle_vs_pipeline(),
                oracle_formula: row.oracle_vs_formula(),
                pipeline_formula: row.pipeline_vs_formula(),
                matches: row.matches(),
                skipped: row.is_skipped(),
                finding,
                elapsed_ms: millis(row.elapsed, cfg.timing),
            });
        }
    }
    Ok((out, status))
}

fn rational(s: &Option<String>, name: &str) -> Result<BigRational, CliError> {
    let s = s.as_ref().ok_or_else(|| CliError::Usage(format!("--{name} is required")))?;
    s.parse().map_err(|_| CliError::Usage(format!("--{name}: {s:?} is not a rational number")))
}

fn unsigned(s: &Option<String>, name: &str) -> Result<u32, CliError> {
    let s = s.as_ref().ok_or_else(|| CliError::Usage(format!("--{name} is required")))?;
    s.parse().map_err(|_| CliError::Usage(format!("--{name}: {s:?} is not a nonnegative integer")))
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required")))
}

fn has_params(a: &IdentityArgs) -> bool {
    a.n.is_some()
        || a.mu.is_some()
        || a.alpha.is_some()
        || a.beta.is_some()
        || a.gamma.is_some()
        || a.a.is_some()
        || a.b.is_some()
        || a.c.is_some()
        || a.t.is_some()
        || a.p.is_some()
}

fn fixed_instance(name: IdentityName, a: &IdentityArgs, budgets: &Budgets) -> Result<IdentityOutcome, CliError> {
    Ok(match name {
        IdentityName::Detl => detl_default(need(a.n, "n")?)?,
        IdentityName::TwoJMinusI => two_ji_instance(need(a.alpha, "alpha")?, need(a.beta, "beta")?, need(a.gamma, "gamma")?)?,
        IdentityName::M1 => m1_instance(need(a.alpha, "alpha")?, unsigned(&a.b, "b")?)?,
        IdentityName::Mrr => mrr_instance(&rational(&a.mu, "mu")?, need(a.n, "n")?)?,
        IdentityName::PfaffSaalschutz => saalschutz_instance(
            &rational(&a.a, "a")?,
            &rational(&a.b, "b")?,
            &rational(&a.c, "c")?,
            need(a.n, "n")? as u64,
        )?,
        IdentityName::MinorSummation => {
            // T_{ik} = C(i+k, k) against the sign matrix.
            let (p, n) = (need(a.p, "p")? as usize, need(a.n, "n")? as usize);
            if n > p {
                return Err(CliError::Usage(format!("need n <= p, got n={n}, p={p}")));
            }
            let t = ExactMatrix::from_int_fn(p, n, |i, k| binom((i + k) as i64, k as i64));
            minor_summation_instance(&t, None, budgets.subset_budget)?
        }
        IdentityName::RecurrenceS4 => recurrence_instance(need(a.alpha, "alpha")?, unsigned(&a.b, "b")?, need(a.t, "t")?)?,
    })
}

pub fn identity(args: &IdentityArgs, cfg: &RunConfig) -> Result<(Vec<IdentityRecord>, Status), CliError> {
    let name: IdentityName = args.name.parse()?;
    let outcomes = match args.fuzz {
        Some(count) => fuzz_identity(name, count, args.seed, &cfg.budgets)?,
        None if has_params(args) => vec![fixed_instance(name, args, &cfg.budgets)?],
        None => identity_sweep(name, &cfg.budgets)?,
    };
    let status = Status { mismatch: outcomes.iter().any(|o| !o.passed), skipped: false };
    let rows = outcomes
        .into_iter()
        .map(|o| IdentityRecord { name: o.name.name().into(), params: o.params, lhs: o.lhs, rhs: o.rhs, passed: o.passed })
        .collect();
    Ok((rows, status))
}
