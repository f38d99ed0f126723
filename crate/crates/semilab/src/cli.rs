//! Command-line front end: subcommand dispatch, configuration, JSON
//! reports on stdout.
//!
//! Exit codes: 0 for any successful computation (refuted and
//! unknown-at-bounds verdicts included), 1 for usage or input errors, 2 for
//! an internal invariant failure.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::lab::{ChainStrategy, Lab, LengthFn, TheoremId};
use crate::monoid::MonoidSpec;
use crate::parse::{parse_element, parse_exponent};
use crate::report;
use crate::semidomain::SemidomainInstance;
use crate::zx;

#[derive(Parser, Debug)]
#[command(
    name = "semilab",
    about = "exact-arithmetic laboratory for factorization in semisubtractive semidomains",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Instance id, e.g. `sign-c0c1`, `posmonalg:2,3,5`, `hfs-loc:3`
    #[arg(long)]
    instance: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    max_height: Option<u32>,
    #[arg(long)]
    max_length: Option<u32>,
    #[arg(long)]
    max_candidates: Option<u32>,
    #[arg(long)]
    chain_budget: Option<u32>,
    /// Seed for the corpus sampler
    #[arg(long)]
    seed: Option<u64>,
    /// Kronecker degree cap
    #[arg(long)]
    zx_cap: Option<u32>,
    /// JSON configuration file; command-line flags override it
    #[arg(long)]
    config: Option<String>,
    /// Also write the JSON report to this path
    #[arg(long)]
    out: Option<String>,
    /// Write tabular sweeps to this CSV path
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the built-in instance catalog
    ListInstances,
    /// Membership of an element in the instance and its ambient
    Contains {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Factorizations into verified atoms
    Factorize {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Divisor enumeration with completeness flag
    Divisors {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Atom verdict for an element, or the corpus atoms without one
    Atoms {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Length sets; `--sweep-primes` tabulates max length against a prime
    /// budget for the reciprocal-prime monoid algebra
    Lengths {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        sweep_primes: Option<String>,
    },
    /// Property checks: unit, atom, prime, invertible, semisubtractive,
    /// associate (with --other)
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        property: String,
        #[arg(long, allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Run a theorem-consistency sweep
    VerifyTheorem {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        id: String,
    },
    /// Exponent-monoid queries against a spec string such as
    /// `recip-primes:2,3` or `finrank:(1,1),(1,2)`
    Monoid {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Divisibility-chain probe from a seed element
    ChainProbe {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value = "halving")]
        strategy: String,
    },
    /// Verify a named length function over the instance corpus
    LengthFn {
        #[command(flatten)]
        common: Common,
        #[arg(long = "fn")]
        function: String,
        /// Verify on the ambient corpus instead of the member corpus
        #[arg(long)]
        ambient: bool,
    },
}

/// The instance field of a config file: a plain id string, or a structured
/// `{id, params: {primes | rank}}` object.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum InstanceSpec {
    Id(String),
    Structured {
        id: String,
        #[serde(default)]
        params: InstanceParams,
    },
}

#[derive(Debug, Deserialize, Default)]
struct InstanceParams {
    primes: Option<Vec<u64>>,
    rank: Option<u64>,
}

impl InstanceSpec {
    fn to_id(&self) -> String {
        match self {
            InstanceSpec::Id(s) => s.clone(),
            InstanceSpec::Structured { id, params } => {
                if let Some(primes) = &params.primes {
                    let list = primes
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{}:{}", id, list)
                } else if let Some(rank) = params.rank {
                    format!("{}:{}", id, rank)
                } else {
                    id.clone()
                }
            }
        }
    }
}

#[derive(Debug, Deserialize, Default)]
struct FileConfig {
    instance: Option<InstanceSpec>,
    bounds: Option<Bounds>,
    seed: Option<u64>,
    zx_degree_cap: Option<u32>,
}

struct Resolved {
    instance: SemidomainInstance,
    bounds: Bounds,
    zx_cap: u32,
    /// Reserved for sampling queries; the current subcommands walk
    /// deterministic corpora only, so reports never depend on it.
    #[allow(dead_code)]
    seed: u64,
}

fn resolve(common: &Common) -> Result<Resolved> {
    let file: FileConfig = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            serde_json::from_str(&text).map_err(|e| Error::Usage(format!(
                "config {}: {}",
                path, e
            )))?
        }
        None => FileConfig::default(),
    };
    let mut bounds = file.bounds.unwrap_or_default();
    if let Some(v) = common.max_degree {
        bounds.max_degree = v;
    }
    if let Some(v) = common.max_height {
        bounds.max_height = v;
    }
    if let Some(v) = common.max_length {
        bounds.max_length = v;
    }
    if let Some(v) = common.max_candidates {
        bounds.max_candidates = v;
    }
    if let Some(v) = common.chain_budget {
        bounds.chain_budget = v;
    }
    let id = common
        .instance
        .clone()
        .or_else(|| file.instance.as_ref().map(|i| i.to_id()))
        .ok_or_else(|| Error::Usage("an --instance is required".into()))?;
    let instance = SemidomainInstance::from_id(&id)?;
    Ok(Resolved {
        instance,
        bounds,
        zx_cap: common.zx_cap.or(file.zx_degree_cap).unwrap_or(zx::DEFAULT_DEGREE_CAP),
        seed: common.seed.or(file.seed).unwrap_or(0),
    })
}

/// Entry point shared by the binary and the tests: parses `argv`, runs the
/// command, writes the JSON report, returns the exit code.
pub fn run_command<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(cli, out)));
    match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(err)) => {
            let v = json!({ "error": err.to_string() });
            let _ = out.write_all(report::to_json_string(&v).as_bytes());
            1
        }
        Err(_) => {
            let v = json!({ "error": "internal invariant failure" });
            let _ = out.write_all(report::to_json_string(&v).as_bytes());
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.cmd {
        Cmd::ListInstances => {
            let items: Vec<serde_json::Value> = SemidomainInstance::catalog()
                .into_iter()
                .map(|(id, desc)| {
                    // instantiate each pattern with its default parameters
                    // to expose the structured configuration
                    let concrete = id.replace(":P", ":2,3").replace(":N", ":3");
                    let inst = SemidomainInstance::from_id(&concrete)
                        .expect("catalog ids instantiate");
                    let mut obj = serde_json::Map::new();
                    obj.insert("id".into(), json!(id));
                    obj.insert("description".into(), json!(desc));
                    for (k, v) in inst.describe() {
                        if k != "id" {
                            obj.insert(k, json!(v));
                        }
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            report::emit(out, &json!({ "query": "list-instances", "instances": items }), None)
        }
        Cmd::Contains { common, element } => {
            let r = resolve(&common)?;
            let e = parse_element(&element, &r.instance)?;
            let ambient = r.instance.ambient_contains(&e)?;
            let member = ambient && r.instance.contains(&e)?;
            let v = report::frame(
                "contains",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![
                    ("element", json!(e.to_string())),
                    ("ambient", json!(ambient)),
                    ("member", json!(member)),
                ],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::Factorize { common, element } => {
            let r = resolve(&common)?;
            let e = parse_element(&element, &r.instance)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let (zs, complete) = lab.factorizations(&e)?;
            let listed: Vec<serde_json::Value> = zs
                .iter()
                .map(|z| {
                    json!(z.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>())
                })
                .collect();
            let v = report::frame(
                "factorize",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![
                    ("element", json!(e.to_string())),
                    ("factorizations", json!(listed)),
                    ("count", json!(zs.len())),
                    ("complete", json!(complete)),
                ],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::Divisors { common, element } => {
            let r = resolve(&common)?;
            let e = parse_element(&element, &r.instance)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let (divs, complete) = lab.divisor_set(&e)?;
            let v = report::frame(
                "divisors",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![
                    ("element", json!(e.to_string())),
                    ("elements", report::elements_json(&divs)),
                    ("count", json!(divs.len())),
                    ("complete", json!(complete)),
                ],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::Atoms { common, element } => {
            let r = resolve(&common)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            match element {
                Some(text) => {
                    let e = parse_element(&text, &r.instance)?;
                    let verdict = lab.is_atom(&e)?;
                    let v = report::frame(
                        "atoms",
                        r.instance.id(),
                        &r.bounds,
                        r.instance.truncated(),
                        vec![
                            ("element", json!(e.to_string())),
                            ("verdict", report::verdict_json(&verdict)),
                            ("witnesses", report::witness_list_json(verdict.witness())),
                        ],
                    );
                    report::emit(out, &v, common.out.as_deref())
                }
                None => {
                    let mut atoms = Vec::new();
                    for s in r.instance.enumerate_members(&r.bounds)? {
                        if s.is_zero() || r.instance.is_unit(&s)?.is_proved() {
                            continue;
                        }
                        match lab.is_atom(&s) {
                            Ok(verdict) if verdict.is_proved() => atoms.push(s),
                            Ok(_) => {}
                            Err(Error::UnsupportedElement) => {}
                            Err(e) => return Err(e),
                        }
                    }
                    let v = report::frame(
                        "atoms",
                        r.instance.id(),
                        &r.bounds,
                        r.instance.truncated(),
                        vec![
                            ("elements", report::elements_json(&atoms)),
                            ("count", json!(atoms.len())),
                        ],
                    );
                    report::emit(out, &v, common.out.as_deref())
                }
            }
        }
        Cmd::Lengths {
            common,
            element,
            sweep_primes,
        } => {
            let r = resolve(&common)?;
            if let Some(primes) = sweep_primes {
                return lengths_sweep(&common, &r, &primes, &element, out);
            }
            let e = parse_element(&element, &r.instance)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let ls = lab.length_set(&e)?;
            let v = report::frame(
                "lengths",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![
                    ("element", json!(e.to_string())),
                    ("lengths", json!(ls.lengths.iter().collect::<Vec<_>>())),
                    ("complete", json!(ls.complete)),
                ],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::Check {
            common,
            element,
            property,
            other,
        } => {
            let r = resolve(&common)?;
            let e = parse_element(&element, &r.instance)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let mut fields = vec![("element", json!(e.to_string()))];
            let verdict = match property.as_str() {
                "unit" => r.instance.is_unit(&e)?,
                "atom" => lab.is_atom(&e)?,
                "prime" => lab.is_prime(&e)?,
                "invertible" => {
                    let b = r.instance.is_additive_invertible(&e)?;
                    fields.push(("invertible", json!(b)));
                    if b {
                        crate::semidomain::Verdict::proved()
                    } else {
                        crate::semidomain::Verdict::refuted(
                            crate::semidomain::Witness::Element(e.neg()),
                        )
                    }
                }
                "semisubtractive" => {
                    let b = r.instance.semisubtractive_check(&e)?;
                    if b {
                        crate::semidomain::Verdict::proved()
                    } else {
                        crate::semidomain::Verdict::refuted(
                            crate::semidomain::Witness::Element(e.clone()),
                        )
                    }
                }
                "divides" => {
                    let o = other
                        .as_deref()
                        .ok_or_else(|| Error::Usage("--other is required for divides".into()))?;
                    let t = parse_element(o, &r.instance)?;
                    fields.push(("other", json!(t.to_string())));
                    let b = lab.divides(&e, &t)?;
                    fields.push(("divides", json!(b)));
                    if b {
                        crate::semidomain::Verdict::proved()
                    } else {
                        crate::semidomain::Verdict::refuted(
                            crate::semidomain::Witness::Note("no member cofactor".into()),
                        )
                    }
                }
                "associate" => {
                    let o = other
                        .as_deref()
                        .ok_or_else(|| Error::Usage("--other is required for associate".into()))?;
                    let t = parse_element(o, &r.instance)?;
                    fields.push(("other", json!(t.to_string())));
                    lab.associates(&e, &t)?
                }
                "furstenberg" => lab.furstenberg_witness(&e)?,
                other => {
                    return Err(Error::Usage(format!("unknown property `{}`", other)));
                }
            };
            fields.push(("verdict", report::verdict_json(&verdict)));
            fields.push(("witnesses", report::witness_list_json(verdict.witness())));
            let v = report::frame(
                "check",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                fields,
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::VerifyTheorem { common, id } => {
            let r = resolve(&common)?;
            let theorem = TheoremId::parse(&id)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let rep = lab.verify_theorem(theorem)?;
            let v = report::frame(
                "verify-theorem",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![("report", report::consistency_json(&rep))],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::Monoid {
            common,
            spec,
            op,
            element,
        } => {
            let m = MonoidSpec::parse(&spec)?;
            let bounds = {
                let mut b = Bounds::default();
                if let Some(v) = common.max_height {
                    b.max_height = v;
                }
                if let Some(v) = common.max_length {
                    b.max_length = v;
                }
                b
            };
            let need_elem = || -> Result<crate::poly::Exp> {
                let text = element
                    .as_deref()
                    .ok_or_else(|| Error::Usage("--element is required for this op".into()))?;
                parse_exponent(text, m.dim())
            };
            let body = match op.as_str() {
                "membership" => {
                    let q = need_elem()?;
                    json!({ "element": render_exp(&q), "member": m.contains(&q)? })
                }
                "atoms" => {
                    let atoms = m.atoms(&bounds)?;
                    json!({
                        "atoms": atoms.iter().map(render_exp).collect::<Vec<_>>(),
                        "count": atoms.len(),
                    })
                }
                "factorizations" => {
                    let q = need_elem()?;
                    let zs = m.factorizations(&q, &bounds)?;
                    json!({
                        "factorizations": zs
                            .iter()
                            .map(|z| z.iter().map(render_exp).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "count": zs.len(),
                    })
                }
                "lengths" => {
                    let q = need_elem()?;
                    let ls = m.length_set(&q, &bounds)?;
                    json!({ "lengths": ls.iter().collect::<Vec<_>>() })
                }
                other => return Err(Error::Usage(format!("unknown monoid op `{}`", other))),
            };
            let v = json!({
                "query": "monoid",
                "spec": m.render(),
                "op": op,
                "result": body,
            });
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::ChainProbe {
            common,
            element,
            strategy,
        } => {
            let r = resolve(&common)?;
            let e = parse_element(&element, &r.instance)?;
            let strat = ChainStrategy::parse(&strategy)?;
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let rep = lab.accp_chain_probe(strat, &e)?;
            let v = report::frame(
                "chain-probe",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![("report", report::chain_json(&rep))],
            );
            report::emit(out, &v, common.out.as_deref())
        }
        Cmd::LengthFn {
            common,
            function,
            ambient,
        } => {
            let r = resolve(&common)?;
            let lf = LengthFn::parse(&function)?;
            if ambient {
                let amb = r.instance.ambient_view();
                let lab = Lab::new(&amb, r.bounds.clone()).with_zx_cap(r.zx_cap);
                let corpus = amb.enumerate_members(&r.bounds)?;
                let rep = lab.verify_length_function(&lf, &corpus)?;
                let v = report::frame(
                    "length-fn",
                    amb.id(),
                    &r.bounds,
                    r.instance.truncated(),
                    vec![("report", report::length_fn_json(&rep))],
                );
                return report::emit(out, &v, common.out.as_deref());
            }
            let lab = Lab::new(&r.instance, r.bounds.clone()).with_zx_cap(r.zx_cap);
            let corpus = r.instance.enumerate_members(&r.bounds)?;
            let rep = lab.verify_length_function(&lf, &corpus)?;
            let v = report::frame(
                "length-fn",
                r.instance.id(),
                &r.bounds,
                r.instance.truncated(),
                vec![("report", report::length_fn_json(&rep))],
            );
            report::emit(out, &v, common.out.as_deref())
        }
    }
}

fn render_exp(e: &crate::poly::Exp) -> String {
    let parts: Vec<String> = e.coords().iter().map(crate::exact::rat_to_string).collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        format!("({})", parts.join(","))
    }
}

/// Growth of max L(x) in the reciprocal-prime monoid algebra as the prime
/// budget grows: one row per prefix of the prime list.
fn lengths_sweep(
    common: &Common,
    r: &Resolved,
    primes_text: &str,
    element: &str,
    out: &mut dyn Write,
) -> Result<()> {
    let primes: Vec<u64> = primes_text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("bad prime `{}`", s)))
        })
        .collect::<Result<_>>()?;
    if primes.is_empty() {
        return Err(Error::Usage("an empty prime list".into()));
    }
    let mut csv = report::Csv::new(&["primes", "max_length"]);
    let mut rows = Vec::new();
    for upto in 1..=primes.len() {
        let prefix = &primes[..upto];
        let inst = SemidomainInstance::pos_mon_alg(prefix)?;
        let bounds = r
            .bounds
            .clone()
            .with_length(r.bounds.max_length.max(*prefix.last().unwrap() as u32 + 1));
        let lab = Lab::new(&inst, bounds);
        let e = parse_element(element, &inst)?;
        let ls = lab.length_set(&e)?;
        let maxlen = ls.lengths.iter().max().copied().unwrap_or(0);
        let label = prefix
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        csv.push(vec![label.clone(), maxlen.to_string()]);
        rows.push(json!({
            "primes": prefix,
            "lengths": ls.lengths.iter().collect::<Vec<_>>(),
            "max_length": maxlen,
            "complete": ls.complete,
        }));
    }
    if let Some(path) = &common.csv {
        csv.write(path)?;
    }
    let v = json!({
        "query": "lengths-sweep",
        "element": element,
        "rows": rows,
        "csv": common.csv,
    });
    report::emit(out, &v, common.out.as_deref())
}
