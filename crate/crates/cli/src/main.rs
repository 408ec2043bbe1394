mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weightmon::admiss::is_admissible;
use weightmon::enumerate::{enumerate_other_types, enumerate_sl_fullrank, Instance};
use weightmon::monoid::WeightMonoid;
use weightmon::polytope::{check_pair, PairOutcome};
use weightmon::rootsys::CartanType;
use weightmon::sl2c::{classify_sl2c, sigma_n_sl2c};
use weightmon::sphroots::{elements, s_gamma, sigma_n_general, sigma_n_gsat};
use weightmon::verdict::{smooth_verdict, verify_certificate, Certificate, Outcome, Verdict};

use input::{InputError, ProblemSpec};
use report::*;

/// Exact smoothness tests for weight monoids of affine spherical varieties.
#[derive(Parser)]
#[command(name = "weightmon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem document (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 3 when the answer is Undecided.
    #[arg(long, global = true)]
    strict: bool,
    /// Upper bound for unbounded family parameters in the enumerators.
    #[arg(long, global = true, default_value_t = 6)]
    max_param: u64,
    /// Run brute-force cross-checks next to the main computation.
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Decide smoothness of `monoid.generators`.
    Check {
        /// A structured report from an earlier run to re-verify.
        #[arg(long)]
        verify_certificate: Option<PathBuf>,
    },
    /// N-adapted spherical roots of the monoid.
    SigmaN,
    /// The subset S_Γ of simple roots.
    SGamma,
    /// Admissibility of `triple`.
    Admissible,
    /// Family of a monoid for SL(2) x C^x.
    ClassifySl2c,
    /// Local conditions for `polytope.vertices` with `lattice.generators`.
    Polytope,
    /// Hilbert basis of the saturation of the monoid.
    Hilbert,
    /// Full-rank G-saturated smooth monoids for SL(n+1).
    EnumerateSl {
        #[arg(long)]
        n: usize,
    },
    /// Full-rank G-saturated smooth monoids for a simple group not of type A.
    EnumerateOther {
        #[arg(long = "type")]
        cartan_type: String,
    },
}

/// Status of a finished run, in order of precedence.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Decided,
    Undecided,
    Mismatch,
}

struct Run {
    report: Report,
    status: Status,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Text => print!("{}", r.report.text),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&r.report.json).expect("serializable"))
                }
            }
            match r.status {
                Status::Decided => ExitCode::SUCCESS,
                Status::Undecided if cli.strict => ExitCode::from(3),
                Status::Undecided => ExitCode::SUCCESS,
                Status::Mismatch => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: Option<&Path>) -> Result<ProblemSpec, InputError> {
    let Some(path) = path else { return Err(InputError("--input FILE is required".into())) };
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    ProblemSpec::parse(&text)
}

fn run(cli: &Cli) -> Result<Run, InputError> {
    let spec = || load(cli.input.as_deref());
    match &cli.command {
        Command::Check { verify_certificate } => cmd_check(&spec()?, verify_certificate.as_deref(), cli.oracle),
        Command::SigmaN => cmd_sigma_n(&spec()?, cli.oracle),
        Command::SGamma => cmd_s_gamma(&spec()?),
        Command::Admissible => cmd_admissible(&spec()?),
        Command::ClassifySl2c => cmd_classify_sl2c(&spec()?),
        Command::Polytope => cmd_polytope(&spec()?, cli.oracle),
        Command::Hilbert => cmd_hilbert(&spec()?, cli.oracle),
        Command::EnumerateSl { n } => cmd_enumerate_sl(*n, cli.max_param, cli.oracle),
        Command::EnumerateOther { cartan_type } => cmd_enumerate_other(cartan_type, cli.oracle),
    }
}

/// Verdict for arbitrary input. Monoids that are not normal are not weight
/// monoids of smooth affine varieties.
fn verdict_for(m: &WeightMonoid) -> Result<Verdict, InputError> {
    if !m.is_normal() {
        return Ok(Verdict {
            outcome: Outcome::NotSmooth,
            route: None,
            certificate: Certificate::None,
            reason: Some("monoid is not normal".into()),
        });
    }
    Ok(smooth_verdict(m)?)
}

fn oracle_block(checks: Vec<(&str, bool)>, report: &mut Report) -> bool {
    let ok = checks.iter().all(|c| c.1);
    for (name, pass) in &checks {
        report.text.push_str(&format!("oracle {name}: {}\n", if *pass { "agrees" } else { "DISAGREES" }));
    }
    report.json["oracle"] =
        Value::Array(checks.iter().map(|(n, p)| json!({ "check": n, "agrees": p })).collect());
    ok
}

/// Cross-checks that do not share code paths with the verdict.
fn monoid_oracles(m: &WeightMonoid, v: &Verdict) -> Result<Vec<(&'static str, bool)>, InputError> {
    let mut checks = vec![("hilbert basis generated by input", hilbert_generated(m))];
    if m.is_normal() {
        checks.push(("certificate re-derivation", verify_certificate(m, v)?));
        if m.is_g_saturated()? {
            let general = elements(&sigma_n_general(m)?);
            checks.push(("general Σ^N equals G-saturated Σ^N", general == elements(&sigma_n_gsat(m)?)));
        }
    }
    Ok(checks)
}

/// Every Hilbert basis element found by bounded search over the input
/// generators. Holds exactly when the monoid is normal.
fn hilbert_generated(m: &WeightMonoid) -> bool {
    m.hilbert_basis().monoid_generators().iter().all(|h| m.search_member(h)) == m.is_normal()
}

fn cmd_check(spec: &ProblemSpec, verify: Option<&Path>, oracle: bool) -> Result<Run, InputError> {
    let m = spec.monoid()?;
    let v = verdict_for(&m)?;
    let mut json = verdict_json(&v);
    json["group"] = json!(m.group().name());
    json["generators"] = vecs_json(m.generators());
    let mut report = Report { text: verdict_text(&v), json };
    let mut status = if v.outcome == Outcome::Undecided { Status::Undecided } else { Status::Decided };
    if oracle && !oracle_block(monoid_oracles(&m, &v)?, &mut report) {
        status = Status::Mismatch;
    }
    if let Some(path) = verify {
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let old: Value =
            serde_json::from_str(&text).map_err(|e| InputError(format!("certificate is not a structured report: {e}")))?;
        let fields = ["outcome", "route", "sigma_n"];
        if fields.iter().any(|f| old.get(f).is_none()) {
            return Err(InputError("certificate lacks outcome, route or sigma_n".into()));
        }
        let differs: Vec<&str> = fields.iter().copied().filter(|f| old[f] != report.json[f]).collect();
        let verified = differs.is_empty();
        if verified {
            report.text.push_str("certificate: verified\n");
        } else {
            report.text.push_str(&format!("certificate: MISMATCH in {}\n", differs.join(", ")));
            status = Status::Mismatch;
        }
        report.json["certificate_verified"] = json!(verified);
    }
    Ok(Run { report, status })
}

fn cmd_sigma_n(spec: &ProblemSpec, oracle: bool) -> Result<Run, InputError> {
    let m = spec.monoid()?;
    let s = sigma_n_general(&m)?;
    let mut report = Report {
        text: format!("Σ^N: {}\n", fmt_spherical_roots(&s)),
        json: json!({ "sigma_n": spherical_roots_json(&s) }),
    };
    let mut status = Status::Decided;
    if oracle && m.is_g_saturated()? {
        let same = elements(&s) == elements(&sigma_n_gsat(&m)?);
        if !oracle_block(vec![("general Σ^N equals G-saturated Σ^N", same)], &mut report) {
            status = Status::Mismatch;
        }
    }
    Ok(Run { report, status })
}

fn cmd_s_gamma(spec: &ProblemSpec) -> Result<Run, InputError> {
    let m = spec.monoid()?;
    let s = sigma_n_general(&m)?;
    let sg = s_gamma(&m, &s)?;
    let names: Vec<String> = sg.iter().map(|j| format!("α{}", j + 1)).collect();
    let report = Report {
        text: format!("Σ^N: {}\nS_Γ: {{{}}}\n", fmt_spherical_roots(&s), names.join(", ")),
        json: json!({ "sigma_n": spherical_roots_json(&s), "s_gamma": sg }),
    };
    Ok(Run { report, status: Status::Decided })
}

fn cmd_admissible(spec: &ProblemSpec) -> Result<Run, InputError> {
    let g = spec.group()?;
    let Some(t) = spec.triple()? else { return Err(InputError("input has no triple".into())) };
    let w = is_admissible(&g, &t);
    let mut text = format!(
        "triple: S = {:?}, S^p = {:?}, Σ = {}\nadmissible: {}\n",
        t.s,
        t.sp,
        fmt_combinations(&t.sigma),
        w.is_some()
    );
    if let Some(blocks) = &w {
        for b in blocks {
            text.push_str(&format!("  block {} on {:?}\n", b.primitive.describe(), b.labeling));
        }
    }
    let json = json!({
        "triple": triple_json(&t),
        "admissible": w.is_some(),
        "witness": w.map(|bs| bs.iter().map(|b| json!({ "primitive": b.primitive.describe(), "labeling": b.labeling })).collect::<Vec<_>>()),
    });
    Ok(Run { report: Report { text, json }, status: Status::Decided })
}

fn cmd_classify_sl2c(spec: &ProblemSpec) -> Result<Run, InputError> {
    let m = spec.monoid()?;
    let fam = classify_sl2c(&m)?;
    let sigma = sigma_n_sl2c(&m)?;
    let text = match fam {
        Some(f) => format!("family: {f}\nΣ^N: {sigma}\n"),
        None => format!("family: none (not smooth)\nΣ^N: {sigma}\n"),
    };
    let json = json!({
        "family": fam.map(|f| {
            let params: serde_json::Map<String, Value> = f.params().into_iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
            json!({ "item": f.item, "params": params })
        }),
        "smooth": fam.is_some(),
        "sigma_n": vecs_json(&sigma.elements()),
    });
    Ok(Run { report: Report { text, json }, status: Status::Decided })
}

fn cmd_polytope(spec: &ProblemSpec, oracle: bool) -> Result<Run, InputError> {
    let p = spec.polytope()?;
    let l0 = spec.lattice(p.group().dim())?;
    let models = spec.local_models()?;
    let r = check_pair(&p, &l0, &models)?;
    let mut report = polytope_report(&r);
    let mut status = if r.overall == PairOutcome::Undecided { Status::Undecided } else { Status::Decided };
    if oracle {
        // Delzant means every local monoid is free of full rank
        let free = !r.delzant || r.vertices.iter().all(|v| v.monoid.len() == p.group().dim());
        if !oracle_block(vec![("delzant vertices have free monoids", free)], &mut report) {
            status = Status::Mismatch;
        }
    }
    Ok(Run { report, status })
}

fn cmd_hilbert(spec: &ProblemSpec, oracle: bool) -> Result<Run, InputError> {
    let m = spec.monoid()?;
    let mut report = hilbert_report(m.hilbert_basis());
    report.text.push_str(&format!("normal: {}\n", m.is_normal()));
    report.json["normal"] = json!(m.is_normal());
    let mut status = Status::Decided;
    if oracle && !oracle_block(vec![("hilbert basis generated by input", hilbert_generated(&m))], &mut report) {
        status = Status::Mismatch;
    }
    Ok(Run { report, status })
}

fn instance_oracle(g: &weightmon::rootsys::GroupDatum, inst: &[Instance]) -> Result<bool, InputError> {
    for i in inst {
        let m = WeightMonoid::g_saturated(g, &i.member.lattice)?;
        if elements(&sigma_n_general(&m)?) != elements(&sigma_n_gsat(&m)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_enumerate_sl(n: usize, max_k: u64, oracle: bool) -> Result<Run, InputError> {
    if !(1..=8).contains(&n) {
        return Err(InputError(format!("n = {n} is outside 1..=8")));
    }
    let inst = enumerate_sl_fullrank(n, max_k)?;
    let mut text = format!("SL({}) with case 2 up to k = {max_k}\n", n + 1);
    for i in &inst {
        text.push_str(&instance_text(i));
        text.push('\n');
    }
    let mut counts = serde_json::Map::new();
    for case in 1..=3u8 {
        let c = inst.iter().filter(|i| i.member.case == case).count();
        text.push_str(&format!("case {case}: {c} lattices\n"));
        counts.insert(case.to_string(), json!(c));
    }
    let all = inst.iter().all(Instance::confirmed);
    text.push_str(&format!("all confirmed: {all}\n"));
    let json = json!({
        "n": n,
        "max_param": max_k,
        "instances": inst.iter().map(instance_json).collect::<Vec<_>>(),
        "counts": counts,
        "all_confirmed": all,
    });
    let mut report = Report { text, json };
    let mut status = if all { Status::Decided } else { Status::Mismatch };
    if oracle {
        let g = weightmon::rootsys::group(&format!("A{n}"), 0)?;
        if !oracle_block(vec![("general Σ^N equals G-saturated Σ^N", instance_oracle(&g, &inst)?)], &mut report) {
            status = Status::Mismatch;
        }
    }
    Ok(Run { report, status })
}

fn cmd_enumerate_other(ty: &str, oracle: bool) -> Result<Run, InputError> {
    let t: CartanType = ty.parse()?;
    let r = enumerate_other_types(t)?;
    let mut text = format!("{t}\n");
    for i in &r.family {
        text.push_str(&instance_text(i));
        text.push('\n');
    }
    for (name, o) in &r.negatives {
        let tag = if *o == Outcome::NotSmooth { "ok" } else { "MISMATCH" };
        text.push_str(&format!("outside {name}: {o} [{tag}]\n"));
    }
    let all = r.all_confirmed();
    text.push_str(&format!("all confirmed: {all}\n"));
    let json = json!({
        "type": t.to_string(),
        "family": r.family.iter().map(instance_json).collect::<Vec<_>>(),
        "negatives": r.negatives.iter().map(|(n, o)| json!({ "lattice": n, "outcome": o.to_string() })).collect::<Vec<_>>(),
        "all_confirmed": all,
    });
    let mut report = Report { text, json };
    let mut status = if all { Status::Decided } else { Status::Mismatch };
    if oracle {
        let g = weightmon::rootsys::build_group(&[t], 0)?;
        if !oracle_block(vec![("general Σ^N equals G-saturated Σ^N", instance_oracle(&g, &r.family)?)], &mut report) {
            status = Status::Mismatch;
        }
    }
    Ok(Run { report, status })
}
