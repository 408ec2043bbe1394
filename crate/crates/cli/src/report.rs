//! Reports in two renderings: plain text and JSON.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use weightmon::admiss::AdmissibleTriple;
use weightmon::enumerate::Instance;
use weightmon::exactla::{HilbertBasis, IntVec, RatVec};
use weightmon::polytope::PolytopeReport;
use weightmon::sphroots::{format_root_combination, SphericalRoot};
use weightmon::verdict::{Certificate, Verdict};

/// A finished report.
pub struct Report {
    pub text: String,
    pub json: Value,
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vecs_json(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(|v| vec_json(v)).collect())
}

pub fn rat_json(v: &RatVec) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

pub fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn fmt_vecs(vs: &[IntVec]) -> String {
    if vs.is_empty() {
        return "∅".into();
    }
    vs.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(" ")
}

fn fmt_rat(v: &RatVec) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_roots(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|j| format!("α{}", j + 1)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn spherical_roots_json(s: &[SphericalRoot]) -> Value {
    Value::Array(
        s.iter()
            .map(|r| {
                json!({
                    "root": r.display(),
                    "weight": vec_json(&r.element),
                    "coefficients": vec_json(&r.coefficients),
                    "pattern": r.pattern.name(),
                })
            })
            .collect(),
    )
}

pub fn fmt_spherical_roots(s: &[SphericalRoot]) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = s.iter().map(|r| r.display()).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn triple_json(t: &AdmissibleTriple) -> Value {
    json!({ "s": t.s, "sp": t.sp, "sigma": vecs_json(&t.sigma) })
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Toric { units, irreducibles } => {
            json!({ "kind": "toric", "units": vecs_json(units), "irreducibles": vecs_json(irreducibles) })
        }
        Certificate::GSaturated(g) => json!({
            "kind": "g_saturated",
            "sp": g.sp,
            "sigma_n": spherical_roots_json(&g.sigma_n),
            "s_gamma": g.s_gamma,
            "triple": triple_json(&g.triple),
            "witness": g.witness.as_ref().map(|w| {
                w.iter()
                    .map(|b| json!({ "primitive": b.primitive.describe(), "labeling": b.labeling }))
                    .collect::<Vec<_>>()
            }),
            "conditions": { "a": g.conditions[0], "b": g.conditions[1], "c": g.conditions[2] },
        }),
        Certificate::Sl2Cx { family, sigma_n } => json!({
            "kind": "sl2c",
            "family": family.map(|f| {
                let params: serde_json::Map<String, Value> =
                    f.params().into_iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
                json!({ "item": f.item, "params": params })
            }),
            "sigma_n": vecs_json(sigma_n),
        }),
        Certificate::Reflective { checklist, sigma_n } => json!({
            "kind": "reflective",
            "checklist": checklist.iter().map(|(k, v)| json!({ "item": k, "holds": v })).collect::<Vec<_>>(),
            "sigma_n": vecs_json(sigma_n),
        }),
        Certificate::None => json!({ "kind": "none" }),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "outcome": v.outcome.to_string(),
        "route": v.route.map(|r| r.to_string()),
        "reason": v.reason,
        "sigma_n": v.sigma_n().map(|s| vecs_json(&s)),
        "certificate": certificate_json(&v.certificate),
    })
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut s = String::new();
    let route = v.route.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
    writeln!(s, "outcome: {}", v.outcome).unwrap();
    writeln!(s, "route: {route}").unwrap();
    if let Some(r) = &v.reason {
        writeln!(s, "reason: {r}").unwrap();
    }
    match &v.certificate {
        Certificate::Toric { units, irreducibles } => {
            writeln!(s, "units: {}", fmt_vecs(units)).unwrap();
            writeln!(s, "irreducibles: {}", fmt_vecs(irreducibles)).unwrap();
        }
        Certificate::GSaturated(g) => {
            writeln!(s, "S^p: {}", fmt_roots(&g.sp)).unwrap();
            writeln!(s, "Σ^N: {}", fmt_spherical_roots(&g.sigma_n)).unwrap();
            writeln!(s, "S_Γ: {}", fmt_roots(&g.s_gamma)).unwrap();
            let [a, b, c] = g.conditions;
            writeln!(s, "conditions: (a) {a}, (b) {b}, (c) {c}").unwrap();
            if let Some(w) = &g.witness {
                for b in w {
                    writeln!(s, "  block {} on {}", b.primitive.describe(), fmt_roots(&b.labeling)).unwrap();
                }
            }
        }
        Certificate::Sl2Cx { family, sigma_n } => {
            match family {
                Some(f) => writeln!(s, "family: {f}").unwrap(),
                None => writeln!(s, "family: none").unwrap(),
            }
            writeln!(s, "Σ^N: {}", fmt_vecs(sigma_n)).unwrap();
        }
        Certificate::Reflective { checklist, sigma_n } => {
            for (k, ok) in checklist {
                writeln!(s, "  [{}] {k}", if *ok { "x" } else { " " }).unwrap();
            }
            writeln!(s, "Σ^N: {}", fmt_vecs(sigma_n)).unwrap();
        }
        Certificate::None => {}
    }
    s
}

pub fn hilbert_report(hb: &HilbertBasis) -> Report {
    let text = format!("units: {}\nirreducibles: {}\n", fmt_vecs(&hb.units), fmt_vecs(&hb.irreducibles));
    let json = json!({ "units": vecs_json(&hb.units), "irreducibles": vecs_json(&hb.irreducibles) });
    Report { text, json }
}

pub fn polytope_report(r: &PolytopeReport) -> Report {
    let mut s = String::new();
    writeln!(s, "overall: {}", r.overall).unwrap();
    writeln!(s, "reflective: {}", r.reflective.holds()).unwrap();
    for f in &r.reflective.failures {
        writeln!(s, "  {f}").unwrap();
    }
    writeln!(s, "delzant: {}", r.delzant).unwrap();
    writeln!(s, "lattice conditions: {}", r.lattice_conditions).unwrap();
    writeln!(s, "global route: {}", r.global_route).unwrap();
    let mut vs = Vec::new();
    for (i, v) in r.vertices.iter().enumerate() {
        let route = v.route().map(|r| r.to_string()).unwrap_or_else(|| "-".into());
        writeln!(s, "vertex {i} {}: {} via {route}", fmt_rat(&v.vertex), v.outcome()).unwrap();
        writeln!(s, "  levi: {}", fmt_roots(&v.levi)).unwrap();
        writeln!(s, "  monoid: {}", fmt_vecs(&v.monoid)).unwrap();
        if let Some(mm) = &v.model_monoid {
            writeln!(s, "  model monoid: {}", fmt_vecs(mm)).unwrap();
        }
        if let Some(sn) = v.verdict.sigma_n() {
            writeln!(s, "  Σ^N: {}", fmt_vecs(&sn)).unwrap();
        }
        if let Some(reason) = &v.verdict.reason {
            writeln!(s, "  reason: {reason}").unwrap();
        }
        if !v.lattice_ok {
            writeln!(s, "  lattice of the local monoid differs from Λ0").unwrap();
        }
        vs.push(json!({
            "index": i,
            "vertex": rat_json(&v.vertex),
            "levi": v.levi,
            "monoid": vecs_json(&v.monoid),
            "model_monoid": v.model_monoid.as_ref().map(|m| vecs_json(m)),
            "lattice_ok": v.lattice_ok,
            "verdict": verdict_json(&v.verdict),
        }));
    }
    let json = json!({
        "overall": r.overall.to_string(),
        "reflective": { "holds": r.reflective.holds(), "failures": r.reflective.failures },
        "delzant": r.delzant,
        "lattice_conditions": r.lattice_conditions,
        "global_route": r.global_route,
        "vertices": vs,
    });
    Report { text: s, json }
}

pub fn instance_json(i: &Instance) -> Value {
    json!({
        "case": i.member.case,
        "label": i.member.label,
        "lattice": vecs_json(i.member.lattice.basis()),
        "outcome": i.outcome.to_string(),
        "sigma_n": vecs_json(&i.sigma_n),
        "expected_sigma_n": vecs_json(&i.member.expected_sigma_n),
        "confirmed": i.confirmed(),
    })
}

pub fn instance_text(i: &Instance) -> String {
    format!(
        "case {} {}: lattice {} -> {} Σ^N {} [{}]",
        i.member.case,
        i.member.label,
        fmt_vecs(i.member.lattice.basis()),
        i.outcome,
        fmt_vecs(&i.sigma_n),
        if i.confirmed() { "ok" } else { "MISMATCH" }
    )
}

/// `Σ c_j α_j` for each coefficient vector.
pub fn fmt_combinations(vs: &[IntVec]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| format_root_combination(v)).collect();
    format!("{{{}}}", parts.join(", "))
}
