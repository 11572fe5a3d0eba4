//! JSON and text renderings of results.
//!
//! Monomials appear both as exponent vectors and as text, so a certificate
//! can be replayed by a program or read by a person.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::criteria::{Certificate, GolodVerdict, Status};
use crate::error::{Error, Result};
use crate::ideal::VarSet;
use crate::koszul::{BettiTable, KoszulElement, KoszulTerm, MonomialBasisReport, ProductWitness, TrivialityReport};
use crate::linalg::{FieldSpec, Scalar};
use crate::poincare::{ComparisonReport, Completeness, ResolutionStep, SerreGap};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

pub fn bigint(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn monomial(m: &Monomial, ctx: &RingContext) -> Value {
    json!({ "exponents": m.exponents(), "text": m.display(ctx).to_string() })
}

pub fn varset(s: VarSet, ctx: &RingContext) -> Value {
    json!({ "indices": s.indices(), "text": s.display(ctx).to_string() })
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    let ctx = i.context();
    json!({
        "vars": ctx.names(),
        "text": i.to_string(),
        "generators": i.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn context(ctx: &RingContext) -> Value {
    json!({ "vars": ctx.names(), "nvars": ctx.nvars() })
}

pub fn koszul_term(t: &KoszulTerm, ctx: &RingContext) -> Value {
    json!({
        "coefficient": monomial(&t.coefficient, ctx),
        "subset": varset(t.subset, ctx),
        "multidegree": t.multidegree().exponents(),
        "text": t.display(ctx).to_string(),
    })
}

pub fn koszul_element(z: &KoszulElement, ctx: &RingContext) -> Value {
    let terms: Vec<Value> = z
        .terms
        .iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .map(|(s, c)| json!({ "subset": s.indices(), "scalar": c.to_string() }))
        .collect();
    json!({
        "multidegree": z.multidegree.exponents(),
        "p": z.p,
        "terms": terms,
        "text": z.display(ctx).to_string(),
    })
}

fn gap(g: &SerreGap) -> Value {
    json!({ "index": g.index, "left": bigint(&g.left), "right": bigint(&g.right) })
}

pub fn certificate(c: &Certificate, ctx: &RingContext) -> Value {
    let mut v = match c {
        Certificate::Cond1Violation { s, t, f, g, product } => json!({
            "S": varset(*s, ctx),
            "T": varset(*t, ctx),
            "f": monomial(f, ctx),
            "g": monomial(g, ctx),
            "product": monomial(product, ctx),
        }),
        Certificate::Cond2Violation { s, t, v, f, g, product } => json!({
            "S": varset(*s, ctx),
            "T": varset(*t, ctx),
            "v": { "index": v, "text": ctx.name(*v) },
            "f": monomial(f, ctx),
            "g": monomial(g, ctx),
            "product": monomial(product, ctx),
        }),
        Certificate::KoszulProductWitness { field, witness } => json!({
            "field": field.to_string(),
            "left": koszul_element(&witness.left, ctx),
            "right": koszul_element(&witness.right, ctx),
            "left_index": witness.left_index,
            "right_index": witness.right_index,
            "product": koszul_element(&witness.product, ctx),
        }),
        Certificate::SerreGapWitness { field, gap: g } => {
            let mut v = gap(g);
            v["field"] = json!(field.to_string());
            v
        }
    };
    v["kind"] = json!(c.kind());
    v["description"] = json!(c.describe(ctx));
    v
}

pub fn verdict(v: &GolodVerdict) -> Value {
    let ctx = v.reduced.context();
    json!({
        "status": v.status.as_str(),
        "certificates": v.certificates.iter().map(|c| certificate(c, ctx)).collect::<Vec<_>>(),
        "engines": v.engines_run.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
        "reduced_context": {
            "vars": ctx.names(),
            "ideal": ideal(&v.reduced),
        },
        "notes": v.notes,
        "timing_ms": v.elapsed_ms as u64,
    })
}

pub fn verdict_text(v: &GolodVerdict) -> String {
    let ctx = v.reduced.context();
    let mut out = format!("status: {}\n", v.status.as_str());
    out += &format!("ring: {ctx}\nideal: {}\n", v.reduced);
    let engines: Vec<&str> = v.engines_run.iter().map(|e| e.as_str()).collect();
    out += &format!("engines: {}\n", engines.join(", "));
    for c in &v.certificates {
        out += &format!("certificate [{}]: {}\n", c.kind(), c.describe(ctx));
    }
    for n in &v.notes {
        out += &format!("note: {n}\n");
    }
    out
}

/// The status recorded in a verdict JSON document.
pub fn status_of(v: &Value) -> Option<Status> {
    match v.get("status")?.as_str()? {
        "golod" => Some(Status::Golod),
        "not_golod" => Some(Status::NotGolod),
        "inconclusive" => Some(Status::Inconclusive),
        _ => None,
    }
}

fn bad(what: &str) -> Error {
    Error::InvalidConfig(format!("malformed certificate: {what}"))
}

fn read_exponents(v: &Value, n: usize) -> Result<Vec<u32>> {
    let arr = v.as_array().ok_or_else(|| bad("exponent vector"))?;
    let out: Option<Vec<u32>> = arr.iter().map(|e| e.as_u64().and_then(|x| u32::try_from(x).ok())).collect();
    let out = out.ok_or_else(|| bad("exponent"))?;
    if out.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: out.len() });
    }
    Ok(out)
}

fn read_monomial(v: &Value, n: usize) -> Result<Monomial> {
    Ok(Monomial::new(read_exponents(&v["exponents"], n)?))
}

fn read_varset(v: &Value) -> Result<VarSet> {
    let arr = v["indices"].as_array().ok_or_else(|| bad("variable set"))?;
    let idx: Option<Vec<usize>> = arr.iter().map(|e| e.as_u64().map(|x| x as usize)).collect();
    VarSet::from_indices(idx.ok_or_else(|| bad("variable index"))?)
}

fn read_field(v: &Value) -> Result<FieldSpec> {
    match v.as_str().ok_or_else(|| bad("field"))? {
        "q" => Ok(FieldSpec::Rationals),
        s => {
            let p = s.strip_prefix("p:").and_then(|p| p.parse().ok()).ok_or_else(|| bad("field"))?;
            FieldSpec::prime(p)
        }
    }
}

fn read_bigint(v: &Value) -> Result<BigInt> {
    if let Some(x) = v.as_i64() {
        return Ok(BigInt::from(x));
    }
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| bad("integer"))
}

fn read_element(v: &Value, n: usize) -> Result<KoszulElement> {
    let multidegree = read_exponents(&v["multidegree"], n)?.into();
    let p = v["p"].as_u64().ok_or_else(|| bad("homological degree"))? as usize;
    let mut terms = Vec::new();
    for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
        let idx: Option<Vec<usize>> =
            t["subset"].as_array().ok_or_else(|| bad("subset"))?.iter().map(|e| e.as_u64().map(|x| x as usize)).collect();
        let s = VarSet::from_indices(idx.ok_or_else(|| bad("subset"))?)?;
        let c: Scalar = t["scalar"].as_str().and_then(|x| x.parse().ok()).ok_or_else(|| bad("scalar"))?;
        terms.push((s, c));
    }
    Ok(KoszulElement { multidegree, p, terms })
}

/// Rebuild a certificate from its JSON form, for replay.
pub fn read_certificate(v: &Value, n: usize) -> Result<Certificate> {
    let kind = v["kind"].as_str().ok_or_else(|| bad("kind"))?;
    Ok(match kind {
        "cond1_violation" => Certificate::Cond1Violation {
            s: read_varset(&v["S"])?,
            t: read_varset(&v["T"])?,
            f: read_monomial(&v["f"], n)?,
            g: read_monomial(&v["g"], n)?,
            product: read_monomial(&v["product"], n)?,
        },
        "cond2_violation" => Certificate::Cond2Violation {
            s: read_varset(&v["S"])?,
            t: read_varset(&v["T"])?,
            v: v["v"]["index"].as_u64().ok_or_else(|| bad("v"))? as usize,
            f: read_monomial(&v["f"], n)?,
            g: read_monomial(&v["g"], n)?,
            product: read_monomial(&v["product"], n)?,
        },
        "koszul_product_witness" => Certificate::KoszulProductWitness {
            field: read_field(&v["field"])?,
            witness: ProductWitness {
                left: read_element(&v["left"], n)?,
                right: read_element(&v["right"], n)?,
                left_index: v["left_index"].as_u64().ok_or_else(|| bad("left_index"))? as usize,
                right_index: v["right_index"].as_u64().ok_or_else(|| bad("right_index"))? as usize,
                product: read_element(&v["product"], n)?,
            },
        },
        "serre_gap_witness" => Certificate::SerreGapWitness {
            field: read_field(&v["field"])?,
            gap: SerreGap {
                index: v["index"].as_u64().ok_or_else(|| bad("index"))? as usize,
                left: read_bigint(&v["left"])?,
                right: read_bigint(&v["right"])?,
            },
        },
        other => return Err(bad(other)),
    })
}

pub fn triviality(r: &TrivialityReport, ctx: &RingContext) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "left": koszul_element(&w.left, ctx),
            "right": koszul_element(&w.right, ctx),
            "product": koszul_element(&w.product, ctx),
        })
    });
    json!({ "trivial": r.trivial, "pairs_checked": r.pairs_checked, "witness": witness })
}

pub fn betti(table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(p, a, dim)| json!({ "p": p, "multidegree": a.exponents(), "dim": dim }))
        .collect();
    json!({ "totals": table.totals, "entries": entries })
}

pub fn betti_text(table: &BettiTable) -> String {
    let totals: Vec<String> = table.totals.iter().map(|t| t.to_string()).collect();
    let mut out = format!("totals: ({})\n", totals.join(","));
    for (p, a, dim) in &table.entries {
        out += &format!("H_{p} {:?}: {dim}\n", a.exponents());
    }
    out
}

pub fn monomial_basis(r: &MonomialBasisReport, ctx: &RingContext) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| {
            json!({
                "multidegree": f.multidegree.exponents(),
                "homology_dimension": f.homology_dimension,
                "spanned_dimension": f.spanned_dimension,
                "unspanned": f.unspanned.iter().map(|z| koszul_element(z, ctx)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "p": r.p,
        "success": r.success(),
        "basis": r.basis.iter().map(|t| koszul_term(t, ctx)).collect::<Vec<_>>(),
        "failures": failures,
    })
}

pub fn terms_text(terms: &[KoszulTerm], ctx: &RingContext) -> String {
    terms.iter().map(|t| format!("{}\n", t.display(ctx))).collect()
}

fn completeness(c: Completeness) -> &'static str {
    match c {
        Completeness::Proven => "proven",
        Completeness::Heuristic => "heuristic",
        Completeness::PossiblyIncomplete => "possibly_incomplete",
    }
}

pub fn resolution(steps: &[ResolutionStep]) -> Value {
    let steps: Vec<Value> = steps
        .iter()
        .map(|s| {
            let graded: Map<String, Value> =
                s.graded_betti().into_iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
            json!({
                "index": s.index,
                "rank": s.rank(),
                "graded_betti": graded,
                "completeness": completeness(s.completeness),
                "degree_window": s.degree_window,
            })
        })
        .collect();
    json!({ "steps": steps })
}

pub fn comparison(r: &ComparisonReport) -> Value {
    json!({
        "order": r.order,
        "poincare": r.left.iter().map(bigint).collect::<Vec<_>>(),
        "serre_bound": r.right.iter().map(bigint).collect::<Vec<_>>(),
        "completeness": r.completeness.iter().map(|c| completeness(*c)).collect::<Vec<_>>(),
        "koszul_totals": r.koszul_totals,
        "equal_up_to_order": r.equal_up_to_order(),
        "gap": r.gap.as_ref().map(gap),
    })
}

fn series_text(c: &[BigInt]) -> String {
    let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

pub fn comparison_text(r: &ComparisonReport) -> String {
    let mut out = format!(
        "poincare: {}\nserre:    {}\n",
        series_text(&r.left),
        series_text(&r.right)
    );
    let flags: Vec<&str> = r.completeness.iter().map(|c| completeness(*c)).collect();
    out += &format!("completeness: {}\n", flags.join(","));
    match &r.gap {
        Some(g) => out += &format!("gap at t^{}: {} < {}\n", g.index, g.left, g.right),
        None if r.equal_up_to_order() => out += &format!("equal up to t^{}\n", r.order),
        None => out += "no proven gap\n",
    }
    out
}
