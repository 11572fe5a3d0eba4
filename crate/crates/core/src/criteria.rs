//! Colon-ideal tests for Golodness and the combined verdict.
//!
//! For `I ⊆ m^2` in any number of variables two families of inclusions are
//! necessary for Golodness, for every split of the variables:
//!
//! 1. `[I : (S)][I : (T)] ⊆ I` when `S ⊔ T` is all variables;
//! 2. `[I : (S)][I : (T)] ⊆ x_v [I : (S ∪ T)] + I` when `S ⊔ T ⊔ {v}` is.
//!
//! In three variables these conditions are also sufficient, which is what
//! [`golod3`] decides. Elsewhere [`verdict`] can only refute Golodness.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::ideal::{colon_vars, eliminate_variable_generators, product, sum, VarSet};
use crate::koszul::{products_trivial, verify_product_witness, ProductWitness};
use crate::linalg::FieldSpec;
use crate::poincare::{serre_compare, SerreGap};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `f ∈ I:(S)`, `g ∈ I:(T)` and `fg ∉ I`.
    Cond1Violation { s: VarSet, t: VarSet, f: Monomial, g: Monomial, product: Monomial },
    /// `f ∈ I:(S)`, `g ∈ I:(T)` and `fg ∉ x_v [I:(S ∪ T)] + I`.
    Cond2Violation { s: VarSet, t: VarSet, v: usize, f: Monomial, g: Monomial, product: Monomial },
    KoszulProductWitness { field: FieldSpec, witness: ProductWitness },
    SerreGapWitness { field: FieldSpec, gap: SerreGap },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Cond1Violation { .. } => "cond1_violation",
            Certificate::Cond2Violation { .. } => "cond2_violation",
            Certificate::KoszulProductWitness { .. } => "koszul_product_witness",
            Certificate::SerreGapWitness { .. } => "serre_gap_witness",
        }
    }

    /// Re-derive the violation from scratch against `ideal`.
    pub fn replay(&self, ideal: &MonomialIdeal) -> Result<bool> {
        match self {
            Certificate::Cond1Violation { s, t, f, g, product } => {
                let fs = colon_vars(ideal, *s)?.member(f)?;
                let gt = colon_vars(ideal, *t)?.member(g)?;
                Ok(fs && gt && &f.checked_mul(g)? == product && !ideal.member(product)?)
            }
            Certificate::Cond2Violation { s, t, v, f, g, product } => {
                let fs = colon_vars(ideal, *s)?.member(f)?;
                let gt = colon_vars(ideal, *t)?.member(g)?;
                let rhs = condition2_rhs(ideal, *s, *t, *v)?;
                Ok(fs && gt && &f.checked_mul(g)? == product && !rhs.member(product)?)
            }
            Certificate::KoszulProductWitness { field, witness } => verify_product_witness(ideal, witness, *field),
            Certificate::SerreGapWitness { field, gap } => {
                let report = serre_compare(ideal, gap.index, *field)?;
                Ok(report.gap.as_ref() == Some(gap))
            }
        }
    }

    pub fn describe(&self, ctx: &RingContext) -> String {
        match self {
            Certificate::Cond1Violation { s, t, f, g, product } => format!(
                "{} in I:{}, {} in I:{}, but {} not in I",
                f.display(ctx),
                s.display(ctx),
                g.display(ctx),
                t.display(ctx),
                product.display(ctx)
            ),
            Certificate::Cond2Violation { s, t, v, f, g, product } => format!(
                "{} in I:{}, {} in I:{}, but {} not in {}*[I:{}] + I",
                f.display(ctx),
                s.display(ctx),
                g.display(ctx),
                t.display(ctx),
                product.display(ctx),
                ctx.name(*v),
                s.union(*t).display(ctx)
            ),
            Certificate::KoszulProductWitness { witness, .. } => format!(
                "({}) * ({}) = {} is not a boundary",
                witness.left.display(ctx),
                witness.right.display(ctx),
                witness.product.display(ctx)
            ),
            Certificate::SerreGapWitness { gap, .. } => format!(
                "Poincare coefficient {} < Serre bound {} at t^{}",
                gap.left, gap.right, gap.index
            ),
        }
    }
}

fn check_split(ideal: &MonomialIdeal, s: VarSet, t: VarSet, v: Option<usize>) -> Result<()> {
    let n = ideal.nvars();
    let full = VarSet::full(n);
    let mut cover = s.union(t);
    if s.is_empty() {
        return Err(Error::InvalidSplit("S must be nonempty".into()));
    }
    if !s.is_disjoint(t) {
        return Err(Error::InvalidSplit("S and T overlap".into()));
    }
    if let Some(v) = v {
        ideal.context().check_index(v)?;
        if cover.contains(v) {
            return Err(Error::InvalidSplit("x_v must lie outside S and T".into()));
        }
        cover = cover.union(VarSet::singleton(v));
    }
    if cover != full {
        return Err(Error::InvalidSplit("the parts must cover every variable exactly once".into()));
    }
    Ok(())
}

fn condition2_rhs(ideal: &MonomialIdeal, s: VarSet, t: VarSet, v: usize) -> Result<MonomialIdeal> {
    let xv = MonomialIdeal::of_variables(ideal.context(), &[v])?;
    sum(&product(&xv, &colon_vars(ideal, s.union(t))?)?, ideal)
}

fn first_escape(a: &MonomialIdeal, b: &MonomialIdeal, target: &MonomialIdeal) -> Result<Option<(Monomial, Monomial, Monomial)>> {
    for f in a.generators() {
        for g in b.generators() {
            let fg = f.checked_mul(g)?;
            if !target.contains_monomial(&fg) {
                return Ok(Some((f.clone(), g.clone(), fg)));
            }
        }
    }
    Ok(None)
}

/// `[I:(S)][I:(T)] ⊆ I`, with `S ⊔ T` all variables; `T` may be empty.
pub fn check_condition1(ideal: &MonomialIdeal, s: VarSet, t: VarSet) -> Result<Option<Certificate>> {
    check_split(ideal, s, t, None)?;
    if t.is_empty() {
        return Ok(None);
    }
    let escape = first_escape(&colon_vars(ideal, s)?, &colon_vars(ideal, t)?, ideal)?;
    Ok(escape.map(|(f, g, product)| Certificate::Cond1Violation { s, t, f, g, product }))
}

/// `[I:(S)][I:(T)] ⊆ x_v[I:(S ∪ T)] + I`, with `S ⊔ T ⊔ {v}` all variables.
pub fn check_condition2(ideal: &MonomialIdeal, s: VarSet, t: VarSet, v: usize) -> Result<Option<Certificate>> {
    check_split(ideal, s, t, Some(v))?;
    if t.is_empty() {
        return Ok(None);
    }
    let rhs = condition2_rhs(ideal, s, t, v)?;
    let escape = first_escape(&colon_vars(ideal, s)?, &colon_vars(ideal, t)?, &rhs)?;
    Ok(escape.map(|(f, g, product)| Certificate::Cond2Violation { s, t, v, f, g, product }))
}

/// Unordered splits of `vars` into two nonempty parts. The first part is the
/// smaller one, or the one holding the lowest index on a tie.
fn bipartitions(vars: VarSet) -> Vec<(VarSet, VarSet)> {
    let idx = vars.indices();
    let k = idx.len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << k) - 1 {
        let s = VarSet::from_indices(idx.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &i)| i))
            .expect("indices below 32");
        let t = vars.difference(s);
        let keep = match s.len().cmp(&t.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => s.contains(idx[0]),
        };
        if keep {
            out.push((s, t));
        }
    }
    out.sort_by_key(|(s, _)| (s.len(), s.indices()));
    out
}

/// Every violated instance of both condition families, over all splits.
pub fn nec_all(ideal: &MonomialIdeal) -> Result<Vec<Certificate>> {
    if !ideal.in_m_squared() {
        return Err(Error::NotInMSquared);
    }
    let n = ideal.nvars();
    let full = VarSet::full(n);
    let mut certs = Vec::new();
    for (s, t) in bipartitions(full) {
        certs.extend(check_condition1(ideal, s, t)?);
    }
    for v in (0..n).rev() {
        for (s, t) in bipartitions(full.without(v)) {
            certs.extend(check_condition2(ideal, s, t, v)?);
        }
    }
    Ok(certs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Golod,
    NotGolod,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Golod => "golod",
            Status::NotGolod => "not_golod",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// The exact three-variable decision.
    ThreeVariable,
    /// Colon conditions over all splits.
    Colon,
    /// Triviality of the Koszul homology product.
    KoszulProduct,
    /// Poincaré series against Serre's bound.
    SerreComparison,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::ThreeVariable => "three_variable",
            Engine::Colon => "colon",
            Engine::KoszulProduct => "koszul_product",
            Engine::SerreComparison => "serre_comparison",
        }
    }

    pub fn parse(s: &str) -> Option<Engine> {
        match s {
            "three_variable" | "golod3" => Some(Engine::ThreeVariable),
            "colon" | "nec" => Some(Engine::Colon),
            "koszul_product" | "koszul" => Some(Engine::KoszulProduct),
            "serre_comparison" | "serre" => Some(Engine::SerreComparison),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GolodVerdict {
    pub status: Status,
    pub certificates: Vec<Certificate>,
    pub engines_run: Vec<Engine>,
    /// The ideal the engines actually examined (after removing linear generators).
    pub reduced: MonomialIdeal,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

/// The exact decision for `I ⊆ m^2` in three variables.
pub fn golod3(ideal: &MonomialIdeal) -> Result<GolodVerdict> {
    let start = Instant::now();
    if ideal.nvars() != 3 {
        return Err(Error::WrongVariableCount { expected: 3, found: ideal.nvars() });
    }
    if !ideal.in_m_squared() {
        return Err(Error::NotInMSquared);
    }
    if ideal.is_zero() {
        return Ok(GolodVerdict {
            status: Status::Golod,
            certificates: Vec::new(),
            engines_run: vec![Engine::ThreeVariable],
            reduced: ideal.clone(),
            notes: vec!["zero ideal: R is the polynomial ring".into()],
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    let certificates = nec_all(ideal)?;
    let status = if certificates.is_empty() { Status::Golod } else { Status::NotGolod };
    Ok(GolodVerdict {
        status,
        certificates,
        engines_run: vec![Engine::ThreeVariable],
        reduced: ideal.clone(),
        notes: Vec::new(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[derive(Clone, Debug)]
pub struct VerdictOptions {
    /// Engines for rings that are not three-variable, run in this order.
    pub engines: Vec<Engine>,
    pub field: FieldSpec,
    pub series_depth: usize,
    /// Skip remaining engines once one has produced a certificate.
    pub stop_at_first: bool,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        Self {
            engines: vec![Engine::Colon, Engine::KoszulProduct, Engine::SerreComparison],
            field: FieldSpec::Rationals,
            series_depth: 4,
            stop_at_first: true,
        }
    }
}

/// Remove linear generators, then decide exactly in three variables or run
/// the necessary-condition engines otherwise.
pub fn verdict(ideal: &MonomialIdeal, options: &VerdictOptions) -> Result<GolodVerdict> {
    let start = Instant::now();
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal { op: "Golod verdict", which: "unit" });
    }
    let (reduced, ctx) = eliminate_variable_generators(ideal);
    let mut notes = Vec::new();
    if ctx.nvars() != ideal.nvars() {
        let dropped: Vec<&str> = ideal
            .context()
            .names()
            .iter()
            .filter(|n| ctx.index_of(n).is_none())
            .map(String::as_str)
            .collect();
        notes.push(format!("removed linear generators {}; working in {}", dropped.join(","), ctx));
    }
    if ctx.nvars() == 3 {
        let mut v = golod3(&reduced)?;
        notes.append(&mut v.notes);
        v.notes = notes;
        v.elapsed_ms = start.elapsed().as_millis();
        return Ok(v);
    }
    if reduced.is_zero() {
        notes.push("reduced ideal is zero: the quotient is a polynomial ring; no engine applies".into());
        return Ok(GolodVerdict {
            status: Status::Inconclusive,
            certificates: Vec::new(),
            engines_run: Vec::new(),
            reduced,
            notes,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }

    let mut certificates = Vec::new();
    let mut engines_run = Vec::new();
    for &engine in &options.engines {
        if options.stop_at_first && !certificates.is_empty() {
            break;
        }
        match engine {
            Engine::ThreeVariable => continue,
            Engine::Colon => certificates.extend(nec_all(&reduced)?),
            Engine::KoszulProduct => {
                let report = products_trivial(&reduced, options.field)?;
                if let Some(witness) = report.witness {
                    certificates.push(Certificate::KoszulProductWitness { field: options.field, witness });
                }
            }
            Engine::SerreComparison => {
                let report = serre_compare(&reduced, options.series_depth, options.field)?;
                if let Some(gap) = report.gap {
                    certificates.push(Certificate::SerreGapWitness { field: options.field, gap });
                } else if !report.equal_up_to_order() {
                    notes.push("Poincare series comparison: some coefficients are not proven complete".into());
                }
            }
        }
        engines_run.push(engine);
    }
    let status = if certificates.is_empty() {
        notes.push(format!(
            "no sufficient criterion outside three variables; {} engine(s) found no obstruction",
            engines_run.len()
        ));
        Status::Inconclusive
    } else {
        Status::NotGolod
    };
    Ok(GolodVerdict { status, certificates, engines_run, reduced, notes, elapsed_ms: start.elapsed().as_millis() })
}
