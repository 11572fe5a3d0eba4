//! Poincaré series of the residue field over `R = Q/I` and Serre's bound.
//!
//! The left side is read off a minimal multigraded free resolution of `k`
//! over `R`, built one multidegree at a time: in multidegree `a` the new
//! generators of `F_{i+1}` are a complement of the image of the generators
//! already found inside `ker(F_i -> F_{i-1})_a`. The right side is
//! `(1+t)^n / (1 - sum_i b_i t^{i+1})` with `b_i` the Koszul Betti numbers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::koszul::{betti_table, Enumeration};
use crate::linalg::{nullspace, ExactMatrix, FieldSpec, Scalar, Span};
use crate::ring::{monomials_of_degree, Monomial, MonomialIdeal, Multidegree};

/// Exact integer coefficients `c_0 .. c_N` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "a truncated series keeps at least c_0");
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c` at every order up to `order`, zero-padded.
    pub fn polynomial(coefficients: &[i64], order: usize) -> Self {
        let mut c: Vec<BigInt> = coefficients.iter().map(|&c| BigInt::from(c)).collect();
        c.resize(order + 1, BigInt::zero());
        c.truncate(order + 1);
        Self::new(c)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &BigInt {
        &self.coefficients[i]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse; the constant term must be `1`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coefficients[0].is_one() {
            return Err(Error::Internal("series inverse needs constant term 1".into()));
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = BigInt::one();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += &self.coefficients[j] * &inv[k - j];
            }
            inv[k] = -s;
        }
        Ok(Self::new(inv))
    }
}

/// `(1+t)^n / (1 - sum_{i>=1} b_i t^{i+1})` up to `t^order`.
/// `koszul_totals[i]` is `b_i`; index 0 is ignored.
pub fn serre_bound(n: usize, koszul_totals: &[BigInt], order: usize) -> TruncatedSeries {
    let mut numer = vec![BigInt::zero(); order + 1];
    let mut binom = BigInt::one();
    for (k, c) in numer.iter_mut().enumerate().take(n.min(order) + 1) {
        *c = binom.clone();
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    let mut denom = vec![BigInt::zero(); order + 1];
    denom[0] = BigInt::one();
    for (i, b) in koszul_totals.iter().enumerate().skip(1) {
        if i < order {
            denom[i + 1] -= b;
        }
    }
    let inv = TruncatedSeries::new(denom).inverse().expect("constant term is 1");
    TruncatedSeries::new(numer).mul(&inv)
}

/// `k`-basis of `R_d`: degree-`d` monomials outside `I`, in descending lex order.
pub fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    monomials_of_degree(ideal.nvars(), d)
        .into_iter()
        .filter(|m| !ideal.contains_monomial(m))
        .collect()
}

/// Top nonzero degree of an Artinian `R`, `None` if `R` is infinite-dimensional.
pub fn top_degree(ideal: &MonomialIdeal) -> Option<u32> {
    if ideal.is_unit() {
        return None;
    }
    if !ideal.is_artinian() {
        return None;
    }
    let mut top = 0;
    let mut d = 0;
    loop {
        if standard_monomials(ideal, d).is_empty() {
            return Some(top);
        }
        top = d;
        d += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// `R` is Artinian and the degree window exceeds the a-priori bound.
    Proven,
    /// No new generators near the top of the window; not a proof.
    Heuristic,
    /// New generators appeared near the top of the window.
    PossiblyIncomplete,
}

/// One free module `F_i` of the resolution and its map to `F_{i-1}`.
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub index: usize,
    pub generator_degrees: Vec<Multidegree>,
    /// `δ_i(g) = sum c_h x^{deg g - deg h} e_h`, as `(h, c_h)` pairs.
    pub images: Vec<Vec<(usize, Scalar)>>,
    pub completeness: Completeness,
    /// Largest total degree searched for generators of this module.
    pub degree_window: u64,
}

impl ResolutionStep {
    pub fn rank(&self) -> usize {
        self.generator_degrees.len()
    }

    /// Graded Betti numbers `β_{i,j}` keyed by internal total degree `j`.
    pub fn graded_betti(&self) -> Vec<(u64, usize)> {
        let mut m: HashMap<u64, usize> = HashMap::new();
        for d in &self.generator_degrees {
            *m.entry(d.total()).or_default() += 1;
        }
        let mut v: Vec<_> = m.into_iter().collect();
        v.sort();
        v
    }
}

/// The degree-`a` component of a free module: pairs (generator, monomial multiplier).
fn component(ideal: &MonomialIdeal, degrees: &[Multidegree], a: &Multidegree) -> Vec<usize> {
    degrees
        .iter()
        .enumerate()
        .filter(|(_, d)| {
            (*d).le(a) && !ideal.contains_monomial(&Monomial::from_degree(a.checked_sub(d).expect("d <= a")))
        })
        .map(|(k, _)| k)
        .collect()
}

/// Matrix of `δ` restricted to degree `a`, rows indexed by `target`, columns by `source`.
fn map_in_degree(
    field: FieldSpec,
    images: &[Vec<(usize, Scalar)>],
    source: &[usize],
    target: &[usize],
) -> ExactMatrix {
    let row_of: HashMap<usize, usize> = target.iter().enumerate().map(|(r, &h)| (h, r)).collect();
    let mut cols = Vec::with_capacity(source.len());
    for &g in source {
        let mut col = vec![Scalar::zero(); target.len()];
        for (h, c) in &images[g] {
            // the term vanishes when x^{a - deg h} lies in I
            if let Some(&r) = row_of.get(h) {
                col[r] = c.clone();
            }
        }
        cols.push(col);
    }
    ExactMatrix::from_columns(field, target.len(), &cols).expect("columns sized to the target")
}

/// Multidegrees of total degree `lo..=hi`, grouped by increasing total degree.
fn degrees_upto(n: usize, lo: u64, hi: u64) -> Vec<Multidegree> {
    (lo..=hi)
        .flat_map(|d| monomials_of_degree(n, d as u32))
        .map(Monomial::into_degree)
        .collect()
}

/// Minimal multigraded resolution of `k` over `R = Q/I`, steps `F_0 .. F_{i_max}`,
/// searching generators up to internal total degree `d_max`.
pub fn resolve_residue_field(
    ideal: &MonomialIdeal,
    i_max: usize,
    d_max: u64,
    field: FieldSpec,
) -> Result<Vec<ResolutionStep>> {
    if !ideal.in_m_squared() {
        return Err(Error::NotInMSquared);
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal { op: "resolution of k", which: "unit" });
    }
    if d_max < i_max as u64 {
        return Err(Error::InvalidConfig(format!("degree window {d_max} below homological degree {i_max}")));
    }
    let n = ideal.nvars();
    let top = top_degree(ideal);
    let window_slack = ideal.max_generator_degree().max(1);

    let mut steps = vec![ResolutionStep {
        index: 0,
        generator_degrees: vec![Multidegree::zero(n)],
        images: vec![Vec::new()],
        completeness: Completeness::Proven,
        degree_window: d_max,
    }];

    for i in 0..i_max {
        let prev = &steps[i];
        // generators of F_{i+1} have internal degree >= i + 1, and for Artinian R
        // at most (i + 1) * top
        let hi = match top {
            Some(s) => d_max.min((i as u64 + 1) * s as u64),
            None => d_max,
        };
        let mut degrees: Vec<Multidegree> = Vec::new();
        let mut images: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for a in degrees_upto(n, i as u64 + 1, hi) {
            let here = component(ideal, &prev.generator_degrees, &a);
            if here.is_empty() {
                continue;
            }
            let kernel: Vec<Vec<Scalar>> = if i == 0 {
                // the augmentation R -> k vanishes in positive degree
                vec![vec![Scalar::one()]]
            } else {
                let below = component(ideal, &steps[i - 1].generator_degrees, &a);
                let d = map_in_degree(field, &prev.images, &here, &below);
                nullspace(&d)
            };
            if kernel.is_empty() {
                continue;
            }
            let found_here = component(ideal, &degrees, &a);
            let mut span = Span::new(field, here.len());
            let d_next = map_in_degree(field, &images, &found_here, &here);
            for c in 0..d_next.cols() {
                span.insert(&d_next.column(c));
            }
            for z in kernel {
                if span.insert(&z) {
                    degrees.push(a.clone());
                    images.push(
                        here.iter()
                            .zip(&z)
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(&h, c)| (h, c.clone()))
                            .collect(),
                    );
                }
            }
        }
        let completeness = match top {
            Some(s) if d_max >= (i as u64 + 1) * s as u64 => Completeness::Proven,
            _ => {
                let cutoff = d_max.saturating_sub(window_slack);
                if degrees.iter().any(|d| d.total() > cutoff) {
                    Completeness::PossiblyIncomplete
                } else {
                    Completeness::Heuristic
                }
            }
        };
        let completeness = match (completeness, steps[i].completeness) {
            (_, Completeness::PossiblyIncomplete) => Completeness::PossiblyIncomplete,
            (Completeness::Proven, Completeness::Heuristic) => Completeness::Heuristic,
            (c, _) => c,
        };
        steps.push(ResolutionStep {
            index: i + 1,
            generator_degrees: degrees,
            images,
            completeness,
            degree_window: hi,
        });
    }
    Ok(steps)
}

/// Does every map send generators into `m F_{i-1}` (no unit entries)?
pub fn is_minimal(steps: &[ResolutionStep]) -> bool {
    steps.iter().skip(1).all(|s| {
        let below = &steps[s.index - 1].generator_degrees;
        s.generator_degrees
            .iter()
            .zip(&s.images)
            .all(|(d, img)| img.iter().all(|(h, _)| &below[*h] != d))
    })
}

/// The default internal-degree window for `i_max` homological steps.
pub fn default_degree_window(ideal: &MonomialIdeal, i_max: usize) -> u64 {
    let by_generators = i_max as u64 * ideal.max_generator_degree().max(1);
    match top_degree(ideal) {
        Some(s) => by_generators.max(i_max as u64 * s as u64),
        None => by_generators,
    }
    .max(i_max as u64)
}

pub fn poincare_coefficients(steps: &[ResolutionStep]) -> TruncatedSeries {
    TruncatedSeries::new(steps.iter().map(|s| BigInt::from(s.rank())).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreGap {
    pub index: usize,
    pub left: BigInt,
    pub right: BigInt,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub order: usize,
    pub left: Vec<BigInt>,
    pub right: Vec<BigInt>,
    pub completeness: Vec<Completeness>,
    pub koszul_totals: Vec<usize>,
    /// First index with a proven-complete left coefficient strictly below the bound.
    pub gap: Option<SerreGap>,
}

impl ComparisonReport {
    /// Equal at every index up to the order (evidence only, never a verdict).
    pub fn equal_up_to_order(&self) -> bool {
        self.left == self.right
    }
}

/// Compare the Poincaré series of `k` over `R` with Serre's bound up to `t^order`.
pub fn serre_compare(ideal: &MonomialIdeal, order: usize, field: FieldSpec) -> Result<ComparisonReport> {
    if !ideal.in_m_squared() {
        return Err(Error::NotInMSquared);
    }
    let d_max = default_degree_window(ideal, order);
    let steps = resolve_residue_field(ideal, order, d_max, field)?;
    let left = poincare_coefficients(&steps);
    let totals = betti_table(ideal, field, Enumeration::FullBox)?.totals;
    let right = serre_bound(
        ideal.nvars(),
        &totals.iter().map(|&b| BigInt::from(b)).collect::<Vec<_>>(),
        order,
    );
    // A truncated resolution undercounts, and the true coefficient never
    // exceeds the bound, so reaching the bound already proves exactness.
    let completeness: Vec<Completeness> = steps
        .iter()
        .enumerate()
        .map(|(i, s)| if left.coefficient(i) == right.coefficient(i) { Completeness::Proven } else { s.completeness })
        .collect();
    let mut gap = None;
    for i in 0..=order {
        let (l, r) = (left.coefficient(i), right.coefficient(i));
        if completeness[i] != Completeness::PossiblyIncomplete && l > r {
            return Err(Error::Internal(format!("Serre inequality violated at t^{i}: {l} > {r}")));
        }
        if gap.is_none() && completeness[i] == Completeness::Proven && l < r {
            gap = Some(SerreGap { index: i, left: l.clone(), right: r.clone() });
        }
    }
    Ok(ComparisonReport {
        order,
        left: left.coefficients().to_vec(),
        right: right.coefficients().to_vec(),
        completeness,
        koszul_totals: totals,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::product;
    use crate::ring::RingContext;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&RingContext::standard(n).unwrap(), gens).unwrap()
    }

    fn m_squared(n: usize) -> MonomialIdeal {
        let ctx = RingContext::standard(n).unwrap();
        let m = MonomialIdeal::maximal(&ctx);
        product(&m, &m).unwrap()
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coefficients().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn standard_monomial_counts() {
        assert_eq!(standard_monomials(&m_squared(3), 1).len(), 3);
        assert!(standard_monomials(&m_squared(3), 2).is_empty());
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let ctx = i.context().clone();
        let shown: Vec<String> = standard_monomials(&i, 2).iter().map(|m| m.display(&ctx).to_string()).collect();
        assert_eq!(shown, vec!["x*y", "x*z", "y^2", "z^2"]);
    }

    #[test]
    fn serre_bounds() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(ints(&serre_bound(3, &b(&[1, 6, 8, 3]), 5)), vec![1, 3, 9, 27, 81, 243]);
        assert_eq!(ints(&serre_bound(3, &b(&[1, 3, 3, 1]), 3)), vec![1, 3, 6, 13]);
        assert_eq!(ints(&serre_bound(3, &b(&[1, 0, 0, 0]), 5)), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn series_inverse() {
        let s = TruncatedSeries::from_i64(&[1, -1, 0, 0]);
        assert_eq!(ints(&s.inverse().unwrap()), vec![1, 1, 1, 1]);
        assert!(TruncatedSeries::from_i64(&[2, 1]).inverse().is_err());
    }

    #[test]
    fn hypersurface_resolution_is_periodic() {
        let i = ideal(1, &[&[2]]);
        let steps = resolve_residue_field(&i, 6, 12, FieldSpec::Rationals).unwrap();
        assert!(steps.iter().all(|s| s.rank() == 1));
        assert!(steps.iter().all(|s| s.completeness == Completeness::Proven));
        assert!(is_minimal(&steps));
    }

    #[test]
    fn m_squared_resolution() {
        let steps = resolve_residue_field(&m_squared(3), 4, 8, FieldSpec::Rationals).unwrap();
        assert_eq!(ints(&poincare_coefficients(&steps)), vec![1, 3, 9, 27, 81]);
        assert!(is_minimal(&steps));
    }

    #[test]
    fn complete_intersection_resolution() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let steps = resolve_residue_field(&i, 5, default_degree_window(&i, 5), FieldSpec::Rationals).unwrap();
        assert_eq!(ints(&poincare_coefficients(&steps)), vec![1, 2, 3, 4, 5, 6]);
        let i3 = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let steps = resolve_residue_field(&i3, 4, default_degree_window(&i3, 4), FieldSpec::Rationals).unwrap();
        assert_eq!(ints(&poincare_coefficients(&steps)), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn polynomial_ring() {
        let zero = MonomialIdeal::zero(&RingContext::standard(1).unwrap());
        let steps = resolve_residue_field(&zero, 3, 6, FieldSpec::Rationals).unwrap();
        assert_eq!(ints(&poincare_coefficients(&steps)), vec![1, 1, 0, 0]);
    }

    #[test]
    fn comparisons() {
        let ci = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let r = serre_compare(&ci, 3, FieldSpec::Rationals).unwrap();
        assert_eq!(r.gap, Some(SerreGap { index: 3, left: BigInt::from(10), right: BigInt::from(13) }));
        let r = serre_compare(&m_squared(3), 5, FieldSpec::Rationals).unwrap();
        assert!(r.equal_up_to_order());
        assert!(r.gap.is_none());
        let r = serre_compare(&ideal(1, &[&[2]]), 6, FieldSpec::Rationals).unwrap();
        assert!(r.equal_up_to_order());
    }

    #[test]
    fn rejects_linear_generators() {
        assert!(resolve_residue_field(&ideal(2, &[&[1, 0]]), 2, 4, FieldSpec::Rationals).is_err());
    }
}
