//! Multigraded Koszul homology of `R = Q/I` for a monomial ideal `I`.
//!
//! The Koszul complex `K^R` splits into finite strands, one per multidegree
//! `a`. In strand `a` the degree-`p` basis is the set of subsets `S` with
//! `|S| = p`, `e_S <= a` and `x^{a - e_S}` not in `I`; the element is
//! `x^{a - e_S} e_S`. The differential sends `e_S` to
//! `sum_j (-1)^j x_{s_j} e_{S - s_j}` (zero-based `j`), and a term vanishes
//! when its coefficient monomial falls into `I`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::VarSet;
use crate::linalg::{nullspace, ExactMatrix, FieldSpec, Scalar, Span};
use crate::ring::{box_points, Monomial, MonomialIdeal, Multidegree, RingContext};

/// `u * e_S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KoszulTerm {
    pub coefficient: Monomial,
    pub subset: VarSet,
}

impl KoszulTerm {
    pub fn multidegree(&self) -> Multidegree {
        let mut e = self.coefficient.exponents().to_vec();
        for i in self.subset.iter() {
            e[i] += 1;
        }
        Multidegree::new(e)
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> impl fmt::Display + 'a {
        TermDisplay { coefficient: &self.coefficient, subset: self.subset, ctx }
    }
}

struct TermDisplay<'a> {
    coefficient: &'a Monomial,
    subset: VarSet,
    ctx: &'a RingContext,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coefficient.is_one() {
            write!(f, "{}*", self.coefficient.display(self.ctx))?;
        }
        write!(f, "e{}", self.subset.display(self.ctx))
    }
}

/// Subsets of `{0..n}` of size `p`, lexicographic in their sorted index lists.
pub fn subsets_of_size(n: usize, p: usize) -> Vec<VarSet> {
    (0..n)
        .combinations(p)
        .map(|c| VarSet::from_indices(c).expect("index below 32"))
        .collect()
}

/// `sign(S, T) = (-1)^{#{(s, t) : s > t}}`, the sign of `e_S ∧ e_T = ± e_{S ∪ T}`.
pub fn wedge_sign(s: VarSet, t: VarSet) -> i64 {
    let inversions: usize = t.iter().map(|ti| s.iter().filter(|&si| si > ti).count()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The coefficient monomial `x^{a - e_S}`, if `e_S <= a`.
fn coefficient_of(a: &Multidegree, s: VarSet) -> Option<Monomial> {
    let mut e = a.exponents().to_vec();
    for i in s.iter() {
        if i >= e.len() || e[i] == 0 {
            return None;
        }
        e[i] -= 1;
    }
    Some(Monomial::new(e))
}

/// A homogeneous element of `K^R`: a multidegree, a homological degree and
/// scalar coefficients on subsets. The monomial part of each term is implied
/// by the multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulElement {
    pub multidegree: Multidegree,
    pub p: usize,
    pub terms: Vec<(VarSet, Scalar)>,
}

impl KoszulElement {
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }

    pub fn koszul_terms(&self) -> Vec<(Scalar, KoszulTerm)> {
        self.terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| {
                let coefficient = coefficient_of(&self.multidegree, *s).expect("term fits its multidegree");
                (c.clone(), KoszulTerm { coefficient, subset: *s })
            })
            .collect()
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> impl fmt::Display + 'a {
        ElementDisplay { elem: self, ctx }
    }
}

struct ElementDisplay<'a> {
    elem: &'a KoszulElement,
    ctx: &'a RingContext,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.elem.koszul_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, t)) in terms.iter().enumerate() {
            let negative = c < &Scalar::zero();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", t.display(self.ctx))?;
        }
        Ok(())
    }
}

/// One multidegree strand of the Koszul complex of `R`.
#[derive(Clone, Debug)]
pub struct StrandComplex {
    ideal: MonomialIdeal,
    multidegree: Multidegree,
    field: FieldSpec,
    bases: Vec<Vec<VarSet>>,
    // differentials[p] : C_p -> C_{p-1} for p in 0..=n+1
    differentials: Vec<ExactMatrix>,
}

pub fn build_strand(ideal: &MonomialIdeal, a: &Multidegree, field: FieldSpec) -> Result<StrandComplex> {
    let n = ideal.nvars();
    if a.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.nvars() });
    }
    let bases: Vec<Vec<VarSet>> = (0..=n)
        .map(|p| {
            subsets_of_size(n, p)
                .into_iter()
                .filter(|&s| coefficient_of(a, s).is_some_and(|u| !ideal.contains_monomial(&u)))
                .collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(n + 2);
    differentials.push(ExactMatrix::zeros(field, 0, bases[0].len()));
    for p in 1..=n {
        let (rows, cols) = (&bases[p - 1], &bases[p]);
        let index: HashMap<VarSet, usize> = rows.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut d = ExactMatrix::zeros(field, rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            for (j, i) in s.iter().enumerate() {
                // rows only contain subsets whose coefficient is outside I
                if let Some(&r) = index.get(&s.without(i)) {
                    d.set_i64(r, c, if j % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        differentials.push(d);
    }
    differentials.push(ExactMatrix::zeros(field, bases[n].len(), 0));
    Ok(StrandComplex { ideal: ideal.clone(), multidegree: a.clone(), field, bases, differentials })
}

impl StrandComplex {
    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    /// `B_p(a)`; empty outside `0..=n`.
    pub fn basis(&self, p: usize) -> &[VarSet] {
        self.bases.get(p).map_or(&[], Vec::as_slice)
    }

    /// `∂_p : C_p -> C_{p-1}`.
    pub fn differential(&self, p: usize) -> ExactMatrix {
        match self.differentials.get(p) {
            Some(d) => d.clone(),
            None => ExactMatrix::zeros(self.field, self.basis(p - 1).len(), 0),
        }
    }

    fn differential_ref(&self, p: usize) -> Option<&ExactMatrix> {
        self.differentials.get(p)
    }

    /// Does `∂_p ∘ ∂_{p+1}` vanish for every `p`?
    pub fn is_complex(&self) -> bool {
        (1..self.top_degree() + 1).all(|p| {
            let prod = self.differentials[p]
                .mul(&self.differentials[p + 1])
                .expect("consecutive differentials compose");
            prod.is_zero()
        })
    }

    /// The coordinate vector of `elem` in `B_p(a)`; terms whose coefficient
    /// lies in `I` are zero in `R` and are dropped.
    pub fn vector_of(&self, elem: &KoszulElement) -> Result<Vec<Scalar>> {
        if elem.multidegree != self.multidegree {
            return Err(Error::Internal("element lives in a different strand".into()));
        }
        let basis = self.basis(elem.p);
        let mut v = vec![Scalar::zero(); basis.len()];
        for (s, c) in &elem.terms {
            if let Some(pos) = basis.iter().position(|b| b == s) {
                v[pos] = self.field.add(&v[pos], &self.field.embed(c)?);
            }
        }
        Ok(v)
    }

    pub fn element(&self, p: usize, v: &[Scalar]) -> KoszulElement {
        KoszulElement {
            multidegree: self.multidegree.clone(),
            p,
            terms: self
                .basis(p)
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(s, c)| (*s, c.clone()))
                .collect(),
        }
    }

    pub fn is_cycle(&self, p: usize, v: &[Scalar]) -> Result<bool> {
        if p == 0 {
            return Ok(true);
        }
        Ok(self.differential(p).mul_vec(v)?.iter().all(Zero::is_zero))
    }

    /// The span of the boundaries `im ∂_{p+1}` inside `C_p`.
    pub fn boundary_span(&self, p: usize) -> Span {
        let mut span = Span::new(self.field, self.basis(p).len());
        if let Some(d) = self.differential_ref(p + 1) {
            for c in 0..d.cols() {
                span.insert(&d.column(c));
            }
        }
        span
    }

    pub fn is_boundary(&self, p: usize, v: &[Scalar]) -> bool {
        self.boundary_span(p).contains(v)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .enumerate()
            .map(|(p, b)| if p % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }
}

/// A basis of `H_p` in one strand, by representative cycles.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub multidegree: Multidegree,
    pub p: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

impl HomologyBasis {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }
}

/// Cycles extending an echelon basis of the boundaries, taken in nullspace order.
pub fn homology(strand: &StrandComplex, p: usize) -> HomologyBasis {
    let mut representatives = Vec::new();
    if p <= strand.top_degree() {
        let mut span = strand.boundary_span(p);
        let cycles = nullspace(&strand.differentials[p]);
        for z in cycles {
            if span.insert(&z) {
                representatives.push(z);
            }
        }
    }
    HomologyBasis { multidegree: strand.multidegree.clone(), p, representatives }
}

/// Which multidegrees to scan for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Enumeration {
    /// Every `a` with `0 <= a <= ` the generators' componentwise maximum.
    #[default]
    FullBox,
    /// Joins of subsets of generator exponents (the lcm lattice), plus `0`.
    LcmClosure,
}

pub fn relevant_multidegrees(ideal: &MonomialIdeal, enumeration: Enumeration) -> Result<Vec<Multidegree>> {
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal { op: "Koszul homology", which: "unit" });
    }
    Ok(match enumeration {
        Enumeration::FullBox => box_points(&ideal.bounding_box()).collect(),
        Enumeration::LcmClosure => {
            let mut set: BTreeSet<Multidegree> = BTreeSet::new();
            set.insert(Multidegree::zero(ideal.nvars()));
            for g in ideal.generators() {
                let joined: Vec<Multidegree> = set.iter().map(|s| s.join(g.degree())).collect();
                set.extend(joined);
            }
            set.into_iter().collect()
        }
    })
}

/// Homology dimensions by homological and multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: Vec<(usize, Multidegree, usize)>,
    pub totals: Vec<usize>,
}

/// Strands and homology bases over all relevant multidegrees.
pub struct KoszulHomology {
    ideal: MonomialIdeal,
    field: FieldSpec,
    strands: Vec<StrandComplex>,
    // homology[k][p] for strands[k]
    homology: Vec<Vec<HomologyBasis>>,
}

impl KoszulHomology {
    pub fn compute(ideal: &MonomialIdeal, field: FieldSpec, enumeration: Enumeration) -> Result<Self> {
        let degrees = relevant_multidegrees(ideal, enumeration)?;
        let n = ideal.nvars();
        let computed: Vec<(StrandComplex, Vec<HomologyBasis>)> = degrees
            .par_iter()
            .map(|a| {
                let strand = build_strand(ideal, a, field)?;
                let hs = (0..=n).map(|p| homology(&strand, p)).collect();
                Ok((strand, hs))
            })
            .collect::<Result<_>>()?;
        let (strands, homology) = computed.into_iter().unzip();
        Ok(Self { ideal: ideal.clone(), field, strands, homology })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn strands(&self) -> &[StrandComplex] {
        &self.strands
    }

    pub fn homology_at(&self, k: usize, p: usize) -> &HomologyBasis {
        &self.homology[k][p]
    }

    pub fn betti_table(&self) -> BettiTable {
        let n = self.ideal.nvars();
        let mut totals = vec![0; n + 1];
        let mut entries = Vec::new();
        for (strand, hs) in self.strands.iter().zip(&self.homology) {
            for h in hs {
                if h.dimension() > 0 {
                    totals[h.p] += h.dimension();
                    entries.push((h.p, strand.multidegree.clone(), h.dimension()));
                }
            }
        }
        entries.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        BettiTable { entries, totals }
    }

    /// Every representative of positive homological degree, by `p` and then
    /// by multidegree in descending lex order.
    pub fn positive_representatives(&self) -> Vec<KoszulElement> {
        let mut out = Vec::new();
        for p in 1..=self.ideal.nvars() {
            for (strand, hs) in self.strands.iter().zip(&self.homology).rev() {
                for z in &hs[p].representatives {
                    out.push(strand.element(p, z));
                }
            }
        }
        out
    }
}

pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec, enumeration: Enumeration) -> Result<BettiTable> {
    Ok(KoszulHomology::compute(ideal, field, enumeration)?.betti_table())
}

/// `z1 ∧ z2`, with coefficient monomials lying in `I` dropped.
pub fn wedge(z1: &KoszulElement, z2: &KoszulElement, ideal: &MonomialIdeal, field: FieldSpec) -> Result<KoszulElement> {
    let n = ideal.nvars();
    if z1.multidegree.nvars() != n || z2.multidegree.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if z1.multidegree.nvars() != n { z1.multidegree.nvars() } else { z2.multidegree.nvars() },
        });
    }
    let multidegree = z1.multidegree.checked_add(&z2.multidegree)?;
    let p = z1.p + z2.p;
    let mut acc: Vec<(VarSet, Scalar)> = Vec::new();
    for (s, c1) in &z1.terms {
        for (t, c2) in &z2.terms {
            if !s.is_disjoint(*t) {
                continue;
            }
            let u = s.union(*t);
            let coeff = coefficient_of(&multidegree, u).expect("sum of fitting terms fits");
            if ideal.contains_monomial(&coeff) {
                continue;
            }
            let mut c = field.mul(c1, c2);
            if wedge_sign(*s, *t) < 0 {
                c = field.neg(&c);
            }
            match acc.iter_mut().find(|(v, _)| *v == u) {
                Some((_, x)) => *x = field.add(x, &c),
                None => acc.push((u, c)),
            }
        }
    }
    acc.retain(|(_, c)| !c.is_zero());
    let order = subsets_of_size(n, p);
    acc.sort_by_key(|(s, _)| order.iter().position(|o| o == s));
    Ok(KoszulElement { multidegree, p, terms: acc })
}

/// Two homology representatives whose product is not a boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    pub left: KoszulElement,
    pub right: KoszulElement,
    pub left_index: usize,
    pub right_index: usize,
    pub product: KoszulElement,
}

#[derive(Clone, Debug)]
pub struct TrivialityReport {
    pub trivial: bool,
    pub pairs_checked: usize,
    pub witness: Option<ProductWitness>,
}

/// Lazily built strands keyed by multidegree.
#[derive(Default)]
pub struct StrandCache {
    strands: HashMap<Multidegree, StrandComplex>,
    boundaries: HashMap<(Multidegree, usize), Span>,
}

impl StrandCache {
    pub fn strand(&mut self, ideal: &MonomialIdeal, a: &Multidegree, field: FieldSpec) -> Result<&StrandComplex> {
        if !self.strands.contains_key(a) {
            let s = build_strand(ideal, a, field)?;
            self.strands.insert(a.clone(), s);
        }
        Ok(&self.strands[a])
    }

    pub fn is_boundary(&mut self, ideal: &MonomialIdeal, elem: &KoszulElement, field: FieldSpec) -> Result<bool> {
        let key = (elem.multidegree.clone(), elem.p);
        let v = self.strand(ideal, &elem.multidegree, field)?.vector_of(elem)?;
        if !self.boundaries.contains_key(&key) {
            let span = self.strands[&elem.multidegree].boundary_span(elem.p);
            self.boundaries.insert(key.clone(), span);
        }
        Ok(self.boundaries[&key].contains(&v))
    }
}

fn require_m_squared(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.in_m_squared() {
        Ok(())
    } else {
        Err(Error::NotInMSquared)
    }
}

/// Decide whether every product of positive-degree homology classes is zero.
pub fn products_trivial(ideal: &MonomialIdeal, field: FieldSpec) -> Result<TrivialityReport> {
    require_m_squared(ideal)?;
    if ideal.is_zero() {
        return Ok(TrivialityReport { trivial: true, pairs_checked: 0, witness: None });
    }
    let kh = KoszulHomology::compute(ideal, field, Enumeration::FullBox)?;
    products_trivial_from(&kh)
}

pub fn products_trivial_from(kh: &KoszulHomology) -> Result<TrivialityReport> {
    let ideal = &kh.ideal;
    let field = kh.field;
    let n = ideal.nvars();
    let reps = kh.positive_representatives();
    let mut cache = StrandCache::default();
    let mut pairs_checked = 0;
    for i in 0..reps.len() {
        for j in i..reps.len() {
            let (z1, z2) = (&reps[i], &reps[j]);
            if z1.p + z2.p > n {
                continue;
            }
            pairs_checked += 1;
            let prod = wedge(z1, z2, ideal, field)?;
            if prod.is_zero() {
                continue;
            }
            if !cache.is_boundary(ideal, &prod, field)? {
                return Ok(TrivialityReport {
                    trivial: false,
                    pairs_checked,
                    witness: Some(ProductWitness {
                        left: z1.clone(),
                        right: z2.clone(),
                        left_index: i,
                        right_index: j,
                        product: prod,
                    }),
                });
            }
        }
    }
    Ok(TrivialityReport { trivial: true, pairs_checked, witness: None })
}

/// Recheck a product witness from scratch: both factors are cycles and their
/// product is not a boundary.
pub fn verify_product_witness(ideal: &MonomialIdeal, w: &ProductWitness, field: FieldSpec) -> Result<bool> {
    for z in [&w.left, &w.right] {
        let strand = build_strand(ideal, &z.multidegree, field)?;
        if !strand.is_cycle(z.p, &strand.vector_of(z)?)? {
            return Ok(false);
        }
    }
    let prod = wedge(&w.left, &w.right, ideal, field)?;
    if prod != w.product {
        return Ok(false);
    }
    let strand = build_strand(ideal, &prod.multidegree, field)?;
    Ok(!strand.is_boundary(prod.p, &strand.vector_of(&prod)?))
}

#[derive(Clone, Debug)]
pub struct MonomialBasisFailure {
    pub multidegree: Multidegree,
    pub homology_dimension: usize,
    pub spanned_dimension: usize,
    /// Representatives whose classes the monomial cycles do not reach.
    pub unspanned: Vec<KoszulElement>,
}

#[derive(Clone, Debug)]
pub struct MonomialBasisReport {
    pub p: usize,
    pub basis: Vec<KoszulTerm>,
    pub failures: Vec<MonomialBasisFailure>,
}

impl MonomialBasisReport {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Try to pick a homology basis of single terms `u e_S` in every strand.
pub fn monomial_cycle_basis(ideal: &MonomialIdeal, p: usize, field: FieldSpec) -> Result<MonomialBasisReport> {
    let n = ideal.nvars();
    if p == 0 || p > n {
        return Err(Error::InvalidSplit(format!("homological degree {p} outside 1..={n}")));
    }
    let mut report = MonomialBasisReport { p, basis: Vec::new(), failures: Vec::new() };
    if ideal.is_zero() {
        return Ok(report);
    }
    for a in relevant_multidegrees(ideal, Enumeration::FullBox)? {
        let strand = build_strand(ideal, &a, field)?;
        let h = homology(&strand, p);
        if h.dimension() == 0 {
            continue;
        }
        let d = &strand.differentials[p];
        let mut span = strand.boundary_span(p);
        let boundary_dim = span.dim();
        for (k, s) in strand.basis(p).iter().enumerate() {
            let is_cycle = (0..d.rows()).all(|r| d.get(r, k).is_zero());
            if !is_cycle {
                continue;
            }
            let mut e = vec![Scalar::zero(); strand.basis(p).len()];
            e[k] = Scalar::one();
            if span.insert(&e) {
                report.basis.push(KoszulTerm {
                    coefficient: coefficient_of(&a, *s).expect("basis subset fits"),
                    subset: *s,
                });
            }
        }
        let spanned = span.dim() - boundary_dim;
        if spanned < h.dimension() {
            let unspanned = h
                .representatives
                .iter()
                .filter(|z| !span.contains(z))
                .map(|z| strand.element(p, z))
                .collect();
            report.failures.push(MonomialBasisFailure {
                multidegree: a.clone(),
                homology_dimension: h.dimension(),
                spanned_dimension: spanned,
                unspanned,
            });
        }
    }
    Ok(report)
}

fn require_nonzero_proper(ideal: &MonomialIdeal, op: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal { op, which: "zero" });
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal { op, which: "unit" });
    }
    Ok(())
}

/// `(m / x_i) e_{x_i}` for each minimal generator `m`, with `x_i` the
/// first variable dividing `m`.
pub fn h1_constructive_basis(ideal: &MonomialIdeal) -> Result<Vec<KoszulTerm>> {
    require_nonzero_proper(ideal, "H_1 basis")?;
    Ok(ideal
        .generators()
        .iter()
        .map(|m| {
            let i = m.exponents().iter().position(|&e| e > 0).expect("proper generator");
            let x = Monomial::variable(m.nvars(), i);
            KoszulTerm { coefficient: m.checked_div(&x).expect("x_i divides m"), subset: VarSet::singleton(i) }
        })
        .collect())
}

/// `u e_{x_1...x_n}` for each monomial `u` in `(I : m) \ I`.
pub fn socle_basis(ideal: &MonomialIdeal) -> Result<Vec<KoszulTerm>> {
    require_nonzero_proper(ideal, "socle basis")?;
    let n = ideal.nvars();
    let mut out: Vec<KoszulTerm> = box_points(&ideal.bounding_box())
        .map(Monomial::from_degree)
        .filter(|u| {
            !ideal.contains_monomial(u)
                && (0..n).all(|i| {
                    let mut e = u.exponents().to_vec();
                    e[i] += 1;
                    ideal.contains_monomial(&Monomial::new(e))
                })
        })
        .map(|u| KoszulTerm { coefficient: u, subset: VarSet::full(n) })
        .collect();
    out.sort_by(|a, b| a.coefficient.canonical_cmp(&b.coefficient));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::product;
    use crate::linalg::rank;
    use num_bigint::BigInt;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(v))
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&RingContext::standard(n).unwrap(), gens).unwrap()
    }

    fn m_squared(n: usize) -> MonomialIdeal {
        let ctx = RingContext::standard(n).unwrap();
        let m = MonomialIdeal::maximal(&ctx);
        product(&m, &m).unwrap()
    }

    #[test]
    fn signs() {
        let x = VarSet::singleton(0);
        let y = VarSet::singleton(1);
        assert_eq!(wedge_sign(x, y), 1);
        assert_eq!(wedge_sign(y, x), -1);
        assert_eq!(wedge_sign(VarSet::from_indices([1, 2]).unwrap(), x), 1);
    }

    #[test]
    fn complete_intersection_top_strand() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let s = build_strand(&i, &Multidegree::new(vec![2, 2]), FieldSpec::Rationals).unwrap();
        assert_eq!(s.basis(2), &[VarSet::from_indices([0, 1]).unwrap()]);
        assert!(s.differential(2).is_zero());
        assert_eq!(homology(&s, 2).dimension(), 1);
        assert_eq!(rank(&s.differential(3)), 0);
    }

    #[test]
    fn zero_strand_is_the_field() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let s = build_strand(&i, &Multidegree::zero(3), FieldSpec::Rationals).unwrap();
        assert_eq!(s.basis(0).len(), 1);
        assert!((1..=3).all(|p| s.basis(p).is_empty()));
        assert_eq!(homology(&s, 0).dimension(), 1);
    }

    #[test]
    fn four_variable_strand_basis() {
        let i = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1], &[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]],
        );
        let s = build_strand(&i, &Multidegree::new(vec![1, 1, 1, 1]), FieldSpec::Rationals).unwrap();
        assert!(s.basis(3).contains(&VarSet::from_indices([1, 2, 3]).unwrap()));
        assert!(s.basis(3).contains(&VarSet::from_indices([0, 2, 3]).unwrap()));
        assert!(s.is_complex());
        // x e_yzw - y e_xzw is a cycle
        let alpha = KoszulElement {
            multidegree: Multidegree::new(vec![1, 1, 1, 1]),
            p: 3,
            terms: vec![(VarSet::from_indices([1, 2, 3]).unwrap(), q(1)), (VarSet::from_indices([0, 2, 3]).unwrap(), q(-1))],
        };
        assert!(s.is_cycle(3, &s.vector_of(&alpha).unwrap()).unwrap());
    }

    #[test]
    fn betti_totals() {
        let ci = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(betti_table(&ci, FieldSpec::Rationals, Enumeration::FullBox).unwrap().totals, vec![1, 3, 3, 1]);
        assert_eq!(betti_table(&m_squared(3), FieldSpec::Rationals, Enumeration::FullBox).unwrap().totals, vec![1, 6, 8, 3]);
        assert_eq!(betti_table(&m_squared(3), FieldSpec::Rationals, Enumeration::LcmClosure).unwrap().totals, vec![1, 6, 8, 3]);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(relevant_multidegrees(&ideal(2, &[&[2, 0], &[0, 2]]), Enumeration::FullBox).unwrap().len(), 9);
        let ci = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(relevant_multidegrees(&ci, Enumeration::LcmClosure).unwrap().len(), 8);
        let zero = MonomialIdeal::zero(&RingContext::standard(3).unwrap());
        assert_eq!(relevant_multidegrees(&zero, Enumeration::FullBox).unwrap(), vec![Multidegree::zero(3)]);
        let unit = MonomialIdeal::unit(&RingContext::standard(3).unwrap());
        assert!(relevant_multidegrees(&unit, Enumeration::FullBox).is_err());
    }

    #[test]
    fn wedge_of_h1_classes() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let xe_x = KoszulElement { multidegree: Multidegree::new(vec![2, 0]), p: 1, terms: vec![(VarSet::singleton(0), q(1))] };
        let ye_y = KoszulElement { multidegree: Multidegree::new(vec![0, 2]), p: 1, terms: vec![(VarSet::singleton(1), q(1))] };
        let w = wedge(&xe_x, &ye_y, &i, FieldSpec::Rationals).unwrap();
        assert_eq!(w.multidegree.exponents(), &[2, 2]);
        assert_eq!(w.terms, vec![(VarSet::from_indices([0, 1]).unwrap(), q(1))]);
        assert!(wedge(&xe_x, &xe_x, &i, FieldSpec::Rationals).unwrap().is_zero());
    }

    #[test]
    fn product_triviality() {
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        let r = products_trivial(&ci, FieldSpec::Rationals).unwrap();
        assert!(!r.trivial);
        let w = r.witness.unwrap();
        assert_eq!(w.product.multidegree.exponents(), &[2, 2]);
        assert!(verify_product_witness(&ci, &w, FieldSpec::Rationals).unwrap());
        assert!(products_trivial(&m_squared(3), FieldSpec::Rationals).unwrap().trivial);
        assert!(products_trivial(&ideal(3, &[&[1, 0, 0]]), FieldSpec::Rationals).is_err());
    }

    #[test]
    fn monomial_bases() {
        let r = monomial_cycle_basis(&ideal(1, &[&[2]]), 1, FieldSpec::Rationals).unwrap();
        assert!(r.success());
        assert_eq!(r.basis, vec![KoszulTerm { coefficient: Monomial::new(vec![1]), subset: VarSet::singleton(0) }]);
        let i = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1], &[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]],
        );
        let r = monomial_cycle_basis(&i, 3, FieldSpec::Rationals).unwrap();
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].multidegree.exponents(), &[1, 1, 1, 1]);
    }

    #[test]
    fn h1_basis() {
        let ctx = RingContext::standard(3).unwrap();
        let b = h1_constructive_basis(&ideal(3, &[&[2, 0, 0], &[0, 1, 1]])).unwrap();
        let shown: Vec<String> = b.iter().map(|t| t.display(&ctx).to_string()).collect();
        assert_eq!(shown, vec!["x*e(x)", "z*e(y)"]);
        assert!(h1_constructive_basis(&MonomialIdeal::zero(&ctx)).is_err());
    }

    #[test]
    fn socles() {
        let ctx = RingContext::standard(3).unwrap();
        let b = socle_basis(&m_squared(3)).unwrap();
        let shown: Vec<String> = b.iter().map(|t| t.display(&ctx).to_string()).collect();
        assert_eq!(shown, vec!["x*e(x,y,z)", "y*e(x,y,z)", "z*e(x,y,z)"]);
        assert!(socle_basis(&ideal(3, &[&[2, 0, 0], &[0, 1, 1]])).unwrap().is_empty());
        assert_eq!(socle_basis(&ideal(1, &[&[2]])).unwrap().len(), 1);
    }
}
