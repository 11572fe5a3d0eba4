//! Ring contexts, monomials and canonical monomial ideals.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set, sorted
//! in descending lexicographic order of exponent vectors (variable 1 most
//! significant). The zero ideal has no generators and the unit ideal has the
//! single generator `1`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The polynomial ring `k[x_1, ..., x_n]` as a list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Arc<[String]>,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !valid_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// `x,y,z` for three variables, `x,y,z,w` for four, `x1..xn` otherwise.
    pub fn standard(n: usize) -> Result<Self> {
        match n {
            1 => Self::new(["x"]),
            2 => Self::new(["x", "y"]),
            3 => Self::new(["x", "y", "z"]),
            4 => Self::new(["x", "y", "z", "w"]),
            _ => Self::new((1..=n).map(|i| format!("x{i}"))),
        }
    }

    /// Reduced contexts may run out of variables entirely (the field `k`).
    fn from_names_unchecked(names: Vec<String>) -> Self {
        Self { names: names.into() }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The context with variable `index` deleted.
    pub fn without(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let names = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, n)| n.clone())
            .collect();
        Ok(Self::from_names_unchecked(names))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.nvars() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.nvars() })
        }
    }

    pub fn check_same(&self, other: &RingContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.to_string(), right: other.to_string() })
        }
    }

    fn check_dim(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.nvars(), found: m.nvars() })
        }
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn variable(&self, index: usize) -> Result<Monomial> {
        self.check_index(index)?;
        Ok(Monomial::variable(self.nvars(), index))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.names.join(","))
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An exponent vector in `N^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, identified with its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    degree: Multidegree,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { degree: Multidegree(exponents) }
    }

    pub fn one(n: usize) -> Self {
        Self { degree: Multidegree::zero(n) }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        Self { degree: Multidegree::unit(n, i) }
    }

    pub fn from_degree(degree: Multidegree) -> Self {
        Self { degree }
    }

    pub fn degree(&self) -> &Multidegree {
        &self.degree
    }

    pub fn into_degree(self) -> Multidegree {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.degree.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.degree.0[i]
    }

    pub fn nvars(&self) -> usize {
        self.degree.nvars()
    }

    pub fn total_degree(&self) -> u64 {
        self.degree.total()
    }

    pub fn is_one(&self) -> bool {
        self.degree.0.iter().all(|&e| e == 0)
    }

    /// Does `self` divide `other`? Assumes equal dimensions.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree.le(&other.degree)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.degree.checked_add(&other.degree).map(Monomial::from_degree)
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.degree.checked_sub(&other.degree).map(Monomial::from_degree)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_degree(self.degree.join(&other.degree))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_degree(self.degree.meet(&other.degree))
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents()
                .iter()
                .zip(other.exponents())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Order used for canonical generator lists: descending lexicographic.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        other.degree.cmp(&self.degree)
    }

    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The multidegree of the Koszul term `u * e_S`: `deg(u) + sum_{i in S} e_i`.
pub fn multidegree_of_term(ctx: &RingContext, u: &Monomial, subset: &[usize]) -> Result<Multidegree> {
    ctx.check_dim(u)?;
    let mut exps = u.exponents().to_vec();
    for &i in subset {
        ctx.check_index(i)?;
        exps[i] = exps[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
    }
    Ok(Multidegree(exps))
}

/// Does `a` divide `b`?
pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() });
    }
    Ok(a.divides(b))
}

/// A monomial ideal, stored by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

/// Reduce a generator list to the divisibility antichain generating the same ideal.
pub fn minimalize(ctx: &RingContext, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    for g in &gens {
        ctx.check_dim(g)?;
    }
    Ok(MonomialIdeal::from_raw(ctx.clone(), gens))
}

impl MonomialIdeal {
    /// Trusts that all monomials have the context's dimension.
    pub(crate) fn from_raw(ctx: RingContext, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.canonical_cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // a divisor of g has total degree <= deg g, so it was seen already
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(Monomial::canonical_cmp);
        Self { ctx, gens: kept }
    }

    pub fn new(ctx: &RingContext, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(ctx, gens)
    }

    pub fn from_exponents(ctx: &RingContext, gens: &[&[u32]]) -> Result<Self> {
        minimalize(ctx, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self { ctx: ctx.clone(), gens: Vec::new() }
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Self { ctx: ctx.clone(), gens: vec![ctx.one()] }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ctx: &RingContext) -> Self {
        let n = ctx.nvars();
        Self::from_raw(ctx.clone(), (0..n).map(|i| Monomial::variable(n, i)).collect())
    }

    /// The ideal generated by the variables in `subset`.
    pub fn of_variables(ctx: &RingContext, subset: &[usize]) -> Result<Self> {
        let n = ctx.nvars();
        for &i in subset {
            ctx.check_index(i)?;
        }
        Ok(Self::from_raw(ctx.clone(), subset.iter().map(|&i| Monomial::variable(n, i)).collect()))
    }

    pub fn principal(ctx: &RingContext, m: Monomial) -> Result<Self> {
        minimalize(ctx, vec![m])
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Membership without a dimension check.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        self.ctx.check_dim(m)?;
        Ok(self.contains_monomial(m))
    }

    /// Is every minimal generator of degree at least two?
    pub fn in_m_squared(&self) -> bool {
        self.gens.iter().all(|g| g.total_degree() >= 2)
    }

    /// Componentwise maximum exponent over the generators.
    pub fn bounding_box(&self) -> Multidegree {
        self.gens
            .iter()
            .fold(Multidegree::zero(self.nvars()), |acc, g| acc.join(g.degree()))
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Does some power of every variable lie in the ideal?
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars()).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
        })
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ctx))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ctx)
    }
}

/// Iterate over every multidegree `a` with `0 <= a <= bound` componentwise,
/// in lexicographic order.
pub fn box_points(bound: &Multidegree) -> impl Iterator<Item = Multidegree> + '_ {
    let n = bound.nvars();
    let mut current: Option<Vec<u32>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = n;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < bound.exponents()[i] {
                next[i] += 1;
                for v in next.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                current = Some(next);
                break;
            }
        }
        Some(Multidegree(out))
    })
}

/// Every monomial of total degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}
