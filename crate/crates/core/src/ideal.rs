//! Ideal arithmetic on monomial ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal, RingContext};

/// A set of variable indices, stored as a bitmask (at most 32 variables).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u32);

pub const MAX_VARS: usize = 32;

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u32;
        for i in indices {
            if i >= MAX_VARS {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_VARS });
            }
            bits |= 1 << i;
        }
        Ok(Self(bits))
    }

    /// Like [`VarSet::from_indices`], additionally checking the indices against a ring.
    pub fn within(ctx: &RingContext, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            ctx.check_index(i)?;
        }
        Self::from_indices(indices.iter().copied())
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    /// All variables of an `n`-variable ring.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Self(u32::MAX)
        } else {
            Self((1u32 << n) - 1)
        }
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 & (1 << i) != 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    /// Indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_VARS).filter(move |&i| self.contains(i))
    }

    /// Zero-based position of `i` among the sorted members.
    pub fn position(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }

    /// Largest index plus one (0 for the empty set).
    pub fn span(self) -> usize {
        MAX_VARS - self.0.leading_zeros() as usize
    }

    pub fn display<'a>(self, ctx: &'a RingContext) -> VarSetDisplay<'a> {
        VarSetDisplay { set: self, ctx }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VarSetDisplay<'a> {
    set: VarSet,
    ctx: &'a RingContext,
}

impl fmt::Display for VarSetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.ctx.name(i))?;
        }
        f.write_str(")")
    }
}

fn same_ring(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    i.context().check_same(j.context())
}

pub fn sum(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(i, j)?;
    let gens = i.generators().iter().chain(j.generators()).cloned().collect();
    Ok(MonomialIdeal::from_raw(i.context().clone(), gens))
}

pub fn product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(i, j)?;
    let mut gens = Vec::with_capacity(i.num_generators() * j.num_generators());
    for a in i.generators() {
        for b in j.generators() {
            gens.push(a.checked_mul(b)?);
        }
    }
    Ok(MonomialIdeal::from_raw(i.context().clone(), gens))
}

pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(i, j)?;
    let mut gens = Vec::with_capacity(i.num_generators() * j.num_generators());
    for a in i.generators() {
        for b in j.generators() {
            gens.push(a.lcm(b));
        }
    }
    Ok(MonomialIdeal::from_raw(i.context().clone(), gens))
}

/// `I : m`, generated by `g / gcd(g, m)`.
pub fn colon_monomial(i: &MonomialIdeal, m: &Monomial) -> Result<MonomialIdeal> {
    i.member(m)?;
    let gens = i.generators().iter().map(|g| g.quotient_by_gcd(m)).collect();
    Ok(MonomialIdeal::from_raw(i.context().clone(), gens))
}

/// `I : J` for a nonzero monomial ideal `J`.
pub fn colon_ideal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(i, j)?;
    let mut gens = j.generators().iter();
    let first = gens
        .next()
        .ok_or(Error::DegenerateIdeal { op: "colon by an ideal", which: "zero" })?;
    let mut acc = colon_monomial(i, first)?;
    for g in gens {
        acc = intersect(&acc, &colon_monomial(i, g)?)?;
    }
    Ok(acc)
}

/// `I : (x_i : i in S)`, with the convention `I : () = I`.
pub fn colon_vars(i: &MonomialIdeal, s: VarSet) -> Result<MonomialIdeal> {
    if s.is_empty() {
        return Ok(i.clone());
    }
    let vars = MonomialIdeal::of_variables(i.context(), &s.indices())?;
    colon_ideal(i, &vars)
}

/// Is `J ⊆ I`?
pub fn contains(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    same_ring(i, j)?;
    Ok(j.generators().iter().all(|g| i.contains_monomial(g)))
}

/// `[I : x_i][I : x_j] ⊆ I` for every ordered pair of variables, `i = j` included.
pub fn strongly_golod(i: &MonomialIdeal) -> Result<bool> {
    let n = i.nvars();
    let colons = (0..n)
        .map(|v| colon_vars(i, VarSet::singleton(v)))
        .collect::<Result<Vec<_>>>()?;
    for a in 0..n {
        for b in a..n {
            if !contains(i, &product(&colons[a], &colons[b])?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Remove linear generators `x_i` together with their variables.
///
/// `Q/I` is isomorphic to `Q'/I'` where `Q'` drops every variable that is a
/// generator of `I` and `I'` keeps the generators not divisible by those
/// variables.
pub fn eliminate_variable_generators(i: &MonomialIdeal) -> (MonomialIdeal, RingContext) {
    let mut ctx = i.context().clone();
    let mut gens: Vec<Monomial> = i.generators().to_vec();
    while let Some(v) = gens
        .iter()
        .find(|g| g.total_degree() == 1)
        .map(|g| g.exponents().iter().position(|&e| e == 1).expect("linear monomial"))
    {
        gens = gens
            .into_iter()
            .filter(|g| g.exponent(v) == 0)
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.remove(v);
                Monomial::new(e)
            })
            .collect();
        ctx = ctx.without(v).expect("index of an existing variable");
    }
    let reduced = MonomialIdeal::from_raw(ctx.clone(), gens);
    (reduced, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> RingContext {
        RingContext::standard(3).unwrap()
    }

    fn ideal(ctx: &RingContext, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ctx, gens).unwrap()
    }

    #[test]
    fn sums() {
        let ctx = xyz();
        let a = ideal(&ctx, &[&[2, 0, 0]]);
        let b = ideal(&ctx, &[&[0, 1, 1]]);
        assert_eq!(sum(&a, &b).unwrap().to_string(), "(x^2, y*z)");
        assert_eq!(sum(&a, &MonomialIdeal::zero(&ctx)).unwrap(), a);
        assert!(sum(&a, &MonomialIdeal::unit(&ctx)).unwrap().is_unit());
    }

    #[test]
    fn condition_two_right_side() {
        let ctx = xyz();
        let i = ideal(&ctx, &[&[2, 0, 0], &[0, 1, 1]]);
        let colon = colon_vars(&i, VarSet::from_indices([0, 1]).unwrap()).unwrap();
        let z = MonomialIdeal::of_variables(&ctx, &[2]).unwrap();
        let rhs = sum(&product(&z, &colon).unwrap(), &i).unwrap();
        assert_eq!(rhs.to_string(), "(x^2, x*z^2, y*z)");
    }

    #[test]
    fn products() {
        let ctx = xyz();
        let a = ideal(&ctx, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(&ctx, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(product(&a, &b).unwrap().to_string(), "(x*y, x*z, y^2, y*z)");
        let m = MonomialIdeal::maximal(&ctx);
        assert_eq!(product(&m, &m).unwrap().to_string(), "(x^2, x*y, x*z, y^2, y*z, z^2)");
        assert_eq!(product(&a, &MonomialIdeal::unit(&ctx)).unwrap(), a);
        assert!(product(&a, &MonomialIdeal::zero(&ctx)).unwrap().is_zero());
    }

    #[test]
    fn remark_product_has_sixteen_raw_generators() {
        let ctx = RingContext::new(["x", "y", "z", "t"]).unwrap();
        let sq = ideal(&ctx, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        let i = product(&sq, &MonomialIdeal::maximal(&ctx)).unwrap();
        // x^3..t^3 plus the 12 mixed x_i^2 x_j, none dividing another
        assert_eq!(i.num_generators(), 16);
        assert!(!i.member(&Monomial::new(vec![1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn intersections() {
        let ctx = xyz();
        let x = ideal(&ctx, &[&[1, 0, 0]]);
        let y = ideal(&ctx, &[&[0, 1, 0]]);
        assert_eq!(intersect(&x, &y).unwrap().to_string(), "(x*y)");
        let a = ideal(&ctx, &[&[1, 0, 0], &[0, 1, 1]]);
        let b = ideal(&ctx, &[&[2, 0, 0], &[0, 0, 1]]);
        assert_eq!(intersect(&a, &b).unwrap().to_string(), "(x^2, x*z, y*z)");
        assert_eq!(intersect(&a, &MonomialIdeal::unit(&ctx)).unwrap(), a);
    }

    #[test]
    fn colons() {
        let ctx = xyz();
        let i = ideal(&ctx, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(colon_monomial(&i, &Monomial::new(vec![1, 0, 0])).unwrap().to_string(), "(x, y*z)");
        assert_eq!(colon_monomial(&i, &Monomial::new(vec![0, 1, 0])).unwrap().to_string(), "(x^2, z)");
        assert_eq!(colon_monomial(&i, &ctx.one()).unwrap(), i);
        let xy = MonomialIdeal::of_variables(&ctx, &[0, 1]).unwrap();
        assert_eq!(colon_ideal(&i, &xy).unwrap().to_string(), "(x^2, x*z, y*z)");
        assert_eq!(colon_ideal(&i, &MonomialIdeal::unit(&ctx)).unwrap(), i);
        assert!(colon_ideal(&i, &MonomialIdeal::zero(&ctx)).is_err());
        assert_eq!(colon_vars(&i, VarSet::EMPTY).unwrap(), i);
    }

    #[test]
    fn containment() {
        let ctx = xyz();
        let i = ideal(&ctx, &[&[2, 0, 0], &[0, 1, 1]]);
        assert!(contains(&i, &MonomialIdeal::zero(&ctx)).unwrap());
        assert!(!contains(&i, &MonomialIdeal::unit(&ctx)).unwrap());
        let other = RingContext::standard(2).unwrap();
        assert!(contains(&i, &MonomialIdeal::zero(&other)).is_err());
    }

    #[test]
    fn strongly_golod_examples() {
        let ctx = xyz();
        let m = MonomialIdeal::maximal(&ctx);
        assert!(strongly_golod(&product(&m, &m).unwrap()).unwrap());
        assert!(!strongly_golod(&ideal(&ctx, &[&[2, 0, 0], &[0, 1, 1]])).unwrap());
        assert!(strongly_golod(&MonomialIdeal::zero(&ctx)).unwrap());
    }

    #[test]
    fn linear_reduction() {
        let ctx = xyz();
        let i = ideal(&ctx, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        let (r, rctx) = eliminate_variable_generators(&i);
        assert_eq!(rctx.names(), &["y", "z"]);
        assert_eq!(r.to_string(), "(y^2, y*z, z^2)");

        let j = ideal(&ctx, &[&[2, 0, 0], &[0, 1, 1]]);
        let (r, rctx) = eliminate_variable_generators(&j);
        assert_eq!(r, j);
        assert_eq!(rctx, ctx);

        let (r, rctx) = eliminate_variable_generators(&MonomialIdeal::maximal(&ctx));
        assert!(r.is_zero());
        assert_eq!(rctx.nvars(), 0);
    }

    #[test]
    fn varset_basics() {
        let s = VarSet::from_indices([0, 2, 3]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.position(3), 2);
        assert_eq!(s.position(0), 0);
        assert_eq!(s.indices(), vec![0, 2, 3]);
        assert_eq!(VarSet::full(3).bits(), 0b111);
        assert!(VarSet::from_indices([40]).is_err());
    }
}
