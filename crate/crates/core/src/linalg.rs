//! Dense exact linear algebra over `Q` and `GF(p)`.
//!
//! Scalars are always [`BigRational`]s. Over a prime field every stored value
//! is an integer representative in `[0, p)`, so the same matrix type serves
//! both fields and results from either can be compared directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}

/// Accepts `q` for the rationals and `p:<prime>` for a prime field.
impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("p:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidConfig(format!("expected q or p:<prime>, got {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    fn reduce_int(p: u64, n: &BigInt) -> u64 {
        let m = n % BigInt::from(p);
        let m = if m.is_negative() { m + BigInt::from(p) } else { m };
        m.to_u64().expect("residue fits in u64")
    }

    /// Map a rational into the field. Fails over `GF(p)` when `p` divides the denominator.
    pub fn embed(self, x: &Scalar) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(x.clone()),
            FieldSpec::PrimeField(p) => {
                let num = Self::reduce_int(p, x.numer());
                let den = Self::reduce_int(p, x.denom());
                if den == 0 {
                    return Err(Error::Internal(format!("denominator of {x} vanishes mod {p}")));
                }
                let v = (num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64;
                Ok(Scalar::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.embed(&Scalar::from_integer(BigInt::from(v))).expect("integers embed in every field")
    }

    fn residue(x: &Scalar) -> u64 {
        x.numer().to_u64().expect("prime field representative")
    }

    fn wrap(v: u64) -> Scalar {
        Scalar::from_integer(BigInt::from(v))
    }

    pub(crate) fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a + b,
            FieldSpec::PrimeField(p) => {
                Self::wrap(((Self::residue(a) as u128 + Self::residue(b) as u128) % p as u128) as u64)
            }
        }
    }

    pub(crate) fn neg(self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => -a,
            FieldSpec::PrimeField(p) => {
                let r = Self::residue(a);
                Self::wrap(if r == 0 { 0 } else { p - r })
            }
        }
    }

    pub(crate) fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub(crate) fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a * b,
            FieldSpec::PrimeField(p) => {
                Self::wrap((Self::residue(a) as u128 * Self::residue(b) as u128 % p as u128) as u64)
            }
        }
    }

    pub(crate) fn inv(self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a.recip(),
            FieldSpec::PrimeField(p) => Self::wrap(pow_mod(Self::residue(a), p - 2, p)),
        }
    }

    /// `a - c * b`, the elimination step.
    fn axpy_neg(self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        self.sub(a, &self.mul(c, b))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::PrimeField(p) => write!(f, "p:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    /// Row-major entries; each is mapped into `field`.
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let data = entries.iter().map(|x| field.embed(x)).collect::<Result<_>>()?;
        Ok(Self { field, rows, cols, data })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::MatrixShape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::MatrixShape(format!("column of length {} for {rows} rows", col.len())));
            }
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = field.embed(x)?;
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: &Scalar) -> Result<()> {
        let v = self.field.embed(v)?;
        self.data[r * self.cols + c] = v;
        Ok(())
    }

    pub(crate) fn set_i64(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = self.field.from_i64(v);
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::MatrixShape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(Scalar::zero(), |acc, c| {
                    let e = self.get(r, c);
                    if e.is_zero() || v[c].is_zero() {
                        acc
                    } else {
                        f.add(&acc, &f.mul(e, &v[c]))
                    }
                })
            })
            .collect())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Append the given vectors as extra columns.
    fn augmented(&self, extra: &[Vec<Scalar>]) -> Result<ExactMatrix> {
        let mut cols: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.column(c)).collect();
        for v in extra {
            if v.len() != self.rows {
                return Err(Error::MatrixShape(format!("vector of length {} for {} rows", v.len(), self.rows)));
            }
            cols.push(v.clone());
        }
        Self::from_columns(self.field, self.rows, &cols)
    }
}

/// Reduced row echelon form. Pivots are taken in the leftmost column first,
/// from the lowest-index available row.
struct Rref {
    m: ExactMatrix,
    pivots: Vec<usize>,
}

fn rref(mut m: ExactMatrix) -> Rref {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                m.data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = f.inv(m.get(r, c));
        for k in c..cols {
            let idx = r * cols + k;
            m.data[idx] = f.mul(&m.data[idx], &inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for k in c..cols {
                let pivot_val = m.data[r * cols + k].clone();
                if pivot_val.is_zero() {
                    continue;
                }
                let idx = i * cols + k;
                m.data[idx] = f.axpy_neg(&m.data[idx], &factor, &pivot_val);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { m, pivots }
}

pub fn rank(m: &ExactMatrix) -> usize {
    rref(m.clone()).pivots.len()
}

/// Basis of `{v : Mv = 0}`: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let f = m.field;
    let Rref { m: red, pivots } = rref(m.clone());
    let free = (0..m.cols).filter(|c| !pivots.contains(c));
    free.map(|fc| {
        let mut v = vec![Scalar::zero(); m.cols];
        v[fc] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(red.get(row, fc));
        }
        v
    })
    .collect()
}

/// Some `x` with `Mx = v`, or `None` if `v` is not in the column span.
pub fn solve_in_span(m: &ExactMatrix, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let aug = m.augmented(&[v.to_vec()])?;
    let Rref { m: red, pivots } = rref(aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(row, m.cols).clone();
    }
    Ok(Some(x))
}

pub fn column_space_contains(m: &ExactMatrix, vs: &[Vec<Scalar>]) -> Result<bool> {
    if vs.is_empty() {
        return Ok(true);
    }
    let aug = m.augmented(vs)?;
    Ok(rank(&aug) == rank(m))
}

/// An incrementally built subspace of `field^dim`, kept in reduced echelon
/// form so that membership is a single reduction pass.
#[derive(Clone, Debug)]
pub struct Span {
    field: FieldSpec,
    dim: usize,
    // (pivot column, vector with a 1 at the pivot and 0 at every other pivot)
    basis: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        Self { field, dim, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// `v` minus its projection onto the span along the echelon basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out: Vec<Scalar> = v.iter().map(|x| f.embed(x).expect("field element")).collect();
        for (pc, b) in &self.basis {
            let c = out[*pc].clone();
            if c.is_zero() {
                continue;
            }
            for (o, bx) in out.iter_mut().zip(b) {
                if !bx.is_zero() {
                    *o = f.axpy_neg(o, &c, bx);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the ambient dimension");
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[pc]);
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = f.mul(x, &inv);
            }
        }
        for (_, b) in self.basis.iter_mut() {
            let c = b[pc].clone();
            if c.is_zero() {
                continue;
            }
            for (bx, rx) in b.iter_mut().zip(&r) {
                if !rx.is_zero() {
                    *bx = f.axpy_neg(bx, &c, rx);
                }
            }
        }
        self.basis.push((pc, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(v))
    }

    fn mat(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(FieldSpec::Rationals, rows).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&mat(&[vec![1, 1], vec![1, 1]])), 1);
        assert_eq!(rank(&ExactMatrix::zeros(FieldSpec::Rationals, 0, 0)), 0);
        assert_eq!(rank(&ExactMatrix::zeros(FieldSpec::Rationals, 1, 0)), 0);
        let m = ExactMatrix::from_i64_rows(FieldSpec::prime(2).unwrap(), &[vec![1, 1], vec![1, -1]]).unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&mat(&[vec![1, 1], vec![1, -1]])), 2);
    }

    #[test]
    fn nullspaces() {
        assert!(nullspace(&mat(&[vec![1, 0], vec![0, 1]])).is_empty());
        assert_eq!(nullspace(&mat(&[vec![1, -1]])), vec![vec![q(1), q(1)]]);
        let m = mat(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn span_solving() {
        let id = mat(&[vec![1, 0], vec![0, 1]]);
        let v = vec![q(3), q(-7)];
        assert_eq!(solve_in_span(&id, &v).unwrap(), Some(v.clone()));
        let z = ExactMatrix::zeros(FieldSpec::Rationals, 2, 2);
        assert_eq!(solve_in_span(&z, &v).unwrap(), None);
        assert!(solve_in_span(&z, &[q(1)]).is_err());
        let m = mat(&[vec![2, 4], vec![1, 2]]);
        let x = solve_in_span(&m, &[q(6), q(3)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q(6), q(3)]);
    }

    #[test]
    fn column_space() {
        let m = mat(&[vec![1], vec![0]]);
        assert!(column_space_contains(&m, &[]).unwrap());
        assert!(!column_space_contains(&m, &[vec![q(0), q(1)]]).unwrap());
        assert!(column_space_contains(&m, &[vec![q(5), q(0)]]).unwrap());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), q(6));
        assert_eq!(f.inv(&q(3)), q(5));
        assert_eq!(f.embed(&Scalar::new(BigInt::from(1), BigInt::from(2))).unwrap(), q(4));
        assert!(f.embed(&Scalar::new(BigInt::from(1), BigInt::from(7))).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn incremental_span() {
        let mut s = Span::new(FieldSpec::Rationals, 3);
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(2), q(1)]));
        assert!(s.contains(&[q(1), q(0), q(-1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn matrix_product() {
        let a = mat(&[vec![1, 2], vec![3, 4]]);
        let b = mat(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), mat(&[vec![2, 1], vec![4, 3]]));
        assert!(a.mul(&mat(&[vec![1, 2, 3]])).is_err());
    }
}
