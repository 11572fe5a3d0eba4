//! Integral closure of monomial ideals via Newton polyhedra.
//!
//! `x^a` lies in the integral closure of `I` iff `a` lies in
//! `conv(exponents of the generators) + R^n_{>=0}`. Membership is the
//! feasibility of `V lambda + s = a, sum(lambda) = 1, lambda, s >= 0`. A
//! feasible system has a basic feasible solution, so it suffices to try every
//! choice of `n + 1` columns of `[V I; 1 0]`, solve the square system exactly
//! with integer determinants and check the signs.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ring::{box_points, Monomial, MonomialIdeal, Multidegree};

/// Fraction-free determinant (Bareiss). Entries stay small for desk-scale
/// exponents, so `i128` is exact here.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// The polyhedron `conv(points) + R^n_{>=0}`.
pub struct NewtonPolyhedron {
    n: usize,
    points: Vec<Vec<i128>>,
    // columns of [V I; 1 0], each of length n + 1
    columns: Vec<Vec<i128>>,
}

impl NewtonPolyhedron {
    pub fn of_ideal(ideal: &MonomialIdeal) -> Self {
        let n = ideal.nvars();
        let points: Vec<Vec<i128>> = ideal
            .generators()
            .iter()
            .map(|g| g.exponents().iter().map(|&e| e as i128).collect())
            .collect();
        let mut columns: Vec<Vec<i128>> = points
            .iter()
            .map(|p| p.iter().copied().chain(std::iter::once(1)).collect())
            .collect();
        for i in 0..n {
            let mut c = vec![0; n + 1];
            c[i] = 1;
            columns.push(c);
        }
        Self { n, points, columns }
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        let target: Vec<i128> = a.exponents().iter().map(|&e| e as i128).collect();
        // dominating some vertex is the common case
        if self.points.iter().any(|p| p.iter().zip(&target).all(|(x, y)| x <= y)) {
            return true;
        }
        if self.points.is_empty() {
            return false;
        }
        let rhs: Vec<i128> = target.iter().copied().chain(std::iter::once(1)).collect();
        let size = self.n + 1;
        for choice in (0..self.columns.len()).combinations(size) {
            // at least one generator column is needed for sum(lambda) = 1
            if choice.iter().all(|&c| c >= self.points.len()) {
                continue;
            }
            let square: Vec<Vec<i128>> = (0..size)
                .map(|r| choice.iter().map(|&c| self.columns[c][r]).collect())
                .collect();
            let d = det(square.clone());
            if d == 0 {
                continue;
            }
            let feasible = (0..size).all(|k| {
                let mut replaced = square.clone();
                for (r, row) in replaced.iter_mut().enumerate() {
                    row[k] = rhs[r];
                }
                let dk = det(replaced);
                dk == 0 || (dk > 0) == (d > 0)
            });
            if feasible {
                return true;
            }
        }
        false
    }
}

/// Is `x^a` integral over `I`?
pub fn in_integral_closure(ideal: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    ideal.member(m)?;
    Ok(NewtonPolyhedron::of_ideal(ideal).contains(m.degree()))
}

/// The integral closure of a proper nonzero monomial ideal.
///
/// Minimal generators of the closure lie in the bounding box of the
/// generators: if `a` is in the polyhedron and `a_i` exceeds every
/// generator's `i`-th exponent, then so is `a - e_i`.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal { op: "integral closure", which: "zero" });
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal { op: "integral closure", which: "unit" });
    }
    let poly = NewtonPolyhedron::of_ideal(ideal);
    let bound = ideal.bounding_box();
    let gens = box_points(&bound)
        .filter(|a| poly.contains(a))
        .map(Monomial::from_degree)
        .collect();
    MonomialIdeal::new(ideal.context(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn determinants() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(det(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn closure_of_paper_ideal() {
        let ctx = RingContext::standard(3).unwrap();
        let i = MonomialIdeal::from_exponents(&ctx, &[&[2, 0, 0], &[0, 4, 0], &[0, 0, 4], &[0, 1, 1]]).unwrap();
        let c = integral_closure(&i).unwrap();
        let expected =
            MonomialIdeal::from_exponents(&ctx, &[&[2, 0, 0], &[0, 4, 0], &[0, 0, 4], &[1, 0, 2], &[0, 1, 1], &[1, 2, 0]])
                .unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn closure_small_cases() {
        let ctx = RingContext::standard(2).unwrap();
        let p = MonomialIdeal::from_exponents(&ctx, &[&[2, 0]]).unwrap();
        assert_eq!(integral_closure(&p).unwrap(), p);
        let i = MonomialIdeal::from_exponents(&ctx, &[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(integral_closure(&i).unwrap().to_string(), "(x^2, x*y, y^2)");
        assert!(integral_closure(&MonomialIdeal::zero(&ctx)).is_err());
        assert!(integral_closure(&MonomialIdeal::unit(&ctx)).is_err());
    }

    #[test]
    fn membership_on_segment() {
        let ctx = RingContext::standard(2).unwrap();
        let i = MonomialIdeal::from_exponents(&ctx, &[&[4, 0], &[0, 2]]).unwrap();
        assert!(in_integral_closure(&i, &Monomial::new(vec![2, 1])).unwrap());
        assert!(!in_integral_closure(&i, &Monomial::new(vec![1, 1])).unwrap());
        assert!(!in_integral_closure(&i, &Monomial::new(vec![3, 0])).unwrap());
    }
}
