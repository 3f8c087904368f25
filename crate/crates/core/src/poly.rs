//! Exact integer polynomials and the f -> h -> gamma pipeline.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` is the
//! coefficient of t^i. The representation is canonical: the vector is empty
//! for the zero polynomial, and the last element is nonzero otherwise.
//! All arithmetic is overflow-checked; an overflow is a hard error, never a
//! silent wraparound.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in polynomial addition")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in polynomial multiplication")
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut p = IntPolynomial { coeffs: coeffs.into() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the trimmed polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of t^i (0 beyond the stored length).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| checked_add(self.coeff(i), other.coeff(i)))
            .collect::<Vec<_>>();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeff(i)
                    .checked_sub(other.coeff(i))
                    .expect("integer overflow in polynomial subtraction")
            })
            .collect::<Vec<_>>();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(a, b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplication by t^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    pub fn evaluate(&self, x: i64) -> i64 {
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = checked_add(checked_mul(acc, x), c);
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// (1+t)^k with exact coefficients.
fn one_plus_t_pow(k: usize) -> IntPolynomial {
    let mut coeffs = vec![0i64; k + 1];
    coeffs[0] = 1;
    for i in 1..=k {
        // binomial row update in place, right to left
        for j in (1..=i).rev() {
            coeffs[j] = checked_add(coeffs[j], coeffs[j - 1]);
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Converts an f-polynomial of a simple d-polytope to its h-polynomial via
/// the substitution h(s) = f(s-1), computed by Horner-style synthetic
/// shifting.
pub fn f_to_h(f: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if f.degree() != Some(d) {
        return Err(Error::MalformedPolynomial(format!(
            "f-polynomial has degree {:?}, expected {d}",
            f.degree()
        )));
    }
    debug_assert!(f.is_nonnegative(), "f-polynomial must have nonnegative coefficients");
    // h = (((f_d)*(t-1) + f_{d-1})*(t-1) + ...) + f_0
    let mut h = IntPolynomial::zero();
    for i in (0..=d).rev() {
        let shifted = h.shift_up(1).sub(&h); // h * (t - 1)
        h = shifted.add(&IntPolynomial::from_coeffs(vec![f.coeff(i)]));
    }
    Ok(h)
}

/// Extracts the gamma-polynomial from a symmetric h-polynomial of degree d:
/// the unique gamma with sum_i gamma_i t^i (1+t)^(d-2i) = h. Fails if h is
/// not symmetric or the elimination leaves a nonzero remainder (both signal
/// an upstream bug for polytopal inputs).
pub fn h_to_gamma(h: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    for i in 0..=d {
        if h.coeff(i) != h.coeff(d - i) {
            return Err(Error::SymmetryViolation(format!(
                "h-polynomial not symmetric at index {i}: {} vs {}",
                h.coeff(i),
                h.coeff(d - i)
            )));
        }
    }
    if h.degree().map_or(false, |deg| deg > d) {
        return Err(Error::MalformedPolynomial(format!(
            "h-polynomial degree {:?} exceeds {d}",
            h.degree()
        )));
    }
    let mut rem = h.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let gi = rem.coeff(i);
        gamma.push(gi);
        if gi != 0 {
            let term = IntPolynomial::from_coeffs(vec![gi]).shift_up(i).mul(&one_plus_t_pow(d - 2 * i));
            rem = rem.sub(&term);
        }
    }
    if !rem.is_zero() {
        return Err(Error::SymmetryViolation(format!(
            "nonzero remainder {rem} after gamma extraction"
        )));
    }
    Ok(IntPolynomial::from_coeffs(gamma))
}

/// Expands sum_i gamma_i t^i (1+t)^(d-2i); the independent inverse of
/// `h_to_gamma`, used to cross-check every produced gamma.
pub fn expand_gamma(gamma: &IntPolynomial, d: usize) -> IntPolynomial {
    let mut h = IntPolynomial::zero();
    for i in 0..=d / 2 {
        let gi = gamma.coeff(i);
        if gi != 0 {
            let term = IntPolynomial::from_coeffs(vec![gi]).shift_up(i).mul(&one_plus_t_pow(d - 2 * i));
            h = h.add(&term);
        }
    }
    h
}

/// Coefficient-wise comparison; missing coefficients read as zero.
pub fn gamma_le(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).all(|i| a.coeff(i) <= b.coeff(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn f_to_h_point() {
        assert_eq!(f_to_h(&p(&[1]), 0).unwrap(), p(&[1]));
    }

    #[test]
    fn f_to_h_pentagon() {
        // f = 5 + 5t + t^2, h(s) = f(s-1) = s^2 + 3s + 1
        assert_eq!(f_to_h(&p(&[5, 5, 1]), 2).unwrap(), p(&[1, 3, 1]));
    }

    #[test]
    fn f_to_h_three_dim_associahedron() {
        assert_eq!(f_to_h(&p(&[14, 21, 9, 1]), 3).unwrap(), p(&[1, 6, 6, 1]));
    }

    #[test]
    fn f_to_h_degree_mismatch() {
        assert!(matches!(
            f_to_h(&p(&[5, 5, 1]), 3),
            Err(Error::MalformedPolynomial(_))
        ));
    }

    #[test]
    fn h_to_gamma_pentagon() {
        assert_eq!(h_to_gamma(&p(&[1, 3, 1]), 2).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn h_to_gamma_segment() {
        assert_eq!(h_to_gamma(&p(&[1, 1]), 1).unwrap(), p(&[1]));
    }

    #[test]
    fn h_to_gamma_three_dim_associahedron() {
        assert_eq!(h_to_gamma(&p(&[1, 6, 6, 1]), 3).unwrap(), p(&[1, 3]));
    }

    #[test]
    fn h_to_gamma_rejects_asymmetric() {
        assert!(matches!(
            h_to_gamma(&p(&[1, 2, 3]), 2),
            Err(Error::SymmetryViolation(_))
        ));
    }

    #[test]
    fn gamma_le_examples() {
        assert!(gamma_le(&p(&[1, 1]), &p(&[1, 3])));
        assert!(!gamma_le(&p(&[1, 3]), &p(&[1, 1])));
        assert!(gamma_le(&p(&[1]), &p(&[1])));
        // missing coefficients read as zero
        assert!(gamma_le(&p(&[1]), &p(&[1, 2])));
        assert!(!gamma_le(&p(&[1, 2]), &p(&[1])));
    }

    #[test]
    fn vertex_count_identity() {
        // h(1) = f(0)
        let f = p(&[14, 21, 9, 1]);
        let h = f_to_h(&f, 3).unwrap();
        assert_eq!(h.evaluate(1), f.coeff(0));
    }

    #[test]
    fn zero_polynomial_is_canonical() {
        assert_eq!(p(&[0, 0, 0]), IntPolynomial::zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn json_round_trip() {
        let g = p(&[1, 3]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[1,3]");
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_a_hard_error() {
        let big = p(&[i64::MAX, 1]);
        let _ = big.mul(&p(&[2]));
    }
}
