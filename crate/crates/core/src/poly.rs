//! Dense univariate polynomials with integer coefficients.
//!
//! Remainders are only ever taken modulo monic divisors (cyclotomic
//! polynomials), so all arithmetic stays inside the coefficient ring.

use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Coefficient ring bound: any signed integer type, machine or big.
pub trait Coeff: Clone + fmt::Debug + Signed + Integer + FromPrimitive {}
impl<T> Coeff for T where T: Clone + fmt::Debug + Signed + Integer + FromPrimitive {}

/// Polynomial with coefficients in ascending degree order.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (represented by an empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> IntPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// x^n - 1
    pub fn xn_minus_one(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[0] = -T::one();
        coeffs[n] = T::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder by a monic divisor. Exact integer division.
    ///
    /// Panics if the divisor is not monic.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(
            divisor.coeffs[d].is_one(),
            "div_rem_monic requires a monic divisor"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let qlen = rem.len() - d;
        let mut quot = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let lead = rem[i + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - lead.clone() * c.clone();
            }
            quot[i] = lead;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Self {
        self.div_rem_monic(divisor).1
    }

    /// `self` reduced mod x^n - 1 (indices folded mod n).
    pub fn rem_cyclic(&self, n: usize) -> Self {
        let mut out = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] = out[k % n].clone() + c.clone();
        }
        Self::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = IntPoly<i64>;

    #[test]
    fn trims_leading_zeros() {
        let p = P::new(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(P::new(vec![0, 0]).is_zero());
    }

    #[test]
    fn monic_division_round_trips() {
        let d = P::new(vec![1, -1, 1]); // x^2 - x + 1
        let q = P::new(vec![3, 0, -2, 1]);
        let r = P::new(vec![7, -4]);
        let p = d.mul(&q).add(&r);
        let (q2, r2) = p.div_rem_monic(&d);
        assert_eq!(q2, q);
        assert_eq!(r2, r);
    }

    #[test]
    fn cyclic_fold() {
        // x^3 + x + 2 mod x^2 - 1 basis fold: indices 3->1, so 2 + 2x... via rem_cyclic(2)
        let p = P::new(vec![2, 1, 0, 1]);
        assert_eq!(p.rem_cyclic(2), P::new(vec![2, 2]));
    }
}
