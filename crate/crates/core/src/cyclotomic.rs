//! Exact arithmetic in the ring of cyclotomic integers Z[w_n].
//!
//! An element is stored as an integer combination of the n-th roots of
//! unity w_0..w_{n-1}, i.e. unreduced in Z[x]/(x^n - 1). The
//! representation is not unique: equality and zero tests reduce the
//! coefficient polynomial modulo the cyclotomic polynomial Phi_n, which
//! is the minimal polynomial of a primitive n-th root. Keeping elements
//! unreduced preserves the replicate-count reading of the coefficients.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{Coeff, IntPoly};

/// Coefficients of Phi_n, cached per process as i64 (they stay tiny for
/// every n this crate meets; the first |coefficient| > 1 appears at n = 105).
fn phi_cache() -> &'static Mutex<HashMap<usize, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn phi_i64(n: usize) -> Vec<i64> {
    if let Some(hit) = phi_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    let mut num = IntPoly::<i64>::xn_minus_one(n);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = IntPoly::new(phi_i64(d));
            let (q, r) = num.div_rem_monic(&phi_d);
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    let coeffs = num.coeffs().to_vec();
    phi_cache().lock().unwrap().insert(n, coeffs.clone());
    coeffs
}

/// The n-th cyclotomic polynomial: the monic minimal polynomial of a
/// primitive n-th root of unity. Its degree is Euler's phi(n).
pub fn cyclotomic_poly<T: Coeff>(n: usize) -> IntPoly<T> {
    assert!(n >= 1, "cyclotomic_poly requires n >= 1");
    IntPoly::new(
        phi_i64(n)
            .into_iter()
            .map(|c| T::from_i64(c).expect("cyclotomic coefficient fits the scalar type"))
            .collect(),
    )
}

/// An exact element of Z[w_n]: `coeffs[k]` multiplies w_k = exp(2 pi i k / n).
#[derive(Clone, Debug)]
pub struct Cyc<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Coeff> Cyc<T> {
    pub fn new(order: usize, coeffs: Vec<T>) -> Self {
        assert!(order >= 1);
        assert_eq!(coeffs.len(), order, "coefficient vector must have length n");
        Cyc { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Cyc {
            order,
            coeffs: vec![T::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::basis(order, 0)
    }

    /// The single root of unity w_k in Z[w_n].
    pub fn basis(order: usize, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); order];
        coeffs[k % order] = T::one();
        Cyc { order, coeffs }
    }

    pub fn from_int(order: usize, value: T) -> Self {
        let mut coeffs = vec![T::zero(); order];
        coeffs[0] = value;
        Cyc { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Reinterpret the coefficients as a polynomial in w_1.
    pub fn as_poly(&self) -> IntPoly<T> {
        IntPoly::new(self.coeffs.clone())
    }

    /// Canonical representative: the coefficient polynomial reduced mod
    /// Phi_n. Two elements of the same order are equal iff their reduced
    /// polynomials coincide.
    pub fn reduced(&self) -> IntPoly<T> {
        self.as_poly().rem_monic(&cyclotomic_poly(self.order))
    }

    /// Embed into Z[w_n] for a multiple n of the current order, scaling
    /// root indices by n / order. Represents the same complex number.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n % self.order != 0 {
            return Err(Error::OrderMismatch {
                from: self.order,
                to: n,
            });
        }
        let step = n / self.order;
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Ok(Cyc { order: n, coeffs })
    }

    fn common_order(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let n = self.order.lcm(&other.order);
        (
            self.embed(n).expect("lcm is a common multiple"),
            other.embed(n).expect("lcm is a common multiple"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common_order(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        Cyc {
            order: a.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.common_order(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.clone() - y.clone())
            .collect();
        Cyc {
            order: a.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Cyclic convolution mod x^n - 1, using w_h w_k = w_{[h+k]_n}.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common_order(other);
        let n = a.order;
        let mut coeffs = vec![T::zero(); n];
        for (h, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = (h + k) % n;
                coeffs[t] = coeffs[t].clone() + x.clone() * y.clone();
            }
        }
        Cyc { order: n, coeffs }
    }

    /// Multiplication by w_k: a rotation of the coefficient vector.
    pub fn mul_basis(&self, k: usize) -> Self {
        let n = self.order;
        let k = k % n;
        let mut coeffs = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % n] = c.clone();
        }
        Cyc { order: n, coeffs }
    }

    pub fn scale(&self, factor: &T) -> Self {
        Cyc {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    /// Complex conjugation: index negation k -> [-k]_n.
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(n - k) % n] = c.clone();
        }
        Cyc { order: n, coeffs }
    }

    /// True iff the element is zero in Z[w_n], i.e. the coefficient
    /// polynomial is divisible by Phi_n over the integers.
    pub fn is_zero(&self) -> bool {
        self.reduced().is_zero()
    }

    /// Equality in the ring (not of representations).
    pub fn eq_elem(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// If the element is a rational integer, return it.
    pub fn to_int(&self) -> Option<T> {
        let r = self.reduced();
        match r.degree() {
            None => Some(T::zero()),
            Some(0) => Some(r.coeff(0)),
            Some(_) => None,
        }
    }

    /// Decide whether `self = w_k * other` for some k and return it.
    /// The index is unique mod the order when `other` is nonzero.
    pub fn scalar_root_quotient(&self, other: &Self) -> Result<Option<usize>> {
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (a, b) = self.common_order(other);
        for k in 0..a.order {
            if a.eq_elem(&b.mul_basis(k)) {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}
