//! Exact counting-function coefficients b_alpha = numerators[alpha] / #D.
//!
//! Numerators are cyclotomic integers of order s = lcm(n_1..n_m) with the
//! common denominator #D kept implicit; no rational normalization is done.

use crate::cyclotomic::Cyc;
use crate::design::{DesignSpace, Exponent, Fraction};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Int;

/// The full coefficient table of a counting function, indexed by rank(alpha).
///
/// Alongside the raw numerators the table caches their canonical reductions
/// mod Phi_s, so zero tests and element comparisons are plain polynomial
/// comparisons.
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    space: DesignSpace,
    denom: u64,
    numerators: Vec<Cyc<Int>>,
    reduced: Vec<IntPoly<Int>>,
}

impl CoefficientTable {
    fn from_numerators(space: DesignSpace, numerators: Vec<Cyc<Int>>) -> Self {
        let reduced = numerators.iter().map(|n| n.reduced()).collect();
        CoefficientTable {
            denom: space.size() as u64,
            space,
            numerators,
            reduced,
        }
    }

    pub fn space(&self) -> &DesignSpace {
        &self.space
    }

    /// #D, the common denominator of all coefficients.
    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn numerators(&self) -> &[Cyc<Int>] {
        &self.numerators
    }

    pub fn numerator(&self, alpha: &Exponent) -> Result<&Cyc<Int>> {
        Ok(&self.numerators[self.space.rank(alpha)?])
    }

    /// Canonical reduction of the numerator at `rank` mod Phi_s.
    pub fn reduced_at(&self, rank: usize) -> &IntPoly<Int> {
        &self.reduced[rank]
    }

    pub fn is_nonzero_at(&self, rank: usize) -> bool {
        !self.reduced[rank].is_zero()
    }

    /// #F, read off the numerator of b_0.
    pub fn fraction_total(&self) -> u64 {
        let n0 = &self.numerators[0];
        n0.to_int()
            .and_then(|v| u64::try_from(v).ok())
            .expect("numerator of b_0 is a nonnegative integer")
    }

    /// Ranks of the non-vanishing coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.reduced.len()).filter(move |&r| !self.reduced[r].is_zero())
    }
}

/// Direct evaluation of b_alpha = (1/#D) sum_{zeta in F} conj(X^alpha(zeta)),
/// one full pass over the fraction per exponent. O(#D^2) term evaluations;
/// this is the oracle the fast path is checked against.
pub fn coefficients_naive(fraction: &Fraction) -> CoefficientTable {
    let space = fraction.space().clone();
    let s = space.root_order();
    let fraction_points: Vec<(Exponent, u64)> = fraction.support().collect();
    let mut numerators = Vec::with_capacity(space.size());
    for alpha in space.points() {
        let mut coeffs = vec![Int::from(0); s];
        for (zeta, c) in &fraction_points {
            let t = space.term_value(&alpha, zeta).expect("points in space");
            coeffs[(s - t) % s] += Int::from(*c);
        }
        numerators.push(Cyc::new(s, coeffs));
    }
    CoefficientTable::from_numerators(space, numerators)
}

/// One in-place pass of the mixed-radix transform along factor `axis`.
/// Each output cell is a sum of n_j input cells rotated by roots of unity;
/// `sign` selects conj(w) (-1, analysis) or w (+1, synthesis).
fn axis_pass(values: &mut [Cyc<Int>], space: &DesignSpace, axis: usize, sign: i8) {
    let s = space.root_order();
    let n = space.levels()[axis];
    let g = space.gamma()[axis];
    let inner: usize = space.levels()[axis + 1..].iter().product();
    let outer: usize = space.levels()[..axis].iter().product();
    let block = n * inner;
    let mut slice: Vec<Cyc<Int>> = Vec::with_capacity(n);
    for o in 0..outer {
        for i in 0..inner {
            let base = o * block + i;
            slice.clear();
            slice.extend((0..n).map(|z| values[base + z * inner].clone()));
            for a in 0..n {
                let mut acc = Cyc::zero(s);
                for (z, v) in slice.iter().enumerate() {
                    let t = (g * a * z) % s;
                    let rot = if sign < 0 { (s - t) % s } else { t };
                    acc = acc.add(&v.mul_basis(rot));
                }
                values[base + a * inner] = acc;
            }
        }
    }
}

/// Axis-by-axis factorization of the coefficient sum: m successive exact
/// per-axis discrete Fourier passes, O(#D * sum_j n_j) element operations.
/// Produces the same table as [`coefficients_naive`].
pub fn coefficients_fast(fraction: &Fraction) -> CoefficientTable {
    let space = fraction.space().clone();
    let s = space.root_order();
    let mut values: Vec<Cyc<Int>> = fraction
        .counts()
        .iter()
        .map(|&c| Cyc::from_int(s, Int::from(c)))
        .collect();
    for axis in 0..space.num_factors() {
        axis_pass(&mut values, &space, axis, -1);
    }
    CoefficientTable::from_numerators(space, values)
}

/// Evaluate R(zeta) = sum_alpha b_alpha X^alpha(zeta) at every point and
/// recover the counting function. Fails if any value is not a nonnegative
/// integer, which signals a table that did not come from a counting function.
pub fn reconstruct(table: &CoefficientTable) -> Result<Fraction> {
    let space = table.space.clone();
    let denom = Int::from(table.denom);
    let mut values = table.numerators.clone();
    for axis in 0..space.num_factors() {
        axis_pass(&mut values, &space, axis, 1);
    }
    let mut counts = Vec::with_capacity(values.len());
    for (rank, v) in values.iter().enumerate() {
        // v = #D * R(zeta)
        let int = v.to_int().ok_or_else(|| {
            Error::NonCountingTable(format!("value at rank {rank} is not a rational integer"))
        })?;
        if int.sign() == num_bigint::Sign::Minus {
            return Err(Error::NonCountingTable(format!(
                "negative value at rank {rank}"
            )));
        }
        let (q, r) = num_integer::Integer::div_rem(&int, &denom);
        if r != Int::from(0) {
            return Err(Error::NonCountingTable(format!(
                "value {int}/{denom} at rank {rank} is not an integer"
            )));
        }
        counts.push(u64::try_from(q).map_err(|_| {
            Error::NonCountingTable(format!("count at rank {rank} exceeds u64"))
        })?);
    }
    Fraction::new(space, counts)
}

/// R is a counting function with replicates up to r iff R(R-1)...(R-r) = 0
/// on D; pointwise this says every count lies in {0..r}.
pub fn is_counting_function(fraction: &Fraction, r: u64) -> bool {
    fraction.counts().iter().all(|&c| c <= r)
}

/// F is an indicator function iff F^2 - F = 0 on D.
pub fn is_indicator(fraction: &Fraction) -> bool {
    is_counting_function(fraction, 1)
}

/// The indicator identity b_alpha = sum_beta b_beta b_{[alpha-beta]} with
/// cleared denominators: #D * num[alpha] = sum_beta num[beta] * num[alpha-beta].
/// Holds exactly for tables of single-replicate fractions.
pub fn convolution_identity_check(table: &CoefficientTable) -> bool {
    let space = &table.space;
    let denom = Int::from(table.denom);
    let s = space.root_order();
    let support: Vec<usize> = table.support().collect();
    for alpha in space.points() {
        let mut rhs = Cyc::zero(s);
        for &beta_rank in &support {
            let beta = space.unrank(beta_rank).expect("rank in range");
            let diff = space.sub_exponents(&alpha, &beta).expect("same space");
            let diff_rank = space.rank(&diff).expect("point in space");
            if !table.is_nonzero_at(diff_rank) {
                continue;
            }
            rhs = rhs.add(&table.numerators[beta_rank].mul(&table.numerators[diff_rank]));
        }
        let lhs = table
            .numerator(&alpha)
            .expect("point in space")
            .scale(&denom);
        if !lhs.eq_elem(&rhs) {
            return false;
        }
    }
    true
}

/// Coefficient table of the complementary fraction, without recomputation:
/// b_0 -> 1 - b_0 and b_alpha -> -b_alpha. Input must be an indicator table.
pub fn complement_table(table: &CoefficientTable) -> Result<CoefficientTable> {
    let back = reconstruct(table)?;
    if !is_indicator(&back) {
        return Err(Error::NotIndicator);
    }
    let s = table.space.root_order();
    let full = Cyc::from_int(s, Int::from(table.denom));
    let numerators: Vec<Cyc<Int>> = table
        .numerators
        .iter()
        .enumerate()
        .map(|(rank, n)| {
            if rank == 0 {
                full.sub(n)
            } else {
                n.neg()
            }
        })
        .collect();
    Ok(CoefficientTable::from_numerators(table.space.clone(), numerators))
}

/// Conjugate symmetry of a real-valued counting function:
/// conj(b_alpha) = b_{[-alpha]} for every alpha.
pub fn conjugate_symmetry_holds(table: &CoefficientTable) -> bool {
    let space = &table.space;
    space.points().all(|alpha| {
        let neg = space.neg_exponent(&alpha).expect("point in space");
        let neg_rank = space.rank(&neg).expect("point in space");
        let a_rank = space.rank(&alpha).expect("point in space");
        table.numerators[a_rank]
            .conj()
            .reduced()
            .eq(&table.reduced[neg_rank])
    })
}
