//! Centeredness and orthogonality of terms, projections, orthogonal-array
//! strength, and the order spectrum of the nonzero coefficients.

use std::collections::BTreeMap;

use crate::counting::CoefficientTable;
use crate::cyclotomic::{cyclotomic_poly, Cyc};
use crate::design::{DesignSpace, Exponent, Fraction};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Int;

/// Outcome of the centeredness test for one term X^alpha on a fraction.
#[derive(Clone, Debug)]
pub struct CenterednessReport {
    pub alpha: Exponent,
    /// Order s' of the term's value group.
    pub s_prime: usize,
    /// Replicates of the s' values of the term on the fraction.
    pub replicates: Vec<u64>,
    pub centered: bool,
    /// H = P mod Phi_{s'}; zero iff centered.
    pub remainder: IntPoly<Int>,
    /// Optional certificate: the replicate vector written as a nonnegative
    /// combination of indicators of cosets of prime-order subgroups.
    pub decomposition: Option<Vec<(Vec<u8>, u64)>>,
}

/// H = P mod Phi_s for P(x) = sum r_k x^k. The term is centered iff H = 0.
pub fn centeredness_remainder(replicates: &[u64], s: usize) -> IntPoly<Int> {
    let p = IntPoly::new(replicates.iter().map(|&r| Int::from(r)).collect());
    p.rem_monic(&cyclotomic_poly(s))
}

/// True iff sum_k r_k w_s^k = 0, decided by cyclotomic divisibility.
pub fn replicates_centered(replicates: &[u64], s: usize) -> bool {
    centeredness_remainder(replicates, s).is_zero()
}

/// P~ = P * prod_{d | s, d < s} Phi_d mod (x^s - 1); zero iff centered.
/// Equivalent to the remainder test; kept as an independent algebraic route.
pub fn p_tilde(replicates: &[u64], s: usize) -> IntPoly<Int> {
    let mut prod = IntPoly::new(replicates.iter().map(|&r| Int::from(r)).collect());
    for d in 1..s {
        if s % d == 0 {
            prod = prod.mul(&cyclotomic_poly(d));
        }
    }
    prod.rem_cyclic(s)
}

/// Indicators of all cosets of prime-order subgroups of Z_s, the generating
/// vectors of the sufficient centeredness condition.
pub fn coset_generators(s: usize) -> Vec<Vec<u8>> {
    let mut gens = Vec::new();
    for p in 2..=s {
        if s % p != 0 || !is_prime(p) {
            continue;
        }
        let step = s / p;
        for offset in 0..step {
            let mut g = vec![0u8; s];
            for i in 0..p {
                g[offset + i * step] = 1;
            }
            gens.push(g);
        }
    }
    gens
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Try to write the replicate vector as a nonnegative integer combination of
/// coset indicators. A certificate proves centeredness; `None` proves nothing.
pub fn coset_decomposition(replicates: &[u64], s: usize) -> Option<Vec<(Vec<u8>, u64)>> {
    let gens = coset_generators(s);
    let mut weights = vec![0u64; gens.len()];
    fn search(
        rem: &mut Vec<u64>,
        gens: &[Vec<u8>],
        weights: &mut Vec<u64>,
        idx: usize,
    ) -> bool {
        if rem.iter().all(|&r| r == 0) {
            return true;
        }
        if idx == gens.len() {
            return false;
        }
        let g = &gens[idx];
        let max = g
            .iter()
            .zip(rem.iter())
            .filter(|(&gi, _)| gi == 1)
            .map(|(_, &r)| r)
            .min()
            .unwrap_or(0);
        for w in (0..=max).rev() {
            for (slot, &gi) in rem.iter_mut().zip(g.iter()) {
                *slot -= w * gi as u64;
            }
            weights[idx] = w;
            if search(rem, gens, weights, idx + 1) {
                return true;
            }
            for (slot, &gi) in rem.iter_mut().zip(g.iter()) {
                *slot += w * gi as u64;
            }
        }
        weights[idx] = 0;
        false
    }
    let mut rem = replicates.to_vec();
    if search(&mut rem, &gens, &mut weights, 0) {
        Some(
            gens.into_iter()
                .zip(weights)
                .filter(|(_, w)| *w > 0)
                .collect(),
        )
    } else {
        None
    }
}

/// Centeredness of X^alpha on the fraction via the remainder H = P mod Phi_{s'}.
///
/// For alpha = 0 the mean is #F/#D, so the term is centered only for the
/// empty fraction. For prime s' the test reduces to equal replicates; both
/// routes are computed and cross-checked.
pub fn is_centered(fraction: &Fraction, alpha: &Exponent) -> Result<CenterednessReport> {
    let s_prime = fraction.space().term_level_group(alpha)?;
    let replicates = fraction.replicate_vector(alpha)?;
    let remainder = centeredness_remainder(&replicates, s_prime);
    let centered = if alpha.is_origin() {
        fraction.total() == 0
    } else {
        remainder.is_zero()
    };
    if !alpha.is_origin() && is_prime(s_prime) {
        let equal = replicates.iter().all(|&r| r == replicates[0]);
        debug_assert_eq!(centered, equal, "prime-order cross-check failed");
    }
    let decomposition = if centered && !alpha.is_origin() {
        coset_decomposition(&replicates, s_prime)
    } else {
        None
    };
    Ok(CenterednessReport {
        alpha: alpha.clone(),
        s_prime,
        replicates,
        centered,
        remainder,
        decomposition,
    })
}

/// X^alpha and X^beta are orthogonal on the fraction iff b_{[alpha-beta]} = 0.
pub fn are_orthogonal(table: &CoefficientTable, alpha: &Exponent, beta: &Exponent) -> Result<bool> {
    let diff = table.space().sub_exponents(alpha, beta)?;
    Ok(!table.is_nonzero_at(table.space().rank(&diff)?))
}

/// A fraction is self-conjugate iff every coefficient is real, i.e. every
/// numerator equals its own conjugate.
pub fn is_self_conjugate(table: &CoefficientTable) -> bool {
    table
        .numerators()
        .iter()
        .enumerate()
        .all(|(rank, n)| n.conj().reduced() == *table.reduced_at(rank))
}

fn check_factor_subset(space: &DesignSpace, factors: &[usize]) -> Result<()> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorSet);
    }
    for &j in factors {
        if j >= space.num_factors() {
            return Err(Error::FactorOutOfRange(j + 1));
        }
    }
    Ok(())
}

/// Marginal counting function over the factors in `factors` (zero-based,
/// strictly the direct summation route).
pub fn project(fraction: &Fraction, factors: &[usize]) -> Result<Fraction> {
    let space = fraction.space();
    check_factor_subset(space, factors)?;
    let sub_levels: Vec<usize> = factors.iter().map(|&j| space.levels()[j]).collect();
    let sub_space = DesignSpace::new(sub_levels)?;
    let mut counts = vec![0u64; sub_space.size()];
    for (zeta, c) in fraction.support() {
        let entries: Vec<usize> = factors.iter().map(|&j| zeta.entries()[j]).collect();
        counts[sub_space.rank(&Exponent::new(entries))?] += c;
    }
    Fraction::new(sub_space, counts)
}

/// The same marginal computed from the coefficient table:
/// R_I(zeta_I) = #D_J sum_{alpha_I} b_{alpha_I} X^{alpha_I}(zeta_I).
/// Must agree with [`project`] on every input.
pub fn project_from_table(table: &CoefficientTable, factors: &[usize]) -> Result<Fraction> {
    let space = table.space();
    check_factor_subset(space, factors)?;
    let s = space.root_order();
    let m = space.num_factors();
    let sub_levels: Vec<usize> = factors.iter().map(|&j| space.levels()[j]).collect();
    let sub_space = DesignSpace::new(sub_levels)?;
    let denom = Int::from(sub_space.size());
    let mut counts = Vec::with_capacity(sub_space.size());
    for zeta_i in sub_space.points() {
        // sum over exponents supported on I of num[alpha] * w_s^{t(alpha, zeta)}
        let mut acc = Cyc::zero(s);
        for alpha_i in sub_space.points() {
            let mut entries = vec![0usize; m];
            for (pos, &j) in factors.iter().enumerate() {
                entries[j] = alpha_i.entries()[pos];
            }
            let alpha = Exponent::new(entries);
            let t = sub_space.term_value(&alpha_i, &zeta_i)?;
            // gamma of the subspace may differ from the full space, but the
            // term value is the same complex number; rescale to order s.
            let t_full = t * (s / sub_space.root_order());
            acc = acc.add(&table.numerator(&alpha)?.mul_basis(t_full));
        }
        // acc = #D_I * R_I(zeta_I)
        let int = acc.to_int().ok_or_else(|| {
            Error::Internal("projected marginal is not a rational integer".into())
        })?;
        let (q, r) = num_integer::Integer::div_rem(&int, &denom);
        if r != Int::from(0) || q < Int::from(0) {
            return Err(Error::Internal(
                "projected marginal is not a nonnegative multiple of #D_I".into(),
            ));
        }
        counts.push(u64::try_from(q).expect("marginal count fits u64"));
    }
    Fraction::new(sub_space, counts)
}

/// Whether the fraction projects onto the given factors as a (replicated)
/// full factorial. Cardinality divisibility is checked first as a fast
/// reject, then all nonzero exponents supported on the subset must vanish.
pub fn factorially_projects(table: &CoefficientTable, factors: &[usize]) -> Result<bool> {
    let space = table.space();
    check_factor_subset(space, factors)?;
    let sub_size: usize = factors.iter().map(|&j| space.levels()[j]).product();
    if table.fraction_total() % (sub_size as u64) != 0 {
        return Ok(false);
    }
    let mut in_subset = vec![false; space.num_factors()];
    for &j in factors {
        in_subset[j] = true;
    }
    for rank in table.support() {
        let alpha = space.unrank(rank)?;
        if alpha.is_origin() {
            continue;
        }
        if alpha.support().iter().all(|&j| in_subset[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strength and coefficient spectrum of a fraction.
#[derive(Clone, Debug)]
pub struct StrengthReport {
    /// Largest t such that every coefficient of order 1..=t vanishes.
    pub strength: usize,
    /// order -> number of non-vanishing coefficients of that order
    /// (order 0 contributes the single entry b_0).
    pub spectrum: BTreeMap<usize, usize>,
    /// The factor subsets of size strength+1 with a factorial projection
    /// (empty when the fraction is the full design).
    pub projections: Vec<Vec<usize>>,
}

/// Strength per the coefficient criterion: the fraction is an orthogonal
/// array of strength t iff all coefficients of order 1..=t are zero.
pub fn oa_strength(table: &CoefficientTable) -> Result<StrengthReport> {
    oa_strength_with_limit(table, None)
}

/// Same as [`oa_strength`], with the spectrum truncated at `order_max`.
/// The strength itself is always computed exactly.
pub fn oa_strength_with_limit(
    table: &CoefficientTable,
    order_max: Option<usize>,
) -> Result<StrengthReport> {
    if table.fraction_total() == 0 {
        return Err(Error::EmptyFraction);
    }
    let space = table.space();
    let m = space.num_factors();
    let mut spectrum: BTreeMap<usize, usize> = BTreeMap::new();
    let mut min_nonzero_order = usize::MAX;
    for rank in table.support() {
        let order = space.unrank(rank)?.order();
        if order > 0 {
            min_nonzero_order = min_nonzero_order.min(order);
        }
        if order_max.is_none_or(|mx| order <= mx) {
            *spectrum.entry(order).or_insert(0) += 1;
        }
    }
    let strength = if min_nonzero_order == usize::MAX {
        m
    } else {
        min_nonzero_order - 1
    };
    let mut projections = Vec::new();
    if strength < m {
        for subset in subsets_of_size(m, strength + 1) {
            if factorially_projects(table, &subset)? {
                projections.push(subset);
            }
        }
    }
    Ok(StrengthReport {
        strength,
        spectrum,
        projections,
    })
}

fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..m {
            cur.push(j);
            rec(m, k, j + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::coefficients_fast;

    fn space(levels: &[usize]) -> DesignSpace {
        DesignSpace::new(levels.to_vec()).unwrap()
    }

    fn ex(entries: &[usize]) -> Exponent {
        Exponent::new(entries.to_vec())
    }

    #[test]
    fn remainder_s6_closed_form() {
        // H = (r1 + r2 - r4 - r5) x + (r0 - r2 - r3 + r5) at s = 6
        let r = [5u64, 1, 2, 4, 0, 3];
        let h = centeredness_remainder(&r, 6);
        let lin = 1i64 + 2 - 0 - 3;
        let con = 5i64 - 2 - 4 + 3;
        assert_eq!(h.coeff(1), Int::from(lin));
        assert_eq!(h.coeff(0), Int::from(con));
    }

    #[test]
    fn centered_patterns_s6() {
        assert!(replicates_centered(&[9, 0, 0, 9, 0, 0], 6));
        assert!(replicates_centered(&[1, 0, 0, 1, 0, 0], 6));
        assert!(!replicates_centered(&[1, 0, 1, 0, 1, 1], 6));
        assert!(replicates_centered(&[6, 6, 6], 3));
    }

    #[test]
    fn p_tilde_agrees_with_remainder() {
        for s in [2usize, 3, 4, 6, 8, 12] {
            for seed in 0..200u64 {
                let r: Vec<u64> = (0..s).map(|k| (seed.wrapping_mul(31 + k as u64)) % 4).collect();
                assert_eq!(
                    replicates_centered(&r, s),
                    p_tilde(&r, s).is_zero(),
                    "s={s} r={r:?}"
                );
            }
        }
    }

    #[test]
    fn coset_generators_s6() {
        let gens = coset_generators(6);
        assert_eq!(gens.len(), 5);
        assert!(gens.contains(&vec![1, 0, 0, 1, 0, 0]));
        assert!(gens.contains(&vec![0, 1, 0, 0, 1, 0]));
        assert!(gens.contains(&vec![0, 0, 1, 0, 0, 1]));
        assert!(gens.contains(&vec![1, 0, 1, 0, 1, 0]));
        assert!(gens.contains(&vec![0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn coset_decomposition_examples() {
        let d = coset_decomposition(&[1, 0, 0, 1, 0, 0], 6).unwrap();
        assert_eq!(d, vec![(vec![1, 0, 0, 1, 0, 0], 1)]);

        let r = [2u64, 1, 1, 2, 1, 1];
        let cert = coset_decomposition(&r, 6).unwrap();
        let mut sum = vec![0u64; 6];
        for (g, w) in &cert {
            for (slot, &gi) in sum.iter_mut().zip(g) {
                *slot += w * gi as u64;
            }
        }
        assert_eq!(sum, r);

        assert!(coset_decomposition(&[1, 0, 1, 0, 1, 1], 6).is_none());
    }

    #[test]
    fn is_centered_origin_convention() {
        let d = space(&[2, 3]);
        let f = Fraction::full(d.clone());
        assert!(!is_centered(&f, &Exponent::origin(2)).unwrap().centered);
        let e = Fraction::empty(d);
        assert!(is_centered(&e, &Exponent::origin(2)).unwrap().centered);
    }

    #[test]
    fn orthogonality_of_term_with_itself() {
        let d = space(&[2, 3]);
        let f = Fraction::new(d.clone(), vec![1, 0, 0, 1, 1, 0]).unwrap();
        let table = coefficients_fast(&f);
        let a = ex(&[1, 1]);
        assert!(!are_orthogonal(&table, &a, &a).unwrap());
        let empty = coefficients_fast(&Fraction::empty(d));
        assert!(are_orthogonal(&empty, &a, &a).unwrap());
    }

    #[test]
    fn full_design_is_self_conjugate() {
        let d = space(&[2, 3]);
        assert!(is_self_conjugate(&coefficients_fast(&Fraction::full(d))));
    }

    #[test]
    fn projection_routes_agree() {
        let d = space(&[2, 3, 3]);
        let counts: Vec<u64> = (0..d.size() as u64).map(|r| (r * 5 + 1) % 3).collect();
        let f = Fraction::new(d, counts).unwrap();
        let table = coefficients_fast(&f);
        for factors in [vec![0], vec![1], vec![0, 2], vec![1, 2], vec![0, 1, 2]] {
            let a = project(&f, &factors).unwrap();
            let b = project_from_table(&table, &factors).unwrap();
            assert_eq!(a, b, "factors {factors:?}");
        }
        assert!(project(&f, &[]).is_err());
    }

    #[test]
    fn project_on_all_factors_is_identity() {
        let d = space(&[2, 3]);
        let f = Fraction::new(d, vec![1, 0, 2, 0, 1, 1]).unwrap();
        assert_eq!(project(&f, &[0, 1]).unwrap(), f);
    }

    #[test]
    fn factorial_projection_divisibility_reject() {
        // 10 points on a 3x3 space: 10 is not a multiple of 9
        let d = space(&[3, 3]);
        let mut counts = vec![1u64; 9];
        counts[0] = 2;
        let f = Fraction::new(d, counts).unwrap();
        let table = coefficients_fast(&f);
        assert!(!factorially_projects(&table, &[0, 1]).unwrap());
    }

    #[test]
    fn single_factor_projection_of_full_2x3() {
        let d = space(&[2, 3]);
        let f = Fraction::full(d);
        let table = coefficients_fast(&f);
        assert!(factorially_projects(&table, &[0]).unwrap());
        let marg = project(&f, &[0]).unwrap();
        assert_eq!(marg.counts(), &[3, 3]);
    }

    #[test]
    fn strength_of_full_design_is_m() {
        let d = space(&[2, 2, 3]);
        let table = coefficients_fast(&Fraction::full(d));
        let rep = oa_strength(&table).unwrap();
        assert_eq!(rep.strength, 3);
        assert_eq!(rep.spectrum.get(&0), Some(&1));
        assert!(rep.projections.is_empty());
    }

    #[test]
    fn strength_zero_when_order_one_coefficient_survives() {
        let d = space(&[2, 2]);
        let f = Fraction::new(d, vec![1, 1, 0, 0]).unwrap();
        let rep = oa_strength(&coefficients_fast(&f)).unwrap();
        assert_eq!(rep.strength, 0);
    }

    #[test]
    fn strength_rejects_empty_fraction() {
        let d = space(&[2, 2]);
        let table = coefficients_fast(&Fraction::empty(d));
        assert!(matches!(oa_strength(&table), Err(Error::EmptyFraction)));
    }
}
