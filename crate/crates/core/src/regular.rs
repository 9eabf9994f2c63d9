//! Regularity: classification via the coefficient table, subgroup closure of
//! defining equations, fraction generation by congruence enumeration, and the
//! smallest regular superfraction.
//!
//! A defining word X^alpha = w_s^e cuts the design to the points k solving
//! sum_j alpha_j gamma_j k_j = e (mod s). The equivalent integer-linear
//! formulation sum_j alpha_j gamma_j k_j - s q = e with 0 <= k_j < n_j and
//! q >= 0 avoids modular arithmetic; at the design sizes this crate targets,
//! pruned enumeration over the k_j is simpler and exact, so the ILP route is
//! documented here but not used.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::collections::VecDeque;

use crate::counting::{self, CoefficientTable};
use crate::design::{DesignSpace, Exponent, Fraction};
use crate::error::{Error, Result};

/// Generating equations X^alpha = w_s^e, one word per (alpha, e) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningEquations {
    space: DesignSpace,
    words: Vec<(Exponent, usize)>,
}

impl DefiningEquations {
    /// Validates each right-hand side against the value subgroup of its term:
    /// X^alpha takes values in Omega_{s'}, so e must be a multiple of s/s'.
    pub fn new(space: DesignSpace, words: Vec<(Exponent, usize)>) -> Result<Self> {
        let s = space.root_order();
        for (alpha, e) in &words {
            let sp = space.term_level_group(alpha)?;
            let step = s / sp;
            if *e >= s || *e % step != 0 {
                return Err(Error::InvalidWord {
                    word: format!("{:?} = w^{}", alpha.entries(), e),
                    rhs: *e,
                    step,
                    order: s,
                });
            }
        }
        Ok(DefiningEquations { space, words })
    }

    pub fn space(&self) -> &DesignSpace {
        &self.space
    }

    pub fn words(&self) -> &[(Exponent, usize)] {
        &self.words
    }
}

/// The full subgroup generated by the words with e extended multiplicatively,
/// e([alpha+beta]) = e(alpha) + e(beta) mod s. Detects inconsistent systems:
/// two derivations of the same exponent with different e values.
pub fn close_group(eqs: &DefiningEquations) -> Result<DefiningEquations> {
    let space = eqs.space();
    let s = space.root_order();
    let m = space.num_factors();
    let mut emap: HashMap<Exponent, usize> = HashMap::new();
    emap.insert(Exponent::origin(m), 0);
    let mut queue: VecDeque<Exponent> = VecDeque::new();
    queue.push_back(Exponent::origin(m));
    let insert = |map: &mut HashMap<Exponent, usize>,
                      queue: &mut VecDeque<Exponent>,
                      alpha: Exponent,
                      e: usize|
     -> Result<()> {
        match map.entry(alpha) {
            Entry::Vacant(v) => {
                queue.push_back(v.key().clone());
                v.insert(e);
                Ok(())
            }
            Entry::Occupied(o) => {
                if *o.get() != e {
                    Err(Error::InconsistentEquations {
                        word: format!("{:?}", o.key().entries()),
                        first: *o.get(),
                        second: e,
                    })
                } else {
                    Ok(())
                }
            }
        }
    };
    for (alpha, e) in eqs.words() {
        insert(&mut emap, &mut queue, alpha.clone(), *e)?;
    }
    while let Some(current) = queue.pop_front() {
        let e_cur = emap[&current];
        for (word, e_word) in eqs.words() {
            let next = space.add_exponents(&current, word)?;
            let e_next = (e_cur + e_word) % s;
            insert(&mut emap, &mut queue, next, e_next)?;
        }
    }
    let mut words: Vec<(Exponent, usize)> = emap.into_iter().collect();
    words.sort_by_key(|(alpha, _)| space.rank(alpha).expect("closure stays in L"));
    DefiningEquations::new(space.clone(), words)
}

/// Residues reachable by suffix sums sum_{j >= start} c_j k_j mod s, per
/// start position; used to prune the point enumeration.
fn suffix_reachable(coeffs: &[usize], levels: &[usize], s: usize) -> Vec<Vec<bool>> {
    let m = coeffs.len();
    let mut reach = vec![vec![false; s]; m + 1];
    reach[m][0] = true;
    for j in (0..m).rev() {
        for t in 0..s {
            if !reach[j + 1][t] {
                continue;
            }
            for k in 0..levels[j] {
                reach[j][(t + coeffs[j] * k) % s] = true;
            }
        }
    }
    reach
}

/// All points of L solving every word's congruence, as a single-replicate
/// fraction. Enumeration goes factor by factor, rejecting partial residues
/// that cannot reach the target.
pub fn generate_from_equations(eqs: &DefiningEquations) -> Result<Fraction> {
    // closure validates mutual consistency before any enumeration
    close_group(eqs)?;
    let space = eqs.space();
    let s = space.root_order();
    let m = space.num_factors();
    let words: Vec<(Vec<usize>, usize)> = eqs
        .words()
        .iter()
        .map(|(alpha, e)| {
            let coeffs: Vec<usize> = alpha
                .entries()
                .iter()
                .zip(space.gamma())
                .map(|(&a, &g)| (a * g) % s)
                .collect();
            (coeffs, *e)
        })
        .collect();
    let reach: Vec<Vec<Vec<bool>>> = words
        .iter()
        .map(|(coeffs, _)| suffix_reachable(coeffs, space.levels(), s))
        .collect();

    let mut counts = vec![0u64; space.size()];
    let mut point = vec![0usize; m];
    let mut partial = vec![0usize; words.len()];
    fn rec(
        j: usize,
        space: &DesignSpace,
        words: &[(Vec<usize>, usize)],
        reach: &[Vec<Vec<bool>>],
        point: &mut Vec<usize>,
        partial: &mut Vec<usize>,
        counts: &mut [u64],
    ) {
        let s = space.root_order();
        if j == space.num_factors() {
            let rank = space
                .rank(&Exponent::new(point.clone()))
                .expect("point in space");
            counts[rank] = 1;
            return;
        }
        for k in 0..space.levels()[j] {
            point[j] = k;
            let saved = partial.clone();
            let mut feasible = true;
            for (i, (coeffs, target)) in words.iter().enumerate() {
                partial[i] = (partial[i] + coeffs[j] * k) % s;
                let need = (target + s - partial[i]) % s;
                if !reach[i][j + 1][need] {
                    feasible = false;
                }
            }
            if feasible {
                rec(j + 1, space, words, reach, point, partial, counts);
            }
            partial.copy_from_slice(&saved);
        }
    }
    rec(0, space, &words, &reach, &mut point, &mut partial, &mut counts);
    Fraction::new(space.clone(), counts)
}

/// Verdict of the regularity test.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    /// The subgroup of confounded exponents with their e values (as
    /// exponents of w_s), rank-ordered; present iff regular.
    pub subgroup: Option<Vec<(Exponent, usize)>>,
    /// l = #subgroup (0 when not regular).
    pub l: usize,
    /// A minimal generating sublist of the subgroup.
    pub generators: Option<Vec<(Exponent, usize)>>,
    /// On failure: a pair of terms that are neither orthogonal nor totally
    /// confounded.
    pub witness: Option<(Exponent, Exponent)>,
}

/// A fraction is regular iff every nonzero coefficient is a root of unity
/// times b_0; then the support is the subgroup, e(alpha) is the conjugate
/// root, and l * #F = #D. Requires a nonempty single-replicate fraction.
pub fn check_regular(table: &CoefficientTable) -> Result<RegularityReport> {
    let back = counting::reconstruct(table)?;
    if !counting::is_indicator(&back) {
        return Err(Error::NotIndicator);
    }
    if table.fraction_total() == 0 {
        return Err(Error::EmptyFraction);
    }
    let space = table.space();
    let s = space.root_order();
    let b0 = table.numerators()[0].clone();
    let mut subgroup: Vec<(Exponent, usize)> = Vec::new();
    for rank in table.support() {
        let alpha = space.unrank(rank)?;
        match table.numerators()[rank].scalar_root_quotient(&b0)? {
            Some(q) => {
                // b_alpha = w_q b_0 and b_alpha = conj(e(alpha)) / l
                subgroup.push((alpha, (s - q % s) % s));
            }
            None => {
                return Ok(RegularityReport {
                    regular: false,
                    subgroup: None,
                    l: 0,
                    generators: None,
                    witness: Some((alpha, Exponent::origin(space.num_factors()))),
                });
            }
        }
    }
    let l = subgroup.len();
    verify_subgroup(space, &subgroup)?;
    if (l as u64) * table.fraction_total() != space.size() as u64 {
        return Err(Error::Internal(
            "regular support found but l * #F != #D".into(),
        ));
    }
    let generators = minimal_generators(space, &subgroup)?;
    Ok(RegularityReport {
        regular: true,
        subgroup: Some(subgroup),
        l,
        generators: Some(generators),
        witness: None,
    })
}

fn verify_subgroup(space: &DesignSpace, elements: &[(Exponent, usize)]) -> Result<()> {
    let s = space.root_order();
    let emap: HashMap<&Exponent, usize> = elements.iter().map(|(a, e)| (a, *e)).collect();
    if emap.get(&Exponent::origin(space.num_factors())) != Some(&0) {
        return Err(Error::Internal("subgroup does not contain the identity".into()));
    }
    for (a, ea) in elements {
        for (b, eb) in elements {
            let sum = space.add_exponents(a, b)?;
            match emap.get(&sum) {
                Some(&es) if es == (ea + eb) % s => {}
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "e is not a homomorphism at {:?} + {:?}",
                        a.entries(),
                        b.entries()
                    )))
                }
                None => {
                    return Err(Error::Internal(format!(
                        "support not closed under addition at {:?} + {:?}",
                        a.entries(),
                        b.entries()
                    )))
                }
            }
        }
    }
    Ok(())
}

/// Greedy minimal generating sublist: add an element whenever it is not in
/// the closure of what has been picked so far.
fn minimal_generators(
    space: &DesignSpace,
    elements: &[(Exponent, usize)],
) -> Result<Vec<(Exponent, usize)>> {
    let mut picked: Vec<(Exponent, usize)> = Vec::new();
    let mut generated: Vec<(Exponent, usize)> = Vec::new();
    for (alpha, e) in elements {
        if alpha.is_origin() {
            continue;
        }
        if generated.iter().any(|(a, _)| a == alpha) {
            continue;
        }
        picked.push((alpha.clone(), *e));
        let closed = close_group(&DefiningEquations::new(space.clone(), picked.clone())?)?;
        generated = closed.words().to_vec();
        if generated.len() == elements.len() {
            break;
        }
    }
    Ok(picked)
}

/// Smallest regular fraction containing the given (single replicate) one,
/// restricted to the factors involved in the confounded exponents.
///
/// Collects the subgroup of exponents alpha with b_alpha exactly a root of
/// unity times b_0, restricts it to the involved factors, and generates the
/// defining fraction there. Returns the involved factor indices, the
/// defining equations on the restricted space, and the generated fraction.
/// When only alpha = 0 qualifies, the result is the full restricted design
/// with no equations and the restriction is the whole factor list.
pub fn smallest_regular_superfraction(
    table: &CoefficientTable,
) -> Result<(Vec<usize>, DefiningEquations, Fraction)> {
    let back = counting::reconstruct(table)?;
    if !counting::is_indicator(&back) {
        return Err(Error::NotIndicator);
    }
    if table.fraction_total() == 0 {
        return Err(Error::EmptyFraction);
    }
    let space = table.space();
    let s = space.root_order();
    let b0 = table.numerators()[0].clone();
    let mut subgroup: Vec<(Exponent, usize)> = Vec::new();
    for rank in table.support() {
        let alpha = space.unrank(rank)?;
        if let Some(q) = table.numerators()[rank].scalar_root_quotient(&b0)? {
            subgroup.push((alpha, (s - q % s) % s));
        }
    }
    verify_subgroup(space, &subgroup)?;

    // factors appearing in the nonzero coordinates of the subgroup
    let mut involved = vec![false; space.num_factors()];
    for (alpha, _) in &subgroup {
        for j in alpha.support() {
            involved[j] = true;
        }
    }
    let factors: Vec<usize> = if involved.iter().any(|&b| b) {
        (0..space.num_factors()).filter(|&j| involved[j]).collect()
    } else {
        (0..space.num_factors()).collect()
    };

    let sub_levels: Vec<usize> = factors.iter().map(|&j| space.levels()[j]).collect();
    let sub_space = DesignSpace::new(sub_levels)?;
    let sub_s = sub_space.root_order();
    let words: Vec<(Exponent, usize)> = subgroup
        .iter()
        .filter(|(alpha, _)| !alpha.is_origin())
        .map(|(alpha, e)| {
            let entries: Vec<usize> = factors.iter().map(|&j| alpha.entries()[j]).collect();
            // e is an exponent of w_s; the restricted term only takes values
            // in Omega_{sub_s} embedded in Omega_s, so e rescales exactly.
            debug_assert_eq!((e * sub_s) % s, 0);
            (Exponent::new(entries), e * sub_s / s)
        })
        .collect();
    let eqs = DefiningEquations::new(sub_space, words)?;
    let superfraction = generate_from_equations(&eqs)?;

    // containment check: the projected fraction lies inside the result
    let projected = crate::analysis::project(&back, &factors)?;
    for (point, _) in projected.support() {
        if superfraction.count(&point)? == 0 {
            return Err(Error::Internal(
                "smallest regular superfraction does not contain the fraction".into(),
            ));
        }
    }
    Ok((factors, eqs, superfraction))
}

/// Defining equations of the subgroup fraction spanned by treatment
/// generators: all alpha in L with sum_j gamma_j b_j alpha_j = 0 mod s for
/// every generator b. Returned with e = 0.
pub fn generators_to_equations(
    space: &DesignSpace,
    generators: &[Exponent],
) -> Result<DefiningEquations> {
    let s = space.root_order();
    for b in generators {
        space.rank(b)?; // bounds check
    }
    let mut words = Vec::new();
    for alpha in space.points() {
        let ok = generators.iter().all(|b| {
            alpha
                .entries()
                .iter()
                .zip(b.entries())
                .zip(space.gamma())
                .fold(0usize, |acc, ((&a, &bj), &g)| (acc + g * bj * a) % s)
                == 0
        });
        if ok && !alpha.is_origin() {
            words.push((alpha, 0));
        }
    }
    DefiningEquations::new(space.clone(), words)
}
