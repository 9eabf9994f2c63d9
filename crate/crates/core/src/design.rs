//! Design spaces, the exponent lattice, and fractions as counting functions.

use num_integer::Integer;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::Int;

/// A mixed-level full factorial design: the factor level counts n_1..n_m
/// together with derived quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignSpace {
    levels: Vec<usize>,
    size: usize,
    s: usize,
    gamma: Vec<usize>,
}

impl DesignSpace {
    pub fn new(levels: Vec<usize>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Parse("a design needs at least one factor".into()));
        }
        for (j, &n) in levels.iter().enumerate() {
            if n < 2 {
                return Err(Error::ResidueOutOfRange {
                    index: j,
                    value: n,
                    bound: 2,
                });
            }
        }
        let size = levels.iter().product();
        let s = levels.iter().fold(1usize, |acc, &n| acc.lcm(&n));
        let gamma = levels.iter().map(|&n| s / n).collect();
        Ok(DesignSpace {
            levels,
            size,
            s,
            gamma,
        })
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn num_factors(&self) -> usize {
        self.levels.len()
    }

    /// #D: the number of points of the full design.
    pub fn size(&self) -> usize {
        self.size
    }

    /// s = lcm(n_1..n_m): the ambient root order for all term values.
    pub fn root_order(&self) -> usize {
        self.s
    }

    /// gamma_j = s / n_j: the index scaling embedding Omega_{n_j} in Omega_s.
    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    fn check(&self, point: &Exponent) -> Result<()> {
        if point.entries.len() != self.levels.len() {
            return Err(Error::SpaceMismatch);
        }
        for (j, (&e, &n)) in point.entries.iter().zip(&self.levels).enumerate() {
            if e >= n {
                return Err(Error::ResidueOutOfRange {
                    index: j,
                    value: e,
                    bound: n,
                });
            }
        }
        Ok(())
    }

    /// Mixed-radix rank, lexicographic with the last factor fastest.
    pub fn rank(&self, point: &Exponent) -> Result<usize> {
        self.check(point)?;
        let mut r = 0usize;
        for (&e, &n) in point.entries.iter().zip(&self.levels) {
            r = r * n + e;
        }
        Ok(r)
    }

    pub fn unrank(&self, mut r: usize) -> Result<Exponent> {
        if r >= self.size {
            return Err(Error::RankOutOfRange {
                rank: r,
                size: self.size,
            });
        }
        let mut entries = vec![0usize; self.levels.len()];
        for (slot, &n) in entries.iter_mut().zip(&self.levels).rev() {
            *slot = r % n;
            r /= n;
        }
        Ok(Exponent::new(entries))
    }

    pub fn points(&self) -> impl Iterator<Item = Exponent> + '_ {
        (0..self.size).map(|r| self.unrank(r).expect("rank in range"))
    }

    /// Componentwise [a_j - b_j] in Z_{n_j}.
    pub fn sub_exponents(&self, a: &Exponent, b: &Exponent) -> Result<Exponent> {
        self.check(a)?;
        self.check(b)?;
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .zip(&self.levels)
            .map(|((&x, &y), &n)| (x + n - y) % n)
            .collect();
        Ok(Exponent::new(entries))
    }

    /// Componentwise [a_j + b_j] in Z_{n_j}.
    pub fn add_exponents(&self, a: &Exponent, b: &Exponent) -> Result<Exponent> {
        self.check(a)?;
        self.check(b)?;
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .zip(&self.levels)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect();
        Ok(Exponent::new(entries))
    }

    pub fn neg_exponent(&self, a: &Exponent) -> Result<Exponent> {
        self.sub_exponents(&Exponent::origin(self.num_factors()), a)
    }

    /// Exponent t of X^alpha(zeta) = w_s^t, with t = sum_j gamma_j alpha_j zeta_j mod s.
    pub fn term_value(&self, alpha: &Exponent, zeta: &Exponent) -> Result<usize> {
        self.check(alpha)?;
        self.check(zeta)?;
        let mut t = 0usize;
        for ((&a, &z), &g) in alpha.entries.iter().zip(&zeta.entries).zip(&self.gamma) {
            t = (t + g * a * z) % self.s;
        }
        Ok(t)
    }

    /// The order s' of the value group of X^alpha: on the full design the
    /// term takes each value of Omega_{s'} equally often. s' = 1 iff alpha = 0.
    pub fn term_level_group(&self, alpha: &Exponent) -> Result<usize> {
        self.check(alpha)?;
        let mut sp = 1usize;
        for (&a, &n) in alpha.entries.iter().zip(&self.levels) {
            if a != 0 {
                sp = sp.lcm(&(n / a.gcd(&n)));
            }
        }
        Ok(sp)
    }
}

/// An m-tuple of residues: both a design point in the integer coding and
/// a monomial multi-exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    entries: Vec<usize>,
}

impl Exponent {
    pub fn new(entries: Vec<usize>) -> Self {
        Exponent { entries }
    }

    pub fn origin(m: usize) -> Self {
        Exponent {
            entries: vec![0; m],
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_origin(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Number of nonzero entries: the order of the interaction term.
    pub fn order(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Zero-based indices of the factors with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, _)| j)
            .collect()
    }
}

/// A fraction stored as its counting function: replicate counts over all
/// #D points of the full design, indexed by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    space: DesignSpace,
    counts: Vec<u64>,
}

impl Fraction {
    pub fn new(space: DesignSpace, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != space.size() {
            return Err(Error::Internal(format!(
                "counts length {} does not match design size {}",
                counts.len(),
                space.size()
            )));
        }
        Ok(Fraction { space, counts })
    }

    pub fn empty(space: DesignSpace) -> Self {
        let counts = vec![0; space.size()];
        Fraction { space, counts }
    }

    pub fn full(space: DesignSpace) -> Self {
        let counts = vec![1; space.size()];
        Fraction { space, counts }
    }

    pub fn from_points<I>(space: DesignSpace, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, u64)>,
    {
        let mut counts = vec![0u64; space.size()];
        for (p, c) in points {
            counts[space.rank(&p)?] += c;
        }
        Ok(Fraction { space, counts })
    }

    pub fn space(&self) -> &DesignSpace {
        &self.space
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, point: &Exponent) -> Result<u64> {
        Ok(self.counts[self.space.rank(point)?])
    }

    /// #F: the total number of treatment combinations, replicates included.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_single_replicate(&self) -> bool {
        self.counts.iter().all(|&c| c <= 1)
    }

    /// Points with a positive count, in rank order, with their counts.
    pub fn support(&self) -> impl Iterator<Item = (Exponent, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(
            move |(r, &c)| {
                (self.space.unrank(r).expect("rank in range"), c)
            },
        )
    }

    /// Replicate vector of X^alpha over its own value group Omega_{s'}:
    /// r_k counts how often the term takes the value w_{s'}^k on the fraction.
    pub fn replicate_vector(&self, alpha: &Exponent) -> Result<Vec<u64>> {
        let sp = self.space.term_level_group(alpha)?;
        let step = self.space.root_order() / sp;
        let mut r = vec![0u64; sp];
        for (rank, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let zeta = self.space.unrank(rank)?;
            let t = self.space.term_value(alpha, &zeta)?;
            debug_assert_eq!(t % step, 0, "term value outside its value group");
            r[t / step] += c;
        }
        Ok(r)
    }

    /// The complement within the full design. Requires a single-replicate
    /// fraction.
    pub fn complement(&self) -> Result<Self> {
        if !self.is_single_replicate() {
            return Err(Error::NotIndicator);
        }
        let counts = self.counts.iter().map(|&c| 1 - c).collect();
        Ok(Fraction {
            space: self.space.clone(),
            counts,
        })
    }

    /// E_F(X^alpha) numerator as a cyclotomic integer of order s:
    /// sum over the fraction of X^alpha values, counts included.
    pub fn term_sum(&self, alpha: &Exponent) -> Result<Cyc<Int>> {
        let s = self.space.root_order();
        let mut acc = Cyc::zero(s);
        for (rank, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let zeta = self.space.unrank(rank)?;
            let t = self.space.term_value(alpha, &zeta)?;
            acc = acc.add(&Cyc::basis(s, t).scale(&Int::from(c)));
        }
        Ok(acc)
    }
}
