//! Randomized invariants over small design spaces.

use ffdesign::analysis::{project, project_from_table};
use ffdesign::counting::{
    coefficients_fast, coefficients_naive, conjugate_symmetry_holds, reconstruct,
};
use ffdesign::design::{DesignSpace, Fraction};
use proptest::prelude::*;

fn small_space() -> impl Strategy<Value = DesignSpace> {
    prop::collection::vec(2usize..=4, 1..=3)
        .prop_map(|levels| DesignSpace::new(levels).unwrap())
}

fn fraction() -> impl Strategy<Value = Fraction> {
    small_space().prop_flat_map(|space| {
        let size = space.size();
        prop::collection::vec(0u64..=2, size)
            .prop_map(move |counts| Fraction::new(space.clone(), counts).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_transform_matches_defining_sums(f in fraction()) {
        let fast = coefficients_fast(&f);
        let naive = coefficients_naive(&f);
        prop_assert_eq!(fast.denom(), naive.denom());
        for (a, b) in fast.numerators().iter().zip(naive.numerators()) {
            prop_assert!(a.eq_elem(b));
        }
    }

    #[test]
    fn reconstruction_round_trips(f in fraction()) {
        let table = coefficients_fast(&f);
        let back = reconstruct(&table).unwrap();
        prop_assert_eq!(back.counts(), f.counts());
    }

    #[test]
    fn coefficients_are_conjugate_symmetric(f in fraction()) {
        prop_assert!(conjugate_symmetry_holds(&coefficients_fast(&f)));
    }

    #[test]
    fn projection_paths_agree(f in fraction(), seed in any::<u64>()) {
        let m = f.space().num_factors();
        let keep: Vec<usize> = (0..m).filter(|j| (seed >> j) & 1 == 1).collect();
        if keep.is_empty() {
            return Ok(());
        }
        let table = coefficients_fast(&f);
        let direct = project(&f, &keep).unwrap();
        let via_table = project_from_table(&table, &keep).unwrap();
        prop_assert_eq!(direct.counts(), via_table.counts());
    }

    #[test]
    fn complement_restores_full_design(f in fraction()) {
        // complement is defined for single-replicate fractions
        let counts: Vec<u64> = f.counts().iter().map(|&c| c.min(1)).collect();
        let f = Fraction::new(f.space().clone(), counts).unwrap();
        let complement = f.complement().unwrap();
        let total: Vec<u64> = f
            .counts()
            .iter()
            .zip(complement.counts())
            .map(|(a, b)| a + b)
            .collect();
        prop_assert_eq!(total, vec![1u64; f.space().size()]);
    }
}
