//! Round trips between defining equations, generated fractions, and the
//! regularity analysis.

use ffdesign::analysis::is_self_conjugate;
use ffdesign::counting::coefficients_fast;
use ffdesign::design::{DesignSpace, Exponent, Fraction};
use ffdesign::fixtures;
use ffdesign::regular::{
    check_regular, close_group, generate_from_equations, DefiningEquations,
};

fn ex(e: &[usize]) -> Exponent {
    Exponent::new(e.to_vec())
}

#[test]
fn analysis_recovers_defining_equations() {
    for eqs in [
        fixtures::three_four_two_equations(),
        fixtures::six_cube_equations(),
        DefiningEquations::new(
            DesignSpace::new(vec![2, 2, 2, 2]).unwrap(),
            vec![(ex(&[1, 1, 1, 0]), 0), (ex(&[0, 1, 1, 1]), 1)],
        )
        .unwrap(),
        DefiningEquations::new(
            DesignSpace::new(vec![4, 4]).unwrap(),
            vec![(ex(&[1, 1]), 2)],
        )
        .unwrap(),
    ] {
        let f = generate_from_equations(&eqs).unwrap();
        let table = coefficients_fast(&f);
        let report = check_regular(&table).unwrap();
        assert!(report.regular);
        assert_eq!(report.subgroup.as_deref(), Some(close_group(&eqs).unwrap().words()));
        assert_eq!(report.l as u64 * f.total(), f.space().size() as u64);
        // a regular fraction with all e = 0 is self-conjugate
        if report
            .subgroup
            .as_ref()
            .unwrap()
            .iter()
            .all(|(_, e)| *e == 0)
        {
            assert!(is_self_conjugate(&table));
        }
    }
}

#[test]
fn irregular_fraction_is_detected_with_witness() {
    // 5 of the 6 points of a 2x3: unbalanced, so not regular
    let space = DesignSpace::new(vec![2, 3]).unwrap();
    let f = Fraction::new(space, vec![1, 1, 1, 1, 1, 0]).unwrap();
    let report = check_regular(&coefficients_fast(&f)).unwrap();
    assert!(!report.regular);
    assert!(report.subgroup.is_none());
    assert!(report.witness.is_some());
}

#[test]
fn inconsistent_equations_are_rejected() {
    let space = DesignSpace::new(vec![3, 3]).unwrap();
    let eqs = DefiningEquations::new(
        space,
        vec![(ex(&[1, 1]), 0), (ex(&[2, 2]), 1)],
    )
    .unwrap();
    assert!(close_group(&eqs).is_err());
    assert!(generate_from_equations(&eqs).is_err());
}
