//! Bundled example designs: the classical 3^{4-2} fraction, a regular 6^3
//! fraction, and the OA(18, 2^1 3^7, 2) array of Wu & Hamada (Table 7C.2).

use crate::design::{DesignSpace, Exponent, Fraction};
use crate::regular::{generate_from_equations, DefiningEquations};

/// The L18 orthogonal array: one two-level column and seven three-level
/// columns, eighteen runs.
pub const L18_ROWS: [[usize; 8]; 18] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 2, 2, 2, 2, 2, 2],
    [0, 1, 0, 0, 1, 1, 2, 2],
    [0, 1, 1, 1, 2, 2, 0, 0],
    [0, 1, 2, 2, 0, 0, 1, 1],
    [0, 2, 0, 1, 0, 2, 1, 2],
    [0, 2, 1, 2, 1, 0, 2, 0],
    [0, 2, 2, 0, 2, 1, 0, 1],
    [1, 0, 0, 2, 2, 1, 1, 0],
    [1, 0, 1, 0, 0, 2, 2, 1],
    [1, 0, 2, 1, 1, 0, 0, 2],
    [1, 1, 0, 1, 2, 0, 2, 1],
    [1, 1, 1, 2, 0, 1, 0, 2],
    [1, 1, 2, 0, 1, 2, 1, 0],
    [1, 2, 0, 2, 1, 2, 0, 1],
    [1, 2, 1, 0, 2, 0, 1, 2],
    [1, 2, 2, 1, 0, 1, 2, 0],
];

/// The 3^{4-2} fraction defined by X1 X2 X3^2 = 1 and X1 X2^2 X4 = 1.
pub fn three_four_two() -> Fraction {
    let eqs = three_four_two_equations();
    generate_from_equations(&eqs).expect("fixture equations are consistent")
}

pub fn three_four_two_equations() -> DefiningEquations {
    let space = DesignSpace::new(vec![3, 3, 3, 3]).expect("valid levels");
    DefiningEquations::new(
        space,
        vec![
            (Exponent::new(vec![1, 1, 2, 0]), 0),
            (Exponent::new(vec![1, 2, 0, 1]), 0),
        ],
    )
    .expect("fixture words are valid")
}

/// The regular 6^3 fraction defined by X^(3,3,3) = w_3 and X^(4,4,2) = w_2.
pub fn six_cube() -> Fraction {
    let eqs = six_cube_equations();
    generate_from_equations(&eqs).expect("fixture equations are consistent")
}

pub fn six_cube_equations() -> DefiningEquations {
    let space = DesignSpace::new(vec![6, 6, 6]).expect("valid levels");
    DefiningEquations::new(
        space,
        vec![
            (Exponent::new(vec![3, 3, 3]), 3),
            (Exponent::new(vec![4, 4, 2]), 2),
        ],
    )
    .expect("fixture words are valid")
}

/// The OA(18, 2^1 3^7, 2) as a single-replicate fraction of the 2 x 3^7
/// full design.
pub fn l18() -> Fraction {
    let space = DesignSpace::new(vec![2, 3, 3, 3, 3, 3, 3, 3]).expect("valid levels");
    Fraction::from_points(
        space,
        L18_ROWS
            .iter()
            .map(|row| (Exponent::new(row.to_vec()), 1)),
    )
    .expect("rows fit the design space")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        assert_eq!(three_four_two().total(), 9);
        assert_eq!(six_cube().total(), 36);
        let l = l18();
        assert_eq!(l.total(), 18);
        assert!(l.is_single_replicate());
        assert_eq!(l.space().size(), 4374);
    }
}
