//! Exact polynomial arithmetic over ℚ with weight gradings, and the explicit
//! polynomial data of the two multiplicity-6 families.

pub mod family;
pub mod poly;
pub mod ring;
pub mod skew;

pub use family::{
    base_equations, base_equations_in, divisibility_right_hand_sides, equal_up_to_sign,
    family_initial_forms, initial_forms_in, matrix_symbols, monic_divisor, partial_degree,
    partial_weight, pfaffian_matrix, pfaffian_matrix_in, quadratic_cone_check,
    quadratic_cone_report, smoothing_generators, syzygy_residuals, unfolded_generators,
    verify_smoothing_solution, verify_syzygies_family1, FamilyRing, InitialForm, Normalization,
    Partial, QuadraticConeReport,
};
pub use poly::{rational, univariate_resultant, Monomial, Polynomial};
pub use ring::Ring;
pub use skew::{sub_pfaffians, SkewMatrix5};
