//! Exact computations around Weierstrass semigroups: numerical-semigroup
//! invariants, minimal presentations of monomial curves, graded T¹ dimensions,
//! moduli dimension bounds, and symbolic checks for two families of symmetric
//! semigroups of multiplicity six.

pub mod bounds;
pub mod cotangent;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod linalg;
pub mod polyrig;
pub mod semigroup;
pub mod toric;

pub use bounds::{bounds_report, verify_comparison_identity, BoundsReport};
pub use cotangent::{t1_table, GradedT1Table};
pub use error::{Error, Result};
pub use families::{family, verify_family, FamilySpec, FamilyVerification};
pub use semigroup::NumericalSemigroup;
pub use toric::{minimal_relations, BinomialRelation, Factorization};
