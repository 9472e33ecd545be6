//! Power-coefficient tables `D_r(e)`, the related numbers `a_n^(r)` by
//! several independent algorithms, and the Appell polynomials built on them.

mod coefficients;
pub mod determinant;
mod polynomial;
mod related;

pub(crate) use coefficients::check_order;
pub use coefficients::{compute_d, CoefficientSequence, PowerCoefficientTable};
pub use determinant::{appell_matrix, Kernel, Matrix, MinorTrace};
pub use polynomial::{
    alt_power_sum_check, appell_polynomial, polynomial_eval, power_sum_check, AppellPolynomial,
};
pub use related::{
    compare_tables, cross_verify, related_numbers_composition, related_numbers_determinant,
    related_numbers_recurrence, related_numbers_series_inversion, Algorithm, CrossVerifyReport,
    Mismatch, RelatedNumberTable,
};
