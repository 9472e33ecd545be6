//! Exact computation of the related numbers `a_n^(r)` and polynomials
//! `A_n^(r)(z)` of higher-order Appell sequences,
//!
//! ```text
//! e^{zt} / f(t)^r = Σ A_n^(r)(z) t^n / n!,    a_n^(r) = A_n^(r)(0),
//! ```
//!
//! where `f(t) = Σ d_n t^n / n!` with `d_0 = 1`. The related numbers are
//! available through a linear recurrence, an explicit sum over compositions,
//! a lower-Hessenberg determinant (two kernels) and direct series inversion,
//! all in exact rational arithmetic so they can be compared for equality.
//!
//! ```
//! use appell_core::{related_numbers_recurrence, FamilySpec, Rational};
//!
//! let seq = FamilySpec::Bernoulli.coefficients(12).unwrap();
//! let table = related_numbers_recurrence(&seq, 1, 12).unwrap();
//! assert_eq!(table.values()[12], Rational::frac(-691, 2730));
//! ```

pub mod arith;
pub mod bench;
pub mod engine;
mod error;
pub mod families;
pub mod series;

pub use arith::{
    binomial, compositions, factorial, rising_factorial, CompositionKind, Rational,
    DEFAULT_ENUMERATION_CAP,
};
pub use engine::{
    alt_power_sum_check, appell_polynomial, compute_d, cross_verify, polynomial_eval,
    power_sum_check, related_numbers_composition, related_numbers_determinant,
    related_numbers_recurrence, related_numbers_series_inversion, Algorithm, AppellPolynomial,
    CoefficientSequence, CrossVerifyReport, Kernel, PowerCoefficientTable, RelatedNumberTable,
};
pub use error::{Error, Result};
pub use families::{family_coefficients, family_identity_checks, FamilySpec};
pub use series::TruncatedSeries;
