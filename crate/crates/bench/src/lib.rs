//! Fixtures shared by the benchmarks.

use appell_core::engine::{appell_matrix, Matrix};
use appell_core::{compute_d, FamilySpec, PowerCoefficientTable};

/// `D_r(e)` for `e ≤ n_max`.
pub fn power_table(family: &FamilySpec, r: u32, n_max: usize) -> PowerCoefficientTable {
    let seq = family.coefficients(n_max).expect("built-in family");
    compute_d(&seq, r).expect("r >= 1")
}

/// The `n × n` determinant matrix for `family` at order `r`.
pub fn matrix(family: &FamilySpec, r: u32, n: usize) -> Matrix {
    appell_matrix(&power_table(family, r, n), n).expect("table covers n")
}
