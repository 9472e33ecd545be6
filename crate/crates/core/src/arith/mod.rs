//! Exact rationals and combinatorial primitives.

mod combinatorics;
mod rational;

pub use combinatorics::{
    binomial, compositions, factorial, factorial_table, rising_factorial, CompositionKind,
    Compositions, DEFAULT_ENUMERATION_CAP,
};
pub use rational::Rational;
