//! Binomials, factorials, rising factorials and composition enumeration.

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;
use crate::error::{Error, Result};

/// Largest `n` whose compositions may be enumerated unless overridden.
pub const DEFAULT_ENUMERATION_CAP: usize = 22;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Factorials `0!, 1!, …, n!` as rationals.
pub fn factorial_table(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(Rational::one());
    for i in 1..=n {
        acc *= i;
        out.push(Rational::from_integer(acc.clone()));
    }
    out
}

/// `x (x+1) ⋯ (x+n-1)`, equal to 1 when `n = 0`.
pub fn rising_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    let one = Rational::one();
    for _ in 0..n {
        acc *= &term;
        term += &one;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionKind {
    /// Every part at least 1.
    Strict,
    /// Parts may be 0.
    Weak,
}

/// Enumerate the compositions of `n` into exactly `k` parts in
/// lexicographic order.
///
/// Fails with [`Error::CombinatorialBlowUp`] when `n > cap`.
pub fn compositions(n: usize, k: usize, kind: CompositionKind, cap: usize) -> Result<Compositions> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "a composition needs at least one part".into(),
        ));
    }
    if n > cap {
        return Err(Error::CombinatorialBlowUp { n, cap });
    }
    let offset = match kind {
        CompositionKind::Strict => 1,
        CompositionKind::Weak => 0,
    };
    // Strict compositions of n are weak compositions of n - k shifted by one.
    let state = match kind {
        CompositionKind::Strict if k > n => None,
        _ => {
            let mass = n - k * offset;
            let mut parts = vec![0; k];
            parts[k - 1] = mass;
            Some(parts)
        }
    };
    Ok(Compositions { state, offset })
}

/// Iterator returned by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    state: Option<Vec<usize>>,
    offset: usize,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let parts = self.state.as_mut()?;
        let out = parts.iter().map(|p| p + self.offset).collect();

        // Advance: bump the rightmost slot that still has mass to its right.
        let k = parts.len();
        let mut tail = parts[k - 1];
        let mut advanced = false;
        for i in (0..k.saturating_sub(1)).rev() {
            if tail > 0 {
                parts[i] += 1;
                for p in &mut parts[i + 1..] {
                    *p = 0;
                }
                parts[k - 1] = tail - 1;
                advanced = true;
                break;
            }
            tail += parts[i];
        }
        if !advanced {
            self.state = None;
        }
        Some(out)
    }
}
