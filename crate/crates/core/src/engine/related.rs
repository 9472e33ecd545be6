//! Related numbers `a_n^(r)`, the coefficients of
//! `1/f(t)^r = Σ a_n^(r) t^n / n!`, by independent routes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::determinant::{appell_matrix, Kernel};
use super::{check_order, compute_d, CoefficientSequence, PowerCoefficientTable};
use crate::arith::{factorial_table, Rational};
use crate::error::{Error, Result};

/// Which route produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Recurrence,
    Composition,
    Determinant(Kernel),
    /// `n! [t^n]` of the inverted series `f(t)^r`.
    SeriesInversion,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Recurrence => f.write_str("recurrence"),
            Algorithm::Composition => f.write_str("composition"),
            Algorithm::Determinant(k) => write!(f, "determinant({k})"),
            Algorithm::SeriesInversion => f.write_str("series-inversion"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatedNumberTable {
    r: u32,
    values: Vec<Rational>,
    algorithm: Algorithm,
}

impl RelatedNumberTable {
    /// Wrap precomputed values. `values[0]` must be 1.
    pub fn from_values(r: u32, values: Vec<Rational>, algorithm: Algorithm) -> Result<Self> {
        check_order(r)?;
        match values.first() {
            Some(a0) if a0.is_one() => Ok(RelatedNumberTable {
                r,
                values,
                algorithm,
            }),
            Some(a0) => Err(Error::NormalizationViolated(a0.to_string())),
            None => Err(Error::InvalidParameter("empty table".into())),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn get(&self, n: usize) -> Result<&Rational> {
        self.values.get(n).ok_or(Error::IndexOutOfRange {
            n,
            n_max: self.n_max(),
        })
    }

    /// First `n ≥ 1` where `Σ_{m=0}^{n} D_r(n-m) a_m / m! ≠ 0`, if any.
    pub fn first_identity_violation(&self, d: &PowerCoefficientTable) -> Option<usize> {
        let n_max = self.n_max().min(d.n_max());
        let facts = factorial_table(n_max);
        (1..=n_max).find(|&n| {
            let s: Rational = (0..=n)
                .map(|m| d.get(n - m) * self.values[m].checked_div(&facts[m]).unwrap())
                .sum();
            !s.is_zero()
        })
    }
}

fn power_table(seq: &CoefficientSequence, r: u32, n_max: usize) -> Result<PowerCoefficientTable> {
    check_order(r)?;
    seq.require(n_max)?;
    compute_d(&seq.truncated(n_max)?, r)
}

/// `a_n = -n! Σ_{m<n} D_r(n-m) a_m / m!` with `a_0 = 1`. O(n_max²).
pub fn related_numbers_recurrence(
    seq: &CoefficientSequence,
    r: u32,
    n_max: usize,
) -> Result<RelatedNumberTable> {
    let d = power_table(seq, r, n_max)?;
    Ok(recurrence_from_d(&d))
}

pub(crate) fn recurrence_from_d(d: &PowerCoefficientTable) -> RelatedNumberTable {
    let n_max = d.n_max();
    let facts = factorial_table(n_max);
    // scaled[m] = a_m / m!
    let mut scaled: Vec<Rational> = Vec::with_capacity(n_max + 1);
    scaled.push(Rational::one());
    for n in 1..=n_max {
        let s: Rational = (0..n)
            .filter(|&m| !scaled[m].is_zero())
            .map(|m| d.get(n - m) * &scaled[m])
            .sum();
        scaled.push(-s);
    }
    let values = scaled.iter().zip(&facts).map(|(b, f)| b * f).collect();
    RelatedNumberTable {
        r: d.r(),
        values,
        algorithm: Algorithm::Recurrence,
    }
}

/// `a_n = n! Σ_{k=1}^{n} (-1)^k Σ_{e_1+⋯+e_k=n, e_i≥1} D_r(e_1)⋯D_r(e_k)`.
///
/// Enumerates all `2^(n-1)` compositions of each `n`, so `n_max` must not
/// exceed `cap`.
pub fn related_numbers_composition(
    seq: &CoefficientSequence,
    r: u32,
    n_max: usize,
    cap: usize,
) -> Result<RelatedNumberTable> {
    if n_max > cap {
        return Err(Error::CombinatorialBlowUp { n: n_max, cap });
    }
    let d = power_table(seq, r, n_max)?;
    let facts = factorial_table(n_max);
    // D(e) = lifted[e] / common, so a k-part product is (Π lifted) / common^k
    let common = d.values()[1..]
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let lifted: Vec<BigInt> = d
        .values()
        .iter()
        .map(|v| v.numer() * (&common / v.denom()))
        .collect();
    let mut values = vec![Rational::one()];
    for (n, fact) in facts.iter().enumerate().skip(1) {
        // by_parts[k] = Σ over k-part compositions of Π lifted[e_i]
        let mut by_parts = vec![BigInt::zero(); n + 1];
        composition_products(&lifted, n, &BigInt::one(), 1, &mut by_parts);
        let mut total = Rational::zero();
        let mut scale = BigInt::one();
        for (k, sum) in by_parts.into_iter().enumerate().skip(1) {
            scale *= &common;
            let term = Rational::new(sum, scale.clone()).expect("common denominator is positive");
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        values.push(total * fact);
    }
    Ok(RelatedNumberTable {
        r,
        values,
        algorithm: Algorithm::Composition,
    })
}

/// Depth-first walk over the strict compositions of `remaining`, adding
/// each completed product into the bucket for its number of parts. Each
/// prefix product is formed once.
fn composition_products(
    lifted: &[BigInt],
    remaining: usize,
    prefix: &BigInt,
    parts: usize,
    by_parts: &mut [BigInt],
) {
    for e in 1..=remaining {
        if lifted[e].is_zero() {
            continue;
        }
        let product = prefix * &lifted[e];
        if e == remaining {
            by_parts[parts] += product;
        } else {
            composition_products(lifted, remaining - e, &product, parts + 1, by_parts);
        }
    }
}

/// `a_n = (-1)^n n! det M_n`, where `M_n` is the lower-Hessenberg matrix of
/// [`appell_matrix`]. Every `M_n` is the leading block of `M_{n_max}`, so one
/// matrix serves the whole table.
pub fn related_numbers_determinant(
    seq: &CoefficientSequence,
    r: u32,
    n_max: usize,
    kernel: Kernel,
) -> Result<RelatedNumberTable> {
    let d = power_table(seq, r, n_max)?;
    determinant_from_d(&d, kernel)
}

pub(crate) fn determinant_from_d(
    d: &PowerCoefficientTable,
    kernel: Kernel,
) -> Result<RelatedNumberTable> {
    let n_max = d.n_max();
    let matrix = appell_matrix(d, n_max)?;
    let trace = kernel.leading_minors(&matrix)?;
    let facts = factorial_table(n_max);
    let values = trace
        .minors
        .iter()
        .enumerate()
        .map(|(n, det)| {
            let v = det * &facts[n];
            if n % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    Ok(RelatedNumberTable {
        r: d.r(),
        values,
        algorithm: Algorithm::Determinant(kernel),
    })
}

/// `a_n = n! [t^n] (f(t)^r)^{-1}` by direct series inversion.
pub fn related_numbers_series_inversion(
    seq: &CoefficientSequence,
    r: u32,
    n_max: usize,
) -> Result<RelatedNumberTable> {
    check_order(r)?;
    let f = seq.truncated(n_max)?.ordinary_series();
    let inv = f.pow(r).inverse()?;
    let facts = factorial_table(n_max);
    let values = inv
        .coeffs()
        .iter()
        .zip(&facts)
        .map(|(c, f)| c * f)
        .collect();
    Ok(RelatedNumberTable {
        r,
        values,
        algorithm: Algorithm::SeriesInversion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub algorithm: Algorithm,
    pub expected: Rational,
    pub found: Rational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} disagrees at n = {}: expected {}, found {}",
            self.algorithm, self.n, self.expected, self.found
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossVerifyReport {
    pub r: u32,
    pub n_max: usize,
    /// Highest `n` compared for the composition route.
    pub composition_checked_through: usize,
    pub algorithms: Vec<Algorithm>,
    pub first_mismatch: Option<Mismatch>,
}

impl CrossVerifyReport {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// First index (smallest `n`, then table order) where any of `others`
/// departs from `reference`. Each table is compared on its own range.
pub fn compare_tables(
    reference: &RelatedNumberTable,
    others: &[&RelatedNumberTable],
) -> Option<Mismatch> {
    let longest = others.iter().map(|t| t.n_max()).max()?;
    for n in 0..=longest.min(reference.n_max()) {
        for t in others {
            if let Some(v) = t.values.get(n) {
                if v != &reference.values[n] {
                    return Some(Mismatch {
                        n,
                        algorithm: t.algorithm,
                        expected: reference.values[n].clone(),
                        found: v.clone(),
                    });
                }
            }
        }
    }
    None
}

/// Run every route and report the first disagreement with the recurrence.
/// The composition route only covers `n ≤ cap`.
pub fn cross_verify(
    seq: &CoefficientSequence,
    r: u32,
    n_max: usize,
    cap: usize,
) -> Result<CrossVerifyReport> {
    let d = power_table(seq, r, n_max)?;
    let reference = recurrence_from_d(&d);
    let mut others = vec![
        determinant_from_d(&d, Kernel::Hessenberg)?,
        determinant_from_d(&d, Kernel::Bareiss)?,
        related_numbers_series_inversion(seq, r, n_max)?,
    ];
    let comp_limit = n_max.min(cap);
    others.push(related_numbers_composition(seq, r, comp_limit, cap)?);
    let refs: Vec<&RelatedNumberTable> = others.iter().collect();
    let mut algorithms = vec![reference.algorithm];
    algorithms.extend(others.iter().map(|t| t.algorithm));
    Ok(CrossVerifyReport {
        r,
        n_max,
        composition_checked_through: comp_limit,
        algorithms,
        first_mismatch: compare_tables(&reference, &refs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bernoulli(n_max: usize) -> CoefficientSequence {
        CoefficientSequence::new(
            (0..=n_max as i64)
                .map(|n| Rational::frac(1, n + 1))
                .collect(),
        )
        .unwrap()
    }

    fn cauchy(n_max: usize) -> CoefficientSequence {
        // d_n = (-1)^n n!/(n+1) for 2F1(1,1;2;-t)
        let facts = factorial_table(n_max);
        CoefficientSequence::new(
            (0..=n_max)
                .map(|n| {
                    let v = facts[n].div_int(n as i64 + 1).unwrap();
                    if n % 2 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn recurrence_spot_values() {
        let t = related_numbers_recurrence(&bernoulli(4), 1, 4).unwrap();
        let expect: Vec<Rational> = ["1", "-1/2", "1/6", "0", "-1/30"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(t.values(), expect.as_slice());
        let c = related_numbers_recurrence(&cauchy(2), 1, 2).unwrap();
        assert_eq!(c.get(2).unwrap(), &Rational::frac(-1, 6));
        assert_eq!(
            related_numbers_recurrence(&bernoulli(0), 3, 0)
                .unwrap()
                .values(),
            &[Rational::one()]
        );
    }

    #[test]
    fn composition_spot_values() {
        let t = related_numbers_composition(&bernoulli(2), 1, 2, 22).unwrap();
        assert_eq!(t.get(2).unwrap(), &Rational::frac(1, 6));
        let s = CoefficientSequence::new(vec![
            Rational::one(),
            Rational::frac(2, 3),
            Rational::frac(-5, 4),
        ])
        .unwrap();
        for r in 1..=4u32 {
            let d = compute_d(&s, r).unwrap();
            let t = related_numbers_composition(&s, r, 2, 22).unwrap();
            assert_eq!(t.get(1).unwrap(), &-(Rational::from(r as i64) * &s.d()[1]));
            let a2 = Rational::from(2) * (d.get(1) * d.get(1) - d.get(2));
            assert_eq!(t.get(2).unwrap(), &a2);
        }
    }

    #[test]
    fn composition_respects_cap() {
        let err = related_numbers_composition(&bernoulli(25), 1, 23, 22).unwrap_err();
        assert_eq!(err, Error::CombinatorialBlowUp { n: 23, cap: 22 });
    }

    #[test]
    fn determinant_spot_values() {
        for kernel in Kernel::ALL {
            let b = related_numbers_determinant(&bernoulli(2), 1, 2, kernel).unwrap();
            assert_eq!(b.get(2).unwrap(), &Rational::frac(1, 6));
            let c = related_numbers_determinant(&cauchy(1), 1, 1, kernel).unwrap();
            assert_eq!(c.get(1).unwrap(), &Rational::frac(1, 2));
        }
    }

    #[test]
    fn precision_is_checked() {
        assert!(matches!(
            related_numbers_recurrence(&bernoulli(3), 1, 5),
            Err(Error::InsufficientPrecision { .. })
        ));
        assert!(related_numbers_recurrence(&bernoulli(3), 0, 2).is_err());
    }

    #[test]
    fn bernoulli_cross_verifies() {
        let report = cross_verify(&bernoulli(12), 1, 12, 22).unwrap();
        assert!(report.agrees(), "{:?}", report.first_mismatch);
        assert_eq!(report.algorithms.len(), 5);
    }

    #[test]
    fn corrupted_table_is_located() {
        let good = related_numbers_recurrence(&bernoulli(8), 1, 8).unwrap();
        let mut values = good.values().to_vec();
        values[5] += Rational::frac(1, 1000);
        values[7] += Rational::one();
        let bad = RelatedNumberTable::from_values(1, values, Algorithm::Composition).unwrap();
        let m = compare_tables(&good, &[&good.clone(), &bad]).unwrap();
        assert_eq!(m.n, 5);
        assert_eq!(m.algorithm, Algorithm::Composition);
        assert!(compare_tables(&good, &[&good.clone()]).is_none());
    }
}
