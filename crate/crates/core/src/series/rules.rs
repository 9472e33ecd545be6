//! Product and quotient rules for Hasse–Teichmüller derivatives, evaluated
//! term by term as series. They exist to be checked against the direct
//! route (multiply or invert, then differentiate).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::arith::{binomial, CompositionKind, Rational, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};

/// `H^(i)(f)` for `i = 0..=n`, each cut to order `K - n`, the precision of
/// `H^(n)` of anything built from `f`.
fn derivative_ladder(f: &TruncatedSeries, n: usize) -> Result<Vec<TruncatedSeries>> {
    let order = f
        .order()
        .checked_sub(n)
        .ok_or(Error::InsufficientPrecision {
            needed: n,
            available: f.order(),
        })?;
    (0..=n)
        .map(|i| Ok(f.ht_derivative(i)?.truncate(order)))
        .collect()
}

/// A ladder scaled to integer coefficients by one common denominator.
struct IntegerLadder {
    rungs: Vec<Vec<BigInt>>,
    denom: BigInt,
}

impl IntegerLadder {
    fn new(ladder: &[TruncatedSeries]) -> Self {
        let denom = ladder
            .iter()
            .flat_map(|s| s.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let rungs = ladder
            .iter()
            .map(|s| {
                s.coeffs()
                    .iter()
                    .map(|c| c.numer() * (&denom / c.denom()))
                    .collect()
            })
            .collect();
        IntegerLadder { rungs, denom }
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|n| {
            (0..=n)
                .filter(|&j| !a[j].is_zero())
                .map(|j| &a[j] * &b[n - j])
                .sum()
        })
        .collect()
}

/// `Σ Π_j ladders[j][i_j]` over compositions `(i_1, …, i_k)` of `n`. Every
/// term takes one rung from each ladder, so all terms share the denominator
/// `Π_j denom_j` and the sum runs over integers. Tuples are visited depth
/// first so each prefix product is formed once.
fn composition_sum(
    ladders: &[&[TruncatedSeries]],
    n: usize,
    kind: CompositionKind,
) -> Result<Option<TruncatedSeries>> {
    let k = ladders.len();
    if k == 0 {
        return Err(Error::InvalidParameter(
            "a composition needs at least one part".into(),
        ));
    }
    if n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::CombinatorialBlowUp {
            n,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    let min_part = match kind {
        CompositionKind::Strict => 1,
        CompositionKind::Weak => 0,
    };
    if k * min_part > n {
        return Ok(None);
    }
    let lifted: Vec<IntegerLadder> = ladders.iter().map(|l| IntegerLadder::new(l)).collect();
    let denom = lifted.iter().fold(BigInt::one(), |acc, l| acc * &l.denom);
    let mut acc: Option<Vec<BigInt>> = None;
    visit(&lifted, n, min_part, None, &mut acc);
    let sum = acc.expect("at least one composition");
    let coeffs = sum
        .into_iter()
        .map(|c| Rational::new(c, denom.clone()).expect("denominators are positive"))
        .collect();
    Ok(Some(TruncatedSeries::new(coeffs)?))
}

fn visit(
    ladders: &[IntegerLadder],
    remaining: usize,
    min_part: usize,
    prefix: Option<&[BigInt]>,
    acc: &mut Option<Vec<BigInt>>,
) {
    let times = |h: &[BigInt]| match prefix {
        None => h.to_vec(),
        Some(p) => int_mul(p, h),
    };
    let (ladder, rest) = ladders.split_first().expect("at least one ladder");
    if rest.is_empty() {
        let term = times(&ladder.rungs[remaining]);
        match acc {
            None => *acc = Some(term),
            Some(a) => {
                a.truncate(term.len());
                for (x, t) in a.iter_mut().zip(term) {
                    *x += t;
                }
            }
        }
        return;
    }
    let reserve = rest.len() * min_part;
    for i in min_part..=remaining - reserve {
        let next = times(&ladder.rungs[i]);
        visit(rest, remaining - i, min_part, Some(&next), acc);
    }
}

/// Right side of the product rule
/// `H^(n)(f_1⋯f_k) = Σ_{i_1+⋯+i_k=n, i_j≥0} H^(i_1)(f_1)⋯H^(i_k)(f_k)`.
pub fn product_rule(factors: &[TruncatedSeries], n: usize) -> Result<TruncatedSeries> {
    if factors.len() < 2 {
        return Err(Error::InvalidParameter(
            "product rule needs k >= 2 factors".into(),
        ));
    }
    let ladders = factors
        .iter()
        .map(|f| derivative_ladder(f, n))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&[TruncatedSeries]> = ladders.iter().map(|l| l.as_slice()).collect();
    Ok(composition_sum(&refs, n, CompositionKind::Weak)?.expect("weak compositions are nonempty"))
}

fn quotient_rule(f: &TruncatedSeries, n: usize, weighted: bool) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "quotient rule is stated for n >= 1".into(),
        ));
    }
    let ladder = derivative_ladder(f, n)?;
    let inv = f.inverse()?.truncate(f.order() - n);
    let mut total = TruncatedSeries::constant(Rational::zero(), f.order() - n);
    let mut inv_pow = inv.clone();
    for k in 1..=n {
        inv_pow = inv_pow.mul(&inv);
        let refs = vec![ladder.as_slice(); k];
        let kind = if weighted {
            CompositionKind::Weak
        } else {
            CompositionKind::Strict
        };
        let Some(inner) = composition_sum(&refs, n, kind)? else {
            continue;
        };
        let mut coef = if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        if weighted {
            coef *= Rational::from_integer(binomial((n + 1) as u64, (k + 1) as i64));
        }
        total = total.add(&inner.mul(&inv_pow).scale(&coef));
    }
    Ok(total)
}

/// Quotient rule over strict compositions:
/// `H^(n)(1/f) = Σ_{k=1}^{n} (-1)^k f^{-(k+1)} Σ_{i_1+⋯+i_k=n, i_j≥1} Π H^(i_j)(f)`.
pub fn quotient_rule_strict(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    quotient_rule(f, n, false)
}

/// Quotient rule over weak compositions with weights `C(n+1, k+1)`.
pub fn quotient_rule_weighted(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    quotient_rule(f, n, true)
}
