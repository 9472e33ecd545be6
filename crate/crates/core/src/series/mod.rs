//! Truncated formal power series over the rationals.
//!
//! A [`TruncatedSeries`] stores ordinary coefficients `c_0, …, c_K`; terms of
//! degree above `K` are unknown. Binary operations keep the shorter of the
//! two precisions and never invent coefficients past it.

mod rules;

pub use rules::{product_rule, quotient_rule_strict, quotient_rule_weighted};

use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series known through order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a truncated series needs at least its constant term".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_fn(order, |m| if m == 0 { c.clone() } else { Rational::zero() })
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// Highest degree whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Option<&Rational> {
        self.coeffs.get(m)
    }

    /// Drop everything above `order`. A larger `order` is clamped.
    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |m| &self.coeffs[m] + &other.coeffs[m])
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |m| &self.coeffs[m] - &other.coeffs[m])
    }

    pub fn scale(&self, k: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            (0..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &other.coeffs[n - j])
                .sum()
        })
    }

    /// `self^r` by binary exponentiation; `self^0` is the constant 1.
    pub fn pow(&self, r: u32) -> TruncatedSeries {
        let mut result = TruncatedSeries::one(self.order());
        let mut base = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let inv_a0 = self.coeffs[0].recip().map_err(|_| Error::NotInvertible)?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0.clone());
        for n in 1..=self.order() {
            let s: Rational = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &out[n - j])
                .sum();
            out.push(-(s * &inv_a0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Hasse–Teichmüller derivative `H^(n)`: maps `c_m z^m` to
    /// `C(m, n) c_m z^(m-n)`. The result is known through order `K - n`.
    ///
    /// Fails when `n` exceeds the known order, since not even the constant
    /// term of the result would be known.
    pub fn ht_derivative(&self, n: usize) -> Result<TruncatedSeries> {
        let k = self.order();
        if n > k {
            return Err(Error::InsufficientPrecision {
                needed: n,
                available: k,
            });
        }
        Ok(Self::from_fn(k - n, |j| {
            let m = j + n;
            &self.coeffs[m] * Rational::from_integer(binomial(m as u64, n as i64))
        }))
    }

    /// `H^(n)(self)` at `t = 0`, which is the ordinary coefficient `c_n`.
    pub fn ht_eval_at_zero(&self, n: usize) -> Result<Rational> {
        self.coeffs
            .get(n)
            .cloned()
            .ok_or(Error::InsufficientPrecision {
                needed: n,
                available: self.order(),
            })
    }
}
