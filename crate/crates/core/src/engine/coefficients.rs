use crate::arith::{factorial_table, Rational};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Exponential coefficients `d_0, …, d_{n_max}` of
/// `f(t) = Σ d_n t^n / n!`, normalized so that `d_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSequence {
    d: Vec<Rational>,
}

impl CoefficientSequence {
    pub fn new(d: Vec<Rational>) -> Result<Self> {
        match d.first() {
            None => Err(Error::InvalidParameter(
                "coefficient sequence is empty".into(),
            )),
            Some(d0) if !d0.is_one() => Err(Error::NormalizationViolated(d0.to_string())),
            Some(_) => Ok(CoefficientSequence { d }),
        }
    }

    pub fn n_max(&self) -> usize {
        self.d.len() - 1
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    /// The first `n_max + 1` terms, or an error if fewer are known.
    pub fn truncated(&self, n_max: usize) -> Result<CoefficientSequence> {
        self.require(n_max)?;
        Ok(CoefficientSequence {
            d: self.d[..=n_max].to_vec(),
        })
    }

    pub(crate) fn require(&self, n_max: usize) -> Result<()> {
        if n_max > self.n_max() {
            return Err(Error::InsufficientPrecision {
                needed: n_max,
                available: self.n_max(),
            });
        }
        Ok(())
    }

    /// `f(t)` as a series of ordinary coefficients `d_m / m!`.
    pub fn ordinary_series(&self) -> TruncatedSeries {
        let facts = factorial_table(self.n_max());
        TruncatedSeries::from_fn(self.n_max(), |m| {
            self.d[m]
                .checked_div(&facts[m])
                .expect("factorials are nonzero")
        })
    }
}

/// `D_r(e)` for `e = 0..=n_max`: the ordinary coefficients of `f(t)^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCoefficientTable {
    r: u32,
    values: Vec<Rational>,
}

impl PowerCoefficientTable {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, e: usize) -> &Rational {
        &self.values[e]
    }

    /// Table made of the first `n_max + 1` entries.
    pub fn truncated(&self, n_max: usize) -> Result<PowerCoefficientTable> {
        if n_max > self.n_max() {
            return Err(Error::InsufficientPrecision {
                needed: n_max,
                available: self.n_max(),
            });
        }
        Ok(PowerCoefficientTable {
            r: self.r,
            values: self.values[..=n_max].to_vec(),
        })
    }
}

pub(crate) fn check_order(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("order r must be at least 1".into()));
    }
    Ok(())
}

/// `D_r(e) = Σ_{i_1+⋯+i_r=e} d_{i_1}⋯d_{i_r} / (i_1!⋯i_r!)`, computed as
/// the coefficients of `f(t)^r`.
pub fn compute_d(seq: &CoefficientSequence, r: u32) -> Result<PowerCoefficientTable> {
    check_order(r)?;
    let values = seq.ordinary_series().pow(r).into_coeffs();
    Ok(PowerCoefficientTable { r, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{compositions, CompositionKind};

    fn seq(v: &[(i64, i64)]) -> CoefficientSequence {
        CoefficientSequence::new(v.iter().map(|&(p, q)| Rational::frac(p, q)).collect()).unwrap()
    }

    // Literal weak-composition sum, kept independent of the series power.
    fn d_by_compositions(s: &CoefficientSequence, r: usize, e: usize) -> Rational {
        let facts = factorial_table(e);
        compositions(e, r, CompositionKind::Weak, 22)
            .unwrap()
            .map(|parts| {
                parts
                    .iter()
                    .map(|&i| s.d()[i].checked_div(&facts[i]).unwrap())
                    .product::<Rational>()
            })
            .sum()
    }

    #[test]
    fn normalization() {
        assert!(matches!(
            CoefficientSequence::new(vec![Rational::from(2)]),
            Err(Error::NormalizationViolated(ref s)) if s == "2"
        ));
        assert!(CoefficientSequence::new(vec![]).is_err());
    }

    #[test]
    fn order_one_is_ordinary_coefficients() {
        let s = seq(&[(1, 1), (3, 4), (-2, 5), (7, 3), (1, 9)]);
        let d1 = compute_d(&s, 1).unwrap();
        let facts = factorial_table(4);
        for (e, fact) in facts.iter().enumerate() {
            assert_eq!(d1.get(e), &s.d()[e].checked_div(fact).unwrap());
        }
    }

    #[test]
    fn order_two_first_entry() {
        let s = seq(&[(1, 1), (3, 4), (-2, 5)]);
        let d2 = compute_d(&s, 2).unwrap();
        assert_eq!(d2.get(0), &Rational::one());
        assert_eq!(d2.get(1), &(Rational::from(2) * &s.d()[1]));
    }

    #[test]
    fn bernoulli_entries() {
        let s =
            CoefficientSequence::new((0..8).map(|n| Rational::frac(1, n + 1)).collect()).unwrap();
        let d1 = compute_d(&s, 1).unwrap();
        let facts = factorial_table(9);
        for e in 0..8 {
            assert_eq!(d1.get(e), &facts[e + 1].recip().unwrap());
        }
    }

    #[test]
    fn series_power_matches_literal_sum() {
        let s = seq(&[
            (1, 1),
            (-1, 2),
            (5, 3),
            (2, 7),
            (-9, 4),
            (1, 1),
            (3, 8),
            (-4, 9),
            (6, 5),
        ]);
        for r in 1..=3u32 {
            let table = compute_d(&s, r).unwrap();
            for e in 0..=8 {
                assert_eq!(
                    table.get(e),
                    &d_by_compositions(&s, r as usize, e),
                    "r={r} e={e}"
                );
            }
        }
    }

    #[test]
    fn rejects_order_zero() {
        assert!(compute_d(&seq(&[(1, 1)]), 0).is_err());
    }
}
