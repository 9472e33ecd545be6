//! Higher-order Appell polynomials `A_n^(r)(z)` and the classical power-sum
//! identities they satisfy.

use std::fmt;

use super::related::{related_numbers_recurrence, RelatedNumberTable};
use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::families::FamilySpec;

/// `A_n^(r)(z) = Σ_{m=0}^{n} C(n, m) a_m^(r) z^(n-m)`, stored as
/// coefficients in ascending powers of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellPolynomial {
    n: usize,
    r: u32,
    coeffs: Vec<Rational>,
}

impl AppellPolynomial {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// Formal derivative in `z`, as an ascending coefficient vector.
    pub fn derivative(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * Rational::from(j as i64))
            .collect()
    }
}

impl fmt::Display for AppellPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn appell_polynomial(table: &RelatedNumberTable, n: usize) -> Result<AppellPolynomial> {
    if n > table.n_max() {
        return Err(Error::IndexOutOfRange {
            n,
            n_max: table.n_max(),
        });
    }
    let a = table.values();
    let coeffs = (0..=n)
        .map(|j| &a[n - j] * Rational::from_integer(binomial(n as u64, j as i64)))
        .collect();
    Ok(AppellPolynomial {
        n,
        r: table.r(),
        coeffs,
    })
}

pub fn polynomial_eval(p: &AppellPolynomial, z: &Rational) -> Rational {
    p.eval(z)
}

/// Both sides of `Σ_{j=1}^{m} j^n = (B_{n+1}(m+1) - B_{n+1}) / (n+1)`.
pub fn power_sum_check(n: u32, m: u64) -> Result<(Rational, Rational)> {
    if m == 0 {
        return Err(Error::InvalidParameter("power sums need m >= 1".into()));
    }
    let direct: Rational = (1..=m as i64).map(|j| Rational::from(j).pow(n)).sum();
    let deg = n as usize + 1;
    let seq = FamilySpec::Bernoulli.coefficients(deg)?;
    let table = related_numbers_recurrence(&seq, 1, deg)?;
    let poly = appell_polynomial(&table, deg)?;
    let via_poly =
        (poly.eval(&Rational::from(m as i64 + 1)) - table.get(deg)?).div_int(deg as i64)?;
    Ok((direct, via_poly))
}

/// Both sides of
/// `Σ_{j=1}^{m} (-1)^(j+1) j^n = -((-1)^m E_n(m+1) + E_n(0)) / 2`.
pub fn alt_power_sum_check(n: u32, m: u64) -> Result<(Rational, Rational)> {
    if m == 0 {
        return Err(Error::InvalidParameter("power sums need m >= 1".into()));
    }
    let direct: Rational = (1..=m as i64)
        .map(|j| {
            let t = Rational::from(j).pow(n);
            if j % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum();
    let deg = n as usize;
    let seq = FamilySpec::Euler.coefficients(deg)?;
    let table = related_numbers_recurrence(&seq, 1, deg)?;
    let poly = appell_polynomial(&table, deg)?;
    let mut at_end = poly.eval(&Rational::from(m as i64 + 1));
    if m % 2 == 1 {
        at_end = -at_end;
    }
    let via_poly = -(at_end + poly.eval(&Rational::zero())).div_int(2)?;
    Ok((direct, via_poly))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: FamilySpec, r: u32, n_max: usize) -> RelatedNumberTable {
        related_numbers_recurrence(&spec.coefficients(n_max).unwrap(), r, n_max).unwrap()
    }

    #[test]
    fn low_degree_polynomials() {
        let b = table(FamilySpec::Bernoulli, 1, 3);
        let b1 = appell_polynomial(&b, 1).unwrap();
        assert_eq!(b1.coeffs(), &[Rational::frac(-1, 2), Rational::one()]);
        assert_eq!(b1.to_string(), "-1/2, 1");
        assert_eq!(b1.eval(&Rational::frac(1, 2)), Rational::zero());
        let b0 = appell_polynomial(&b, 0).unwrap();
        assert_eq!(b0.coeffs(), &[Rational::one()]);
        assert_eq!(b0.eval(&Rational::frac(-7, 3)), Rational::one());

        let e = table(FamilySpec::Euler, 1, 1);
        let e1 = appell_polynomial(&e, 1).unwrap();
        assert_eq!(e1.coeffs(), &[Rational::frac(-1, 2), Rational::one()]);
        assert_eq!(
            polynomial_eval(&e1, &Rational::frac(1, 2)),
            Rational::zero()
        );
    }

    #[test]
    fn constant_and_leading_terms() {
        let t = table(FamilySpec::HyperCauchy { m: 2, n: 3 }, 2, 8);
        for n in 0..=8 {
            let p = appell_polynomial(&t, n).unwrap();
            assert_eq!(p.coeffs().len(), n + 1);
            assert!(p.coeffs()[n].is_one());
            assert_eq!(&p.eval(&Rational::zero()), t.get(n).unwrap());
        }
        assert!(appell_polynomial(&t, 9).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(
            power_sum_check(1, 10).unwrap(),
            (Rational::from(55), Rational::from(55))
        );
        assert_eq!(
            power_sum_check(2, 4).unwrap(),
            (Rational::from(30), Rational::from(30))
        );

        assert_eq!(
            alt_power_sum_check(1, 4).unwrap(),
            (Rational::from(-2), Rational::from(-2))
        );
        assert_eq!(
            alt_power_sum_check(2, 3).unwrap(),
            (Rational::from(6), Rational::from(6))
        );
        assert!(power_sum_check(1, 0).is_err());
    }

    #[test]
    fn power_sums_at_exponent_zero() {
        // Both identities are missing the 0^0 = 1 boundary term when n = 0:
        // B_1(m+1) - B_1 = m + 1, and the Euler side lands one step off.
        assert_eq!(
            power_sum_check(0, 7).unwrap(),
            (Rational::from(7), Rational::from(8))
        );
        assert_eq!(
            alt_power_sum_check(0, 2).unwrap(),
            (Rational::zero(), Rational::from(-1))
        );
        assert_eq!(
            alt_power_sum_check(0, 3).unwrap(),
            (Rational::one(), Rational::zero())
        );
    }

    #[test]
    fn power_sums_agree_for_positive_exponents() {
        for n in 1..=8 {
            for m in 1..=12 {
                let (l, r) = power_sum_check(n, m).unwrap();
                assert_eq!(l, r, "n={n} m={m}");
                let (l, r) = alt_power_sum_check(n, m).unwrap();
                assert_eq!(l, r, "alt n={n} m={m}");
            }
        }
    }
}
