//! Generating families `f(t) = Σ d_n t^n / n!` and custom sequences.

use std::fmt;
use std::path::Path;

use crate::arith::{factorial_table, rising_factorial, Rational};
use crate::engine::CoefficientSequence;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `f(t) = (e^t - 1)/t`, so `d_n = 1/(n+1)`.
    Bernoulli,
    /// `f(t) = (e^t + 1)/2`, so `d_0 = 1` and `d_n = 1/2` afterwards.
    Euler,
    /// `f(t) = 1F1(M; M+N; t)`, `d_n = (M)^(n) / (M+N)^(n)`.
    HyperBernoulli { m: u32, n: u32 },
    /// `f(t) = 2F1(M, N; N+1; -t)`, `d_n = (-1)^n (M)^(n) (N)^(n) / (N+1)^(n)`.
    HyperCauchy { m: u32, n: u32 },
    /// User-supplied `d_0, d_1, …` with `d_0 = 1`.
    Custom(Vec<Rational>),
}

impl FamilySpec {
    /// The four built-in families with representative parameters.
    pub fn catalog() -> Vec<FamilySpec> {
        vec![
            FamilySpec::Bernoulli,
            FamilySpec::Euler,
            FamilySpec::HyperBernoulli { m: 2, n: 3 },
            FamilySpec::HyperCauchy { m: 3, n: 2 },
        ]
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::HyperBernoulli { m, n } | FamilySpec::HyperCauchy { m, n } => {
                if *m == 0 || *n == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "hypergeometric parameters must be positive (M = {m}, N = {n})"
                    )));
                }
            }
            FamilySpec::Custom(d) => match d.first() {
                None => return Err(Error::InvalidParameter("custom family is empty".into())),
                Some(d0) if !d0.is_one() => {
                    return Err(Error::NormalizationViolated(d0.to_string()))
                }
                Some(_) => {}
            },
            FamilySpec::Bernoulli | FamilySpec::Euler => {}
        }
        Ok(())
    }

    /// `d_0, …, d_{n_max}`.
    pub fn coefficients(&self, n_max: usize) -> Result<CoefficientSequence> {
        self.validate()?;
        let d = match self {
            FamilySpec::Bernoulli => (0..=n_max as i64)
                .map(|k| Rational::frac(1, k + 1))
                .collect(),
            FamilySpec::Euler => (0..=n_max)
                .map(|k| {
                    if k == 0 {
                        Rational::one()
                    } else {
                        Rational::frac(1, 2)
                    }
                })
                .collect(),
            FamilySpec::HyperBernoulli { m, n } => {
                let top = Rational::from(*m as i64);
                let bottom = Rational::from((*m + *n) as i64);
                (0..=n_max as u32)
                    .map(|k| {
                        rising_factorial(&top, k)
                            .checked_div(&rising_factorial(&bottom, k))
                            .expect("M + N > 0")
                    })
                    .collect()
            }
            FamilySpec::HyperCauchy { m, n } => {
                let a = Rational::from(*m as i64);
                let b = Rational::from(*n as i64);
                let c = Rational::from(*n as i64 + 1);
                (0..=n_max as u32)
                    .map(|k| {
                        let v = (rising_factorial(&a, k) * rising_factorial(&b, k))
                            .checked_div(&rising_factorial(&c, k))
                            .expect("N + 1 > 0");
                        if k % 2 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            }
            FamilySpec::Custom(d) => {
                if n_max >= d.len() {
                    return Err(Error::InsufficientPrecision {
                        needed: n_max,
                        available: d.len() - 1,
                    });
                }
                d[..=n_max].to_vec()
            }
        };
        CoefficientSequence::new(d)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Bernoulli => f.write_str("bernoulli"),
            FamilySpec::Euler => f.write_str("euler"),
            FamilySpec::HyperBernoulli { m, n } => write!(f, "hyper-bernoulli(M={m},N={n})"),
            FamilySpec::HyperCauchy { m, n } => write!(f, "hyper-cauchy(M={m},N={n})"),
            FamilySpec::Custom(_) => f.write_str("custom"),
        }
    }
}

pub fn family_coefficients(spec: &FamilySpec, n_max: usize) -> Result<CoefficientSequence> {
    spec.coefficients(n_max)
}

/// Parse a custom family: one rational per line, line `k` holding `d_k`.
/// Blank lines and `#` comments are skipped; the first value must be 1.
pub fn parse_custom_family(text: &str) -> Result<Vec<Rational>> {
    let mut d = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: Rational = line
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: not a rational: {line:?}", lineno + 1)))?;
        if d.is_empty() && !v.is_one() {
            return Err(Error::NormalizationViolated(v.to_string()));
        }
        d.push(v);
    }
    if d.is_empty() {
        return Err(Error::Parse("custom family file holds no values".into()));
    }
    Ok(d)
}

pub fn read_custom_family(path: impl AsRef<Path>) -> Result<Vec<Rational>> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_custom_family(&text)
}

/// Result of [`family_identity_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n_max: usize,
    pub first_failure: Option<usize>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// For `1F1(1; 1+N; t)`, check `d_n = n! N! / (N+n)!` for `n ≤ n_max`.
pub fn family_identity_checks(spec: &FamilySpec, n_max: usize) -> Result<IdentityReport> {
    let big_n = match spec {
        FamilySpec::HyperBernoulli { m: 1, n } => *n as usize,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "identity check applies to hyper-bernoulli with M = 1, not {spec}"
            )))
        }
    };
    let seq = spec.coefficients(n_max)?;
    let facts = factorial_table(n_max + big_n);
    let first_failure = (0..=n_max).find(|&k| {
        let closed = (&facts[k] * &facts[big_n])
            .checked_div(&facts[big_n + k])
            .expect("factorials are nonzero");
        seq.d()[k] != closed
    });
    Ok(IdentityReport {
        n_max,
        first_failure,
    })
}
