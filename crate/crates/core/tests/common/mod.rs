//! Independent oracles and fixtures for the integration tests.

#![allow(dead_code)]

use appell_core::engine::Matrix;
use appell_core::{
    compositions, factorial, CoefficientSequence, CompositionKind, Rational, TruncatedSeries,
};
use rand::Rng;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let p: i64 = rng.random_range(-9..=9);
    let d: i64 = rng.random_range(1..=9);
    Rational::frac(p, d)
}

/// `d_0 = 1` followed by random `p/q` with `|p|, q ≤ 9`.
pub fn random_sequence<R: Rng>(rng: &mut R, n_max: usize) -> CoefficientSequence {
    let mut d = vec![Rational::one()];
    d.extend((0..n_max).map(|_| random_rational(rng)));
    CoefficientSequence::new(d).unwrap()
}

pub fn random_series<R: Rng>(rng: &mut R, order: usize, nonzero_constant: bool) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |m| loop {
        let c = random_rational(rng);
        if m > 0 || !nonzero_constant || !c.is_zero() {
            break c;
        }
    })
}

pub fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// `D_r(e)` straight from the weak-composition sum
/// `Σ_{i_1+⋯+i_r=e} d_{i_1}⋯d_{i_r} / (i_1!⋯i_r!)`.
pub fn d_by_compositions(seq: &CoefficientSequence, r: usize, e: usize) -> Rational {
    compositions(e, r, CompositionKind::Weak, 22)
        .unwrap()
        .map(|parts| {
            parts
                .iter()
                .map(|&i| seq.d()[i].checked_div(&fact(i)).unwrap())
                .product::<Rational>()
        })
        .sum()
}

/// Classical Cauchy numbers `c_n = n! [t^n] t/log(1+t)`, built from the
/// ordinary coefficients `(-1)^n/(n+1)` of `log(1+t)/t`.
pub fn cauchy_by_log_series(n_max: usize) -> Vec<Rational> {
    let log_over_t = TruncatedSeries::from_fn(n_max, |n| {
        let v = Rational::frac(1, n as i64 + 1);
        if n % 2 == 1 {
            -v
        } else {
            v
        }
    });
    let inv = log_over_t.inverse().unwrap();
    inv.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * fact(n))
        .collect()
}

/// Lower-Hessenberg Toeplitz matrix with `entry(k)` on the k-th subdiagonal
/// band (`entry(1)` on the diagonal) and ones on the superdiagonal.
pub fn banded_matrix(n: usize, entry: impl Fn(usize) -> Rational) -> Matrix {
    Matrix::from_fn(n, |i, j| {
        if j <= i {
            entry(i - j + 1)
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Cofactor expansion; exponential, only for tiny matrices.
pub fn laplace_det(a: &Matrix) -> Rational {
    let n = a.dim();
    if n == 0 {
        return Rational::one();
    }
    (0..n)
        .filter(|&j| !a.get(0, j).is_zero())
        .map(|j| {
            let minor = Matrix::from_fn(n - 1, |i, c| {
                a.get(i + 1, if c < j { c } else { c + 1 }).clone()
            });
            let t = a.get(0, j) * laplace_det(&minor);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `n!·[t^n]` of the inverse of `f(t)^r`, multiplying `f` out `r` times by
/// plain Cauchy products.
pub fn naive_related_numbers(seq: &CoefficientSequence, r: u32, n_max: usize) -> Vec<Rational> {
    let f: Vec<Rational> = (0..=n_max)
        .map(|m| seq.d()[m].checked_div(&fact(m)).unwrap())
        .collect();
    let mut h = vec![Rational::zero(); n_max + 1];
    h[0] = Rational::one();
    for _ in 0..r {
        let mut next = vec![Rational::zero(); n_max + 1];
        for i in 0..=n_max {
            for j in 0..=n_max - i {
                next[i + j] += &h[i] * &f[j];
            }
        }
        h = next;
    }
    // h_0 = 1, so b_n = -Σ_{j=1}^{n} h_j b_{n-j}
    let mut b: Vec<Rational> = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = (1..=n).map(|j| &h[j] * &b[n - j]).sum();
        b.push(-s);
    }
    b.iter().enumerate().map(|(n, x)| x * fact(n)).collect()
}

/// Determinant by plain Gaussian elimination over the rationals.
pub fn gauss_det(a: &Matrix) -> Rational {
    let n = a.dim();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&p| !m[p][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        let inv = m[k][k].recip().unwrap();
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in bottom {
            let factor = &row[k] * &inv;
            if factor.is_zero() {
                continue;
            }
            for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}
