//! Exact determinant kernels for the lower-Hessenberg matrices whose
//! determinants give the related numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::PowerCoefficientTable;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Dense square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    /// Top-left `k × k` block.
    pub fn leading(&self, k: usize) -> Matrix {
        assert!(k <= self.dim);
        Matrix::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// True when every entry above the first superdiagonal is zero.
    pub fn is_lower_hessenberg(&self) -> bool {
        (0..self.dim).all(|i| (i + 2..self.dim).all(|j| self.get(i, j).is_zero()))
    }
}

/// The `n × n` matrix with `D_r(i-j+1)` on and below the diagonal, ones on
/// the superdiagonal and zeros above it (0-indexed).
pub fn appell_matrix(d: &PowerCoefficientTable, n: usize) -> Result<Matrix> {
    if n > d.n_max() {
        return Err(Error::InsufficientPrecision {
            needed: n,
            available: d.n_max(),
        });
    }
    Ok(Matrix::from_fn(n, |i, j| {
        if j <= i {
            d.get(i - j + 1).clone()
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// Leading principal minors `det_0 = 1, det_1, …, det_n` together with the
/// largest numerator (in bits) seen along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTrace {
    pub minors: Vec<Rational>,
    pub max_numerator_bits: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// O(n²) leading-minor recurrence for lower-Hessenberg matrices.
    Hessenberg,
    /// Fraction-free elimination over an integer lift of each minor.
    Bareiss,
}

impl Kernel {
    pub const ALL: [Kernel; 2] = [Kernel::Hessenberg, Kernel::Bareiss];

    pub fn name(self) -> &'static str {
        match self {
            Kernel::Hessenberg => "hessenberg",
            Kernel::Bareiss => "bareiss",
        }
    }

    pub fn leading_minors(self, m: &Matrix) -> Result<MinorTrace> {
        match self {
            Kernel::Hessenberg => hessenberg_leading_minors(m),
            Kernel::Bareiss => Ok(bareiss_leading_minors(m)),
        }
    }

    /// Determinant of the whole matrix, with the bit-growth figure.
    pub fn determinant(self, m: &Matrix) -> Result<(Rational, u64)> {
        match self {
            Kernel::Hessenberg => {
                let trace = hessenberg_leading_minors(m)?;
                let det = trace
                    .minors
                    .last()
                    .cloned()
                    .expect("det_0 is always present");
                Ok((det, trace.max_numerator_bits))
            }
            Kernel::Bareiss => Ok(bareiss_determinant(m)),
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kernel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hessenberg" => Ok(Kernel::Hessenberg),
            "bareiss" => Ok(Kernel::Bareiss),
            _ => Err(Error::Parse(format!("unknown kernel {s:?}"))),
        }
    }
}

/// All leading principal minors of a lower-Hessenberg matrix by expanding
/// each along its last row:
/// `det_k = Σ_{j=1}^{k} (-1)^{k-j} h[k][j] · h[j][j+1]⋯h[k-1][k] · det_{j-1}`
/// (1-indexed).
pub fn hessenberg_leading_minors(m: &Matrix) -> Result<MinorTrace> {
    if !m.is_lower_hessenberg() {
        return Err(Error::InvalidParameter(
            "matrix is not lower Hessenberg".into(),
        ));
    }
    let n = m.dim();
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(Rational::one());
    let mut max_bits = 0;
    for k in 1..=n {
        let mut acc = Rational::zero();
        // superdiagonal product h[j][j+1]⋯h[k-1][k], grown as j moves left
        let mut chain = Rational::one();
        for j in (1..=k).rev() {
            if j < k {
                chain *= m.get(j - 1, j);
                if chain.is_zero() {
                    break;
                }
            }
            let h = m.get(k - 1, j - 1);
            if h.is_zero() {
                continue;
            }
            let term = h * &chain * &minors[j - 1];
            if (k - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        max_bits = max_bits.max(acc.numer_bits());
        minors.push(acc);
    }
    Ok(MinorTrace {
        minors,
        max_numerator_bits: max_bits,
    })
}

/// Determinant by Bareiss elimination. Each row is scaled by the lcm of its
/// denominators so elimination runs over integers; the scale is divided out
/// at the end. Returns the value and the widest intermediate integer in bits.
pub fn bareiss_determinant(m: &Matrix) -> (Rational, u64) {
    let n = m.dim();
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = (0..n).fold(BigInt::one(), |acc, j| acc.lcm(m.get(i, j).denom()));
        rows.push(
            (0..n)
                .map(|j| {
                    let e = m.get(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect(),
        );
        scale *= lcm;
    }
    let (det, bits) = bareiss_integer_determinant(rows);
    let value = Rational::new(det, scale).expect("row scales are positive");
    (value, bits)
}

/// Leading minors via one Bareiss run per size.
pub fn bareiss_leading_minors(m: &Matrix) -> MinorTrace {
    let mut minors = Vec::with_capacity(m.dim() + 1);
    let mut max_bits = 0;
    minors.push(Rational::one());
    for k in 1..=m.dim() {
        let (det, bits) = bareiss_determinant(&m.leading(k));
        max_bits = max_bits.max(bits);
        minors.push(det);
    }
    MinorTrace {
        minors,
        max_numerator_bits: max_bits,
    }
}

/// Fraction-free Gaussian elimination with row pivoting. Every division is
/// exact.
pub fn bareiss_integer_determinant(mut a: Vec<Vec<BigInt>>) -> (BigInt, u64) {
    let n = a.len();
    let mut max_bits = a.iter().flatten().map(|x| x.bits()).max().unwrap_or(0);
    if n == 0 {
        return (BigInt::one(), max_bits);
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return (BigInt::zero(), max_bits),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = (&row[j] * pivot - &lead * &pivot_row[j]) / &prev;
                max_bits = max_bits.max(v.bits());
                row[j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    (if negate { -det } else { det }, max_bits)
}
