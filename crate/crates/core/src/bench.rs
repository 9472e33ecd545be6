//! Timing comparison of the determinant kernels and the recurrence.
//!
//! Every kernel computes `a_n^(r)` for each `n`; timings are only reported
//! once all kernels agree exactly at that `n`. Coefficient generation and
//! the `D_r` table are prepared before any clock starts.

use std::time::{Duration, Instant};

use crate::arith::{factorial_table, Rational};
use crate::engine::{appell_matrix, Kernel, Matrix, PowerCoefficientTable};
use crate::error::{Error, Result};

/// What a kernel sees for one `n`.
pub struct BenchInput<'a> {
    pub n: usize,
    pub d: &'a PowerCoefficientTable,
    pub matrix: &'a Matrix,
}

/// A kernel's answer for `a_n^(r)` and the widest numerator (bits) it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOutput {
    pub value: Rational,
    pub max_numerator_bits: u64,
}

pub type KernelFn = dyn Fn(&BenchInput<'_>) -> Result<KernelOutput> + Send + Sync;

pub struct BenchKernel {
    pub name: String,
    pub run: Box<KernelFn>,
}

impl BenchKernel {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(&BenchInput<'_>) -> Result<KernelOutput> + Send + Sync + 'static,
    ) -> Self {
        BenchKernel {
            name: name.into(),
            run: Box::new(run),
        }
    }
}

#[derive(Clone, Debug)]
pub struct KernelTiming {
    pub kernel: String,
    pub elapsed: Duration,
    pub max_numerator_bits: u64,
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub value: Rational,
    pub timings: Vec<KernelTiming>,
}

fn sign_and_scale(n: usize, det: Rational) -> Rational {
    let v = det * &factorial_table(n)[n];
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

fn determinant_kernel(kernel: Kernel) -> BenchKernel {
    BenchKernel::new(kernel.name(), move |input: &BenchInput<'_>| {
        let (det, bits) = kernel.determinant(input.matrix)?;
        Ok(KernelOutput {
            value: sign_and_scale(input.n, det),
            max_numerator_bits: bits,
        })
    })
}

fn recurrence_kernel() -> BenchKernel {
    BenchKernel::new("recurrence", |input: &BenchInput<'_>| {
        let mut scaled = vec![Rational::one()];
        let mut bits = 1;
        for k in 1..=input.n {
            let s: Rational = (0..k).map(|m| input.d.get(k - m) * &scaled[m]).sum();
            bits = bits.max(s.numer_bits());
            scaled.push(-s);
        }
        let value = &scaled[input.n] * &factorial_table(input.n)[input.n];
        Ok(KernelOutput {
            value,
            max_numerator_bits: bits,
        })
    })
}

/// Hessenberg, Bareiss and the recurrence.
pub fn default_kernels() -> Vec<BenchKernel> {
    vec![
        determinant_kernel(Kernel::Hessenberg),
        determinant_kernel(Kernel::Bareiss),
        recurrence_kernel(),
    ]
}

/// Time every kernel at each `n = 0..=d.n_max()`. Fails with
/// [`Error::KernelDisagreement`] at the first `n` where a kernel departs from
/// the first one, in which case no timings are returned.
pub fn run_bench(d: &PowerCoefficientTable, kernels: &[BenchKernel]) -> Result<Vec<BenchRow>> {
    if kernels.is_empty() {
        return Err(Error::InvalidParameter("no kernels to benchmark".into()));
    }
    let mut rows = Vec::with_capacity(d.n_max() + 1);
    for n in 0..=d.n_max() {
        let matrix = appell_matrix(d, n)?;
        let input = BenchInput {
            n,
            d,
            matrix: &matrix,
        };
        let mut value: Option<Rational> = None;
        let mut timings = Vec::with_capacity(kernels.len());
        for kernel in kernels {
            let start = Instant::now();
            let out = (kernel.run)(&input)?;
            let elapsed = start.elapsed();
            match &value {
                None => value = Some(out.value),
                Some(v) if *v != out.value => {
                    return Err(Error::KernelDisagreement {
                        n,
                        kernel: kernel.name.clone(),
                    })
                }
                Some(_) => {}
            }
            timings.push(KernelTiming {
                kernel: kernel.name.clone(),
                elapsed,
                max_numerator_bits: out.max_numerator_bits,
            });
        }
        rows.push(BenchRow {
            n,
            value: value.expect("kernels is nonempty"),
            timings,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::compute_d;
    use crate::families::FamilySpec;

    fn bernoulli_d(n_max: usize) -> PowerCoefficientTable {
        compute_d(&FamilySpec::Bernoulli.coefficients(n_max).unwrap(), 1).unwrap()
    }

    #[test]
    fn kernels_agree_and_report() {
        let rows = run_bench(&bernoulli_d(12), &default_kernels()).unwrap();
        assert_eq!(rows.len(), 13);
        assert_eq!(rows[12].value, Rational::frac(-691, 2730));
        assert!(rows.iter().all(|r| r.timings.len() == 3));
    }

    #[test]
    fn trivial_size() {
        let rows = run_bench(&bernoulli_d(0), &default_kernels()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].value, Rational::one());
    }

    #[test]
    fn corrupted_kernel_blocks_the_report() {
        let mut kernels = default_kernels();
        kernels.push(BenchKernel::new("broken", |input: &BenchInput<'_>| {
            let (det, bits) = Kernel::Hessenberg.determinant(input.matrix)?;
            let mut value = sign_and_scale(input.n, det);
            if input.n == 4 {
                value += Rational::frac(1, 7);
            }
            Ok(KernelOutput {
                value,
                max_numerator_bits: bits,
            })
        }));
        let err = run_bench(&bernoulli_d(8), &kernels).unwrap_err();
        assert_eq!(
            err,
            Error::KernelDisagreement {
                n: 4,
                kernel: "broken".into()
            }
        );
    }
}
