//! Real root isolation by Sturm sequences with exact sign evaluation, and
//! bisection refinement on rational intervals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ScalarError;
use crate::linalg::Matrix;
use crate::poly::{char_poly, ExactPolynomial};
use crate::scalar::Scalar;

pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-12;

pub fn sturm_sequence(p: &ExactPolynomial) -> Result<Vec<ExactPolynomial>, ScalarError> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        // Positive rescaling keeps the sign pattern and stops coefficient growth.
        let lead = r.leading().expect("nonzero remainder").abs().invert()?;
        seq.push(r.neg().scale(&lead));
    }
    Ok(seq)
}

/// Evaluation at rational points, with a plain rational path when every
/// coefficient is rational.
enum Evaluator {
    Rational(Vec<Vec<BigRational>>),
    Exact(Vec<ExactPolynomial>),
}

impl Evaluator {
    fn new(seq: Vec<ExactPolynomial>) -> Self {
        if seq.iter().all(|p| p.coeffs().iter().all(Scalar::is_rational)) {
            Evaluator::Rational(
                seq.iter()
                    .map(|p| p.coeffs().iter().map(|c| c.to_rational().expect("rational")).collect())
                    .collect(),
            )
        } else {
            Evaluator::Exact(seq)
        }
    }

    fn signs(&self, x: &BigRational) -> Vec<i32> {
        match self {
            Evaluator::Rational(seq) => seq
                .iter()
                .map(|c| {
                    let v = c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a);
                    if v.is_zero() {
                        0
                    } else if v.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .collect(),
            Evaluator::Exact(seq) => {
                let x = Scalar::from_rational(x.clone());
                seq.iter().map(|p| p.eval(&x).signum()).collect()
            }
        }
    }
}

/// Sign changes of the sequence at `x`, zeros skipped.
fn sign_changes(seq: &Evaluator, x: &BigRational) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in seq.signs(x) {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// A real root isolated in `(lo, hi]`, or exactly located when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

fn rational_from_f64_ceil(x: f64) -> BigRational {
    BigRational::from_integer(BigInt::from(x.ceil() as i64))
}

/// An integer strictly greater than the absolute value of every root.
fn cauchy_bound(p: &ExactPolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero polynomial").to_f64().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.to_f64().abs())
        .fold(0.0, f64::max);
    rational_from_f64_ceil((1.0 + max / lead) * 1.01 + 1.0)
}

/// Isolate the distinct real roots of `p` and refine each to an interval of
/// width below `tol`. Roots are returned in increasing order.
pub fn isolate_real_roots(p: &ExactPolynomial, tol: f64) -> Result<Vec<RootInterval>, ScalarError> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let seq = Evaluator::new(sturm_sequence(p)?);
    let bound = cauchy_bound(p);
    let eps = BigRational::from_float(tol).unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(10).pow(12)));
    let count = |lo: &BigRational, hi: &BigRational| sign_changes(&seq, lo) - sign_changes(&seq, hi);
    let two = BigRational::from_integer(2.into());
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let k = count(&lo, &hi);
        if k == 0 {
            continue;
        }
        if k > 1 {
            let mid = (&lo + &hi) / &two;
            // Push the upper half first so roots come out in increasing order.
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
            continue;
        }
        let (mut lo, mut hi) = (lo, hi);
        loop {
            if &hi - &lo < eps {
                out.push(RootInterval { lo, hi });
                break;
            }
            let mid = (&lo + &hi) / &two;
            if seq.signs(&mid)[0] == 0 {
                out.push(RootInterval {
                    lo: mid.clone(),
                    hi: mid,
                });
                break;
            }
            if count(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// Real roots of the characteristic polynomial with multiplicities from the
/// exact square-free decomposition.
pub fn numeric_spectrum(m: &Matrix<Scalar>) -> Result<Vec<SpectrumEntry>, ScalarError> {
    polynomial_spectrum(&char_poly(m), DEFAULT_ROOT_TOLERANCE)
}

pub fn polynomial_spectrum(f: &ExactPolynomial, tol: f64) -> Result<Vec<SpectrumEntry>, ScalarError> {
    let mut out = Vec::new();
    for (factor, multiplicity) in f.squarefree_decomposition()? {
        for root in isolate_real_roots(&factor, tol)? {
            out.push(SpectrumEntry {
                value: root.midpoint(),
                multiplicity,
            });
        }
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(out)
}

/// Sum of multiplicities, i.e. the number of real eigenvalues with repetition.
pub fn total_multiplicity(spectrum: &[SpectrumEntry]) -> usize {
    spectrum.iter().map(|e| e.multiplicity).sum()
}
