//! Univariate polynomials over [`Scalar`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ScalarError;
use crate::linalg::{Coeff, Matrix};
use crate::scalar::Scalar;

/// Coefficients in ascending degree. The zero polynomial has no coefficients
/// and there are never trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<Scalar>,
}

/// Serialized as the ascending coefficient list.
impl Serialize for ExactPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<Scalar>::deserialize(d).map(ExactPolynomial::new)
    }
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial::default()
    }

    pub fn constant(c: Scalar) -> Self {
        ExactPolynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        ExactPolynomial::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `x − root`.
    pub fn linear(root: &Scalar) -> Self {
        ExactPolynomial::new(vec![-root, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(M)` by Horner's scheme.
    pub fn eval_matrix(&self, m: &Matrix<Scalar>) -> Matrix<Scalar> {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(n, n), |acc, c| acc.matmul(m).add_scaled_identity(c))
    }

    pub fn derivative(&self) -> Self {
        ExactPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        ExactPolynomial::new((0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        ExactPolynomial::new((0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        ExactPolynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(ExactPolynomial::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Fails only if the divisor is zero or its leading
    /// coefficient cannot be inverted within the radical bound.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ScalarError> {
        let dlead = divisor.leading().ok_or(ScalarError::DivisionByZero)?;
        let inv = dlead.invert()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((ExactPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((ExactPolynomial::new(quot), ExactPolynomial::new(rem)))
    }

    pub fn monic(&self) -> Result<Self, ScalarError> {
        match self.leading() {
            None => Ok(ExactPolynomial::zero()),
            Some(l) => Ok(self.scale(&l.invert()?)),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm. The gcd of
    /// two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Result<Self, ScalarError> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            // Keep remainders monic to limit coefficient growth.
            a = b;
            b = r.monic()?;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `f = lc · Π a_i^i` with each `a_i`
    /// monic, square-free and pairwise coprime. Returns the nonconstant
    /// factors with their multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, ScalarError> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        let f = self.monic()?;
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_rem(&a0)?.0;
        let mut c = df.div_rem(&a0)?.0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a)?.0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a)?.0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }
}

/// Descending-degree rendering such as `x^2-13/66*x-8/363`; multi-term
/// coefficients are parenthesized.
impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let multi = c.terms().count() > 1;
            let negative = !multi && text.starts_with('-');
            let body = if negative { &text[1..] } else { &text[..] };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            first = false;
            let monomial = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                if multi {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if body == "1" {
                write!(f, "{monomial}")?;
            } else if multi {
                write!(f, "({body})*{monomial}")?;
            } else {
                write!(f, "{body}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Ascending coefficients `c_0 … c_n` of `det(x·I − M)` by the
/// Faddeev–LeVerrier recurrence: `N_k = M·N_{k−1} + c_{n−k+1}·I`,
/// `c_{n−k} = −tr(M·N_k)/k`. Only ring operations and division by the
/// integers `1..=n` are used.
pub fn faddeev_leverrier<T: Coeff>(m: &Matrix<T>) -> Vec<T> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut nk: Matrix<T> = Matrix::zeros(n, n);
    for k in 1..=n {
        nk = m.matmul(&nk).add_scaled_identity(&coeffs[n - k + 1]);
        let tr = m.matmul(&nk).trace();
        coeffs[n - k] = tr.div_int(k as i64).neg();
    }
    coeffs
}

/// Monic characteristic polynomial `det(x·I − M)`.
pub fn char_poly(m: &Matrix<Scalar>) -> ExactPolynomial {
    ExactPolynomial::new(faddeev_leverrier(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexScalar;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn p(cs: &[&str]) -> ExactPolynomial {
        ExactPolynomial::new(cs.iter().map(|c| s(c)).collect())
    }

    #[test]
    fn identity_char_poly() {
        let f = char_poly(&Matrix::identity(2));
        assert_eq!(f, p(&["1", "-2", "1"]));
        assert_eq!(f.to_string(), "x^2-2*x+1");
    }

    #[test]
    fn mixed_sub_block_char_poly() {
        // [[8, 2√22], [2√22, 5]] / 66: trace 13/66, det (40 − 88)/4356.
        let m = Matrix::from_rows(vec![
            vec![s("8/66"), s("2/66*sqrt(22)")],
            vec![s("2/66*sqrt(22)"), s("5/66")],
        ]);
        let f = char_poly(&m);
        assert_eq!(f, p(&["-48/4356", "-13/66", "1"]));
        assert!(f.eval(&s("16/66")).is_zero());
        assert!(f.eval(&s("-3/66")).is_zero());
    }

    #[test]
    fn gcd_simple() {
        let f = p(&["1", "-2", "1"]);
        let g = p(&["-2", "2"]);
        assert_eq!(f.gcd(&g).unwrap(), p(&["-1", "1"]));
        assert_eq!(f.gcd(&ExactPolynomial::zero()).unwrap(), f);
    }

    #[test]
    fn gcd_with_surds() {
        // (x − √2)(x − 1) and (x − √2)(x + 3)
        let r = ExactPolynomial::linear(&s("1*sqrt(2)"));
        let a = r.mul(&ExactPolynomial::linear(&s("1")));
        let b = r.mul(&ExactPolynomial::linear(&s("-3")));
        assert_eq!(a.gcd(&b).unwrap(), r);
    }

    #[test]
    fn yun_decomposition() {
        let a = ExactPolynomial::linear(&s("1"));
        let b = ExactPolynomial::linear(&s("1*sqrt(5)"));
        let c = ExactPolynomial::linear(&s("-2/3"));
        let f = a.mul(&b.pow(2)).mul(&c.pow(3)).scale(&s("7"));
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(a, 1), (b, 2), (c, 3)]);
    }

    #[test]
    fn division_identity() {
        let a = p(&["3", "0", "1/2*sqrt(3)", "1", "-2"]);
        let b = p(&["1*sqrt(3)", "1", "1"]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn complex_faddeev_leverrier() {
        // H = [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let i = ComplexScalar::new(Scalar::zero(), Scalar::one());
        let h = Matrix::from_rows(vec![
            vec![ComplexScalar::one(), i.clone()],
            vec![i.neg(), ComplexScalar::one()],
        ]);
        let c = faddeev_leverrier(&h);
        assert_eq!(c[0], ComplexScalar::zero());
        assert_eq!(c[1], ComplexScalar::new(s("-2"), Scalar::zero()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactPolynomial::linear(&s("4/15")).to_string(), "x-4/15");
        assert_eq!(
            p(&["1+1*sqrt(2)", "-1/2*sqrt(3)", "-1"]).to_string(),
            "-x^2-1/2*sqrt(3)*x+(1+1*sqrt(2))"
        );
        assert_eq!(ExactPolynomial::zero().to_string(), "0");
    }
}
