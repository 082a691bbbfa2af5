//! Exact numbers of the form `Σ q_m √m` with rational `q_m` and square-free `m`.
//!
//! Every value is kept in a canonical form: radicands are square-free, no zero
//! coefficient is stored and the rationals are reduced. Equality of canonical
//! forms is therefore equality of real numbers, because the square roots of
//! distinct square-free integers are linearly independent over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ScalarError;

/// Default bound on the number of independent square roots `invert` accepts.
pub const DEFAULT_MAX_RADICALS: usize = 3;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<u64, BigRational>,
}

/// Factor `m = s² · r` with `r` square-free. Returns `(s, r)`.
fn square_free_split(m: u64) -> (u64, u64) {
    let mut rest = m;
    let mut outside = 1u64;
    let mut radicand = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            radicand *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    radicand *= rest;
    (outside, radicand)
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn is_square_free(m: u64) -> bool {
    m >= 1 && square_free_split(m).0 == 1
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        Scalar { terms }
    }

    /// `num/den` as an exact rational. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `√m` for any natural `m ≥ 1`.
    pub fn sqrt(m: u64) -> Result<Self, ScalarError> {
        Scalar::normalize([(BigRational::one(), m)])
    }

    /// `q · √m`, canonicalized.
    pub fn surd(q: BigRational, m: u64) -> Result<Self, ScalarError> {
        Scalar::normalize([(q, m)])
    }

    /// `√(num/den)` for positive integers, rationalized as `√(num·den)/den`.
    pub fn sqrt_ratio(num: u64, den: u64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let q = BigRational::new(BigInt::one(), BigInt::from(den));
        Scalar::normalize([(q, num.checked_mul(den).ok_or(ScalarError::Overflow)?)])
    }

    /// Canonicalize a raw list of `(coefficient, radicand)` terms.
    pub fn normalize<I>(raw: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = (BigRational, u64)>,
    {
        let mut out = Scalar::zero();
        for (q, m) in raw {
            if m == 0 {
                return Err(ScalarError::InvalidRadicand(m));
            }
            let (outside, radicand) = square_free_split(m);
            out.add_term(radicand, q * BigRational::from_integer(BigInt::from(outside)));
        }
        Ok(out)
    }

    fn add_term(&mut self, radicand: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&radicand) {
            Some(c) => {
                *c += q;
                c.is_zero()
            }
            None => {
                self.terms.insert(radicand, q);
                false
            }
        };
        if remove {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|q| q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&m| m == 1)
    }

    /// The rational value, if the scalar has no surd part.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        Some(self.terms.get(&1).cloned().unwrap_or_else(BigRational::zero))
    }

    /// Canonical `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    pub fn coefficient(&self, radicand: u64) -> BigRational {
        self.terms.get(&radicand).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(m, q)| q.to_f64().unwrap_or(f64::NAN) * (*m as f64).sqrt())
            .sum()
    }

    /// Multiply every coefficient by a rational.
    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn div_int(&self, d: i64) -> Scalar {
        assert!(d != 0, "division of a scalar by zero");
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(d)))
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// Exact sign. A floating evaluation with a conservative error bound is
    /// tried first; if it cannot decide, the sign is resolved exactly by
    /// splitting off one prime radical at a time.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.terms.len() == 1 {
            let (_, q) = self.terms.iter().next().unwrap();
            return if q.is_positive() { 1 } else { -1 };
        }
        let mut approx = 0.0f64;
        let mut magnitude = 0.0f64;
        for (m, q) in &self.terms {
            let t = q.to_f64().unwrap_or(f64::NAN) * (*m as f64).sqrt();
            approx += t;
            magnitude += t.abs();
        }
        if approx.is_finite() && magnitude.is_finite() && approx.abs() > 1e-12 * magnitude {
            return if approx > 0.0 { 1 } else { -1 };
        }
        self.exact_signum()
    }

    fn exact_signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return if self.terms[&1].is_positive() { 1 } else { -1 };
        }
        // Write self = x + y·√p with p a prime dividing some radicand.
        let p = self
            .terms
            .keys()
            .find(|&&m| m != 1)
            .map(|&m| prime_factors(m)[0])
            .unwrap();
        let mut x = Scalar::zero();
        let mut y = Scalar::zero();
        for (m, q) in &self.terms {
            if m % p == 0 {
                y.add_term(m / p, q.clone());
            } else {
                x.add_term(*m, q.clone());
            }
        }
        let sx = x.signum();
        let sy = y.signum();
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return if sx == 0 { sy } else { sx };
        }
        // Opposite signs: compare x² with p·y².
        let p_int = i64::try_from(p).expect("prime fits in i64");
        let diff = &x.square() - &(&y.square() * &Scalar::from_integer(p_int));
        sx * diff.signum()
    }

    pub fn abs(&self) -> Scalar {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse with the default radical bound.
    pub fn invert(&self) -> Result<Scalar, ScalarError> {
        self.invert_bounded(DEFAULT_MAX_RADICALS)
    }

    /// Multiplicative inverse, multiplying by every nontrivial Galois
    /// conjugate so that the denominator becomes rational. Fails when the
    /// radicands span more than `max_radicals` independent square roots.
    pub fn invert_bounded(&self, max_radicals: usize) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Scalar::from_rational(q.recip()));
        }
        let field = RadicalField::spanned_by(self.terms.keys().copied())?;
        if field.rank() > max_radicals {
            return Err(ScalarError::FieldDegreeExceeded {
                radicals: field.rank(),
                bound: max_radicals,
            });
        }
        let mut numerator = Scalar::one();
        for signs in 1u64..(1u64 << field.rank()) {
            numerator = &numerator * &field.conjugate(self, signs);
        }
        let norm = self * &numerator;
        let norm = norm.to_rational().expect("product over all conjugates is rational");
        Ok(numerator.scale(&norm.recip()))
    }

    /// Rational approximation-free comparison.
    pub fn cmp_exact(&self, other: &Scalar) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

/// The multi-quadratic field spanned by a set of square-free radicands,
/// with an F₂-basis of radicands used to enumerate Galois conjugates.
struct RadicalField {
    primes: Vec<u64>,
    /// Basis vectors as bitmasks over `primes`, in echelon form keyed by pivot bit.
    basis: Vec<(u32, u128)>,
}

impl RadicalField {
    fn spanned_by(radicands: impl Iterator<Item = u64>) -> Result<Self, ScalarError> {
        let radicands: Vec<u64> = radicands.filter(|&m| m != 1).collect();
        let mut primes: Vec<u64> = radicands.iter().flat_map(|&m| prime_factors(m)).collect();
        primes.sort_unstable();
        primes.dedup();
        if primes.len() > 128 {
            return Err(ScalarError::Overflow);
        }
        let mut field = RadicalField {
            primes,
            basis: Vec::new(),
        };
        for m in radicands {
            let mut v = field.mask(m);
            for (pivot, b) in &field.basis {
                if v >> pivot & 1 == 1 {
                    v ^= b;
                }
            }
            if v != 0 {
                let pivot = 127 - v.leading_zeros();
                for (_, b) in field.basis.iter_mut() {
                    if *b >> pivot & 1 == 1 {
                        *b ^= v;
                    }
                }
                field.basis.push((pivot, v));
            }
        }
        Ok(field)
    }

    fn mask(&self, m: u64) -> u128 {
        prime_factors(m).into_iter().fold(0u128, |acc, p| {
            let i = self.primes.binary_search(&p).expect("prime in field");
            acc | 1u128 << i
        })
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Apply the automorphism that negates exactly the basis radicals
    /// selected by `signs`.
    fn conjugate(&self, a: &Scalar, signs: u64) -> Scalar {
        let mut out = Scalar::zero();
        for (m, q) in &a.terms {
            let mut v = if *m == 1 { 0 } else { self.mask(*m) };
            let mut flip = false;
            for (i, (pivot, b)) in self.basis.iter().enumerate() {
                if v >> pivot & 1 == 1 {
                    v ^= b;
                    if signs >> i & 1 == 1 {
                        flip = !flip;
                    }
                }
            }
            debug_assert_eq!(v, 0);
            out.add_term(*m, if flip { -q.clone() } else { q.clone() });
        }
        out
    }
}

fn mul_radicands(m: u64, n: u64) -> (u64, u64) {
    let g = m.gcd(&n);
    let r = (m / g).checked_mul(n / g).expect("radicand product overflows u64");
    (g, r)
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, q) in &rhs.terms {
            self.add_term(*m, q.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, q) in &rhs.terms {
            self.add_term(*m, -q.clone());
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m, p) in &self.terms {
            for (n, q) in &rhs.terms {
                let (g, r) = mul_radicands(*m, *n);
                out.add_term(r, p * q * BigRational::from_integer(BigInt::from(g)));
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, q)| (*m, -q.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar { (&self).$f(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar { (&self).$f(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Exact division. Panics if the divisor is zero or spans too many radicals;
/// use [`Scalar::invert`] to handle those cases.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.invert().expect("scalar division")
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_integer(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Renders in the scalar grammar, e.g. `13/30`, `-1/15*sqrt(5)`,
/// `-1/4+1/4*sqrt(5)`. Zero is `0`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, q)) in self.terms.iter().enumerate() {
            if idx > 0 && q.is_positive() {
                write!(f, "+")?;
            }
            write_rational(f, q)?;
            if *m != 1 {
                write!(f, "*sqrt({m})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn error(&self, what: &str) -> ScalarError {
        ScalarError::Parse {
            input: self.src.to_string(),
            reason: format!("{what} at offset {}", self.pos),
        }
    }
}

/// Parses `term (('+'|'-') term)*` with `term := rational ('*sqrt(' natural ')')?`.
/// A leading sign on the first term is accepted. Whitespace is ignored.
impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor {
            bytes: s.as_bytes(),
            pos: 0,
            src: s,
        };
        let mut raw = Vec::new();
        let mut first = true;
        loop {
            let negative = match cur.peek() {
                Some(b'+') if !first => {
                    cur.pos += 1;
                    false
                }
                Some(b'-') => {
                    cur.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return Err(cur.error("expected '+' or '-'")),
            };
            first = false;
            let num: BigInt = cur.digits()?.parse().expect("digit string");
            let den: BigInt = if cur.eat("/") {
                let d: BigInt = cur.digits()?.parse().expect("digit string");
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                d
            } else {
                BigInt::one()
            };
            let mut q = BigRational::new(num, den);
            if negative {
                q = -q;
            }
            let radicand = if cur.eat("*") {
                if !cur.eat("sqrt(") {
                    return Err(cur.error("expected 'sqrt('"));
                }
                let m: u64 = cur.digits()?.parse().map_err(|_| ScalarError::Overflow)?;
                if !cur.eat(")") {
                    return Err(cur.error("expected ')'"));
                }
                m
            } else {
                1
            };
            raw.push((q, radicand));
        }
        Scalar::normalize(raw)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(v) => Ok(Scalar::from_integer(v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_absorbs_square_factors() {
        let v = Scalar::normalize([(q(1, 1), 8)]).unwrap();
        assert_eq!(v, s("2*sqrt(2)"));
        assert_eq!(v.to_string(), "2*sqrt(2)");
    }

    #[test]
    fn normalize_keeps_rationalized_root() {
        let v = Scalar::normalize([(q(1, 3), 6)]).unwrap();
        assert_eq!(v.to_string(), "1/3*sqrt(6)");
        assert_eq!(Scalar::sqrt_ratio(2, 3).unwrap(), v);
    }

    #[test]
    fn normalize_merges_and_cancels() {
        let two = Scalar::normalize([(q(1, 1), 2), (q(1, 1), 2)]).unwrap();
        assert_eq!(two.to_string(), "2*sqrt(2)");
        let zero = Scalar::normalize([(q(1, 1), 2), (q(-1, 1), 2)]).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.terms().count(), 0);
    }

    #[test]
    fn zero_radicand_rejected() {
        assert!(matches!(
            Scalar::normalize([(q(1, 1), 0)]),
            Err(ScalarError::InvalidRadicand(0))
        ));
    }

    #[test]
    fn multiply_radicands() {
        assert_eq!(s("1*sqrt(6)") * s("1*sqrt(30)"), s("6*sqrt(5)"));
        // (1/3)√6 · (1/30)√30 = (6/90)√5
        assert_eq!(s("1/3*sqrt(6)") * s("1/30*sqrt(30)"), s("1/15*sqrt(5)"));
        assert!((s("1/3*sqrt(6)+7") * Scalar::zero()).is_zero());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s("1+1*sqrt(5)").invert().unwrap(), s("-1/4+1/4*sqrt(5)"));
        assert_eq!(s("1*sqrt(30)").invert().unwrap(), s("1/30*sqrt(30)"));
        assert_eq!(s("2/3").invert().unwrap(), s("3/2"));
        assert!(matches!(Scalar::zero().invert(), Err(ScalarError::DivisionByZero)));
    }

    #[test]
    fn invert_respects_radical_bound() {
        let a = s("1+1*sqrt(2)+1*sqrt(3)+1*sqrt(5)+1*sqrt(7)");
        assert!(matches!(
            a.invert(),
            Err(ScalarError::FieldDegreeExceeded { radicals: 4, bound: 3 })
        ));
        let inv = a.invert_bounded(4).unwrap();
        assert!((a * inv).is_one());
    }

    #[test]
    fn dependent_radicals_count_once() {
        // √6, √30 and √5 span only Q(√6, √30), which has two generators.
        let a = s("1+1*sqrt(6)+1*sqrt(30)+1*sqrt(5)");
        let inv = a.invert_bounded(2).unwrap();
        assert!((a * inv).is_one());
    }

    #[test]
    fn float_bridge() {
        assert_eq!(Scalar::zero().to_f64(), 0.0);
        assert!((s("-4/15").to_f64() + 0.266_666_666_666_666_7).abs() < 1e-15);
        assert!((s("6*sqrt(5)").to_f64() - 13.416_407_864_998_74).abs() < 1e-12);
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(s("-2/30*sqrt(5)").to_string(), "-1/15*sqrt(5)");
        assert_eq!(s("13/30").to_string(), "13/30");
        assert_eq!(s("0").to_string(), "0");
        assert_eq!(s(" 1 - 1/2 * sqrt( 8 ) ").to_string(), "1-1*sqrt(2)");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("sqrt(2)".parse::<Scalar>().is_err());
        assert!("1*sqrt(0)".parse::<Scalar>().is_err());
        assert!("1++2".parse::<Scalar>().is_err());
    }

    #[test]
    fn exact_sign_near_cancellation() {
        // 19601² − 2·13860² = 1, so 19601 − 13860√2 is a tiny positive number.
        let tiny = s("19601-13860*sqrt(2)");
        assert_eq!(tiny.signum(), 1);
        assert_eq!((-&tiny).signum(), -1);
        let x = s("1*sqrt(2)+1*sqrt(3)-1*sqrt(10)");
        // 1.4142 + 1.7321 - 3.1623 < 0
        assert_eq!(x.signum(), -1);
        assert_eq!(s("1*sqrt(2)").cmp_exact(&s("7/5")), Ordering::Greater);
    }
}
